"""
traintrack.py - Poids du train track encadré des p/q-lashings de P^{α,m}
Récurrence (**) sur les poids (x_i, y_i), formes closes pour n = 3 et
formules de tresse positive (pente de la chirurgie alternée, genre imprimé).
"""
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Tuple


@dataclass(frozen=True)
class LashingParams:
    """
    Paramètres d'une p/q-lashing de P^{α,m}, α = σ_{n̄}^{ε_n a_n} ... σ_2^{a_2} σ_1^{-a_1}.

    a est stocké (a_1, ..., a_n) ; a_n = 0 est autorisé.
    """
    a: Tuple[int, ...]
    m: int
    p: int
    q: int

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise ValueError("❌ La suite a doit contenir au moins un coefficient")
        if any(v < 0 for v in a) or self.m < 0 or self.p < 0 or self.q < 0:
            raise ValueError(f"❌ Paramètres négatifs interdits : a={a}, m={self.m}, p={self.p}, q={self.q}")
        if (self.p, self.q) == (0, 0) or gcd(self.p, self.q) != 1:
            raise ValueError(f"❌ p et q doivent être premiers entre eux : p={self.p}, q={self.q}")

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class TrackWeights:
    """Poids (x_0..x_n) et (y_0..y_n) des branches du train track."""
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]

    def __post_init__(self):
        xs, ys = self.xs, self.ys
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("❌ Suites de poids de longueurs incohérentes")
        if xs[0] != 0 or ys[0] != 0 or ys[1] != 0:
            raise ValueError("❌ Conditions initiales x_0 = y_0 = y_1 = 0 violées")
        for i in range(1, len(xs)):
            if xs[i] < xs[i - 1]:
                raise ValueError(f"❌ x n'est pas croissante au rang {i}")
            if i >= 2 and i % 2 == 0 and xs[i] != xs[i - 1]:
                raise ValueError(f"❌ x_{i} doit égaler x_{i - 1}")
            if i >= 3 and i % 2 == 1 and ys[i] != ys[i - 1]:
                raise ValueError(f"❌ y_{i} doit égaler y_{i - 1}")

    @property
    def x_n(self) -> int:
        return self.xs[-1]

    @property
    def y_n(self) -> int:
        return self.ys[-1]


class SwitchReport(NamedTuple):
    holds: bool
    equality: bool
    m_and_a1_zero: bool
    x_n: int
    bound: int


def weights(params: LashingParams) -> TrackWeights:
    """
    Applique la récurrence (**).

    Args:
        params: paramètres de la lashing

    Returns:
        Les poids (x_i, y_i) pour i = 0..n
    """
    a, m, p, q = params.a, params.m, params.p, params.q
    xs = [0, (a[0] + 2) * (p + (m + 1) * (p + q))]
    ys = [0, 0]
    for i in range(2, params.n + 1):
        a_i = a[i - 1]
        if i % 2 == 0:
            xs.append(xs[-1])
            ys.append(ys[-1] + a_i * (xs[-2] - 2 * p - q))
        else:
            xs.append(xs[-1] + a_i * (ys[-1] + p + (m + 1) * (p + q)))
            ys.append(ys[-1])
    return TrackWeights(tuple(xs), tuple(ys))


def weights_closed_n3(params: LashingParams) -> Tuple[int, int]:
    """Formes closes (x_3, y_3) lues sur le train track encadré."""
    if params.n != 3:
        raise ValueError(f"❌ Formes closes disponibles seulement pour n = 3, reçu n = {params.n}")
    a1, a2, a3 = params.a
    m, p, q = params.m, params.p, params.q
    core = a3 * a2 * (a1 + 2) + a3 + a1 + 2
    x3 = (core * (m + 2) - 2 * a3 * a2) * p + (core * (m + 1) - a3 * a2) * q
    y3 = (a2 * (a1 + 2) * (m + 2) - 2 * a2) * p + (a2 * (a1 + 2) * (m + 1) - a2) * q
    return x3, y3


def lambda_alt(params: LashingParams) -> int:
    """Pente entière de la chirurgie alternée."""
    w = weights(params)
    x, y = w.x_n, w.y_n
    m, p, q = params.m, params.p, params.q
    return (
        (3 + m) * p ** 2 + m * q ** 2 + x ** 2 + x * y
        + (-4 * x - m * x - 2 * y) * p
        + (-x - m * x - y) * q
        + (1 + 2 * m) * p * q
    )


def genus_formula_printed(params: LashingParams) -> int:
    """
    Valeur du polynôme de genre tel qu'imprimé.

    Ce n'est PAS le genre de référence : la valeur est seulement rapportée
    et comparée aux genres tabulés (voir genus_residual).
    """
    w = weights(params)
    x, y = w.x_n, w.y_n
    m, p, q = params.m, params.p, params.q
    return (
        1 + (5 + 2 * m) * p ** 2 + (1 + 2 * m) * q ** 2 - 2 * x + x ** 2 + x * y
        + (4 + m - 4 * x - m * x - 2 * y) * p
        + (1 + m - x - m * x - y) * q
        + (4 + 4 * m) * p * q
    )


def genus_residual(params: LashingParams, table_genus: int) -> int:
    """Écart printed - 2·g - y_n observé entre le polynôme imprimé et un genre tabulé."""
    return genus_formula_printed(params) - 2 * table_genus - weights(params).y_n


def switch_condition(params: LashingParams) -> SwitchReport:
    """Vérifie x_n >= (m+2)(p+q) + 2p, condition des isotopies vers une tresse positive."""
    x_n = weights(params).x_n
    m, p, q = params.m, params.p, params.q
    bound = (m + 2) * (p + q) + 2 * p
    return SwitchReport(
        holds=x_n >= bound,
        equality=x_n == bound,
        m_and_a1_zero=(m == 0 and params.a[0] == 0),
        x_n=x_n,
        bound=bound,
    )


def strand_count_model(params: LashingParams) -> int:
    """
    Modèle conjectural x_n - 2p - q du nombre de brins de la tresse fermée.

    Une valeur < 1 signale que le modèle ne s'applique pas.
    """
    return weights(params).x_n - 2 * params.p - params.q


def order_polynomial(a: Tuple[int, ...], m: int) -> Tuple[int, int, int]:
    """
    Coefficients (A, B, C) de λ_alt = A p² + B pq + C q².

    x_n et y_n sont linéaires homogènes en (p, q), donc λ_alt est une forme
    quadratique ; trois évaluations suffisent.
    """
    at_p = lambda_alt(LashingParams(tuple(a), m, 1, 0))
    at_q = lambda_alt(LashingParams(tuple(a), m, 0, 1))
    at_pq = lambda_alt(LashingParams(tuple(a), m, 1, 1))
    return at_p, at_pq - at_p - at_q, at_q
