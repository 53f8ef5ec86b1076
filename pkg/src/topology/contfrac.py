"""
contfrac.py - Fractions continues et pentes projectives
Convention [r_n, ..., r_1] = -1/(r_n - 1/(... - 1/r_1)) et identités
de coefficients du Montesinos trick.

Toute l'arithmétique est entière et exacte (aucun flottant).
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union


@dataclass(frozen=True)
class Slope:
    """
    Pente réduite p/q de la droite projective rationnelle (∞ = 1/0).

    La forme canonique est imposée à la construction : gcd(|p|, |q|) = 1,
    q >= 0, et ∞ s'écrit toujours 1/0.
    """
    num: int
    den: int

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if num == 0 and den == 0:
            raise ValueError("❌ Pente invalide : 0/0 n'est pas un point de la droite projective")
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def infinity(cls) -> "Slope":
        return cls(1, 0)

    @classmethod
    def from_int(cls, value: int) -> "Slope":
        return cls(value, 1)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Slope":
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Lit 'p/q', 'p' ou 'inf'."""
        text = text.strip()
        if text.lower() in ("inf", "∞"):
            return cls.infinity()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return cls(int(num), int(den))
            return cls(int(text), 1)
        except ValueError as e:
            raise ValueError(f"❌ Pente illisible : '{text}' ({e})")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("❌ La pente ∞ n'a pas de valeur rationnelle finie")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class ContinuedFraction:
    """Suite de coefficients (r_n, ..., r_1), coefficient dominant en premier."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("❌ Une fraction continue doit avoir au moins un coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


class ExpansionStyle(str, Enum):
    """Styles de développement acceptés par cf_expand."""
    ALTERNATING_NONNEGATIVE = "alternating-nonnegative"  # (-b_n, b_{n-1}, ..., -b_1), b_j >= 0
    ODD_LENGTH = "odd-length"                            # longueur impaire quelconque


CFLike = Union[ContinuedFraction, Sequence[int]]


def _as_cf(cf: CFLike) -> ContinuedFraction:
    if isinstance(cf, ContinuedFraction):
        return cf
    return ContinuedFraction(tuple(cf))


def cf_eval(cf: CFLike) -> Slope:
    """
    Évalue [r_n, ..., r_1] en arithmétique projective exacte.

    On travaille en coordonnées homogènes (a, b) ~ a/b : l'étape
    v -> r - 1/v est la matrice [[r, -1], [1, 0]] de déterminant 1, donc
    (0, 0) n'apparaît jamais et ∞ se propage sans cas particulier.

    Args:
        cf: fraction continue ou suite d'entiers

    Returns:
        La pente canonique correspondante
    """
    coeffs = _as_cf(cf).coeffs
    a, b = coeffs[-1], 1
    for r in reversed(coeffs[:-1]):
        a, b = r * a - b, a
    return Slope(-b, a)


def regular_expansion(value: Fraction) -> List[int]:
    """Fraction continue régulière [c0; c1, ..., ck] d'un rationnel >= 0."""
    if value < 0:
        raise ValueError(f"❌ Développement régulier réservé aux rationnels positifs, reçu {value}")
    terms = []
    num, den = value.numerator, value.denominator
    while den:
        q, rem = divmod(num, den)
        terms.append(q)
        num, den = den, rem
    return terms


def regular_to_alternating(terms: Sequence[int]) -> List[int]:
    """
    Passe de q/p = b_n + 1/(b_{n-1} + ...) à p/q = [-b_n, b_{n-1}, ..., -b_1].

    La longueur est rendue impaire par [.., c] = [.., c-1, 1].
    """
    b = list(terms)
    if len(b) % 2 == 0:
        b[-1] -= 1
        b.append(1)
    return [-v if i % 2 == 0 else v for i, v in enumerate(b)]


def _negative_expansion(slope: Slope) -> List[int]:
    # T = -1/s, puis T = r - 1/T' avec r = ceil(T) : développement de Hirzebruch-Jung
    if slope.num == 0:
        return [0, 0]
    t = Fraction(-slope.den, slope.num)
    coeffs = []
    while True:
        r = -((-t.numerator) // t.denominator)
        coeffs.append(r)
        rest = r - t
        if rest == 0:
            return coeffs
        t = 1 / rest


def make_odd(coeffs: Sequence[int]) -> List[int]:
    """Applique [r_n, ..., r_1] = [r_n, ..., r_1 + 1, 1] si la longueur est paire."""
    coeffs = list(coeffs)
    if len(coeffs) % 2 == 0:
        coeffs[-1] += 1
        coeffs.append(1)
    return coeffs


def cf_expand(s: Slope, style: ExpansionStyle = ExpansionStyle.ODD_LENGTH) -> ContinuedFraction:
    """
    Développe une pente finie en fraction continue de longueur impaire.

    Args:
        s: pente finie
        style: ALTERNATING_NONNEGATIVE (exige s > 0) ou ODD_LENGTH

    Returns:
        Une fraction continue telle que cf_eval(résultat) = s

    Raises:
        ValueError: si s = ∞, ou si s <= 0 en style alterné
    """
    style = ExpansionStyle(style)
    if s.is_infinite:
        raise ValueError("❌ cf_expand : la pente ∞ n'a pas de développement fini")

    if style is ExpansionStyle.ALTERNATING_NONNEGATIVE:
        if s.num <= 0:
            raise ValueError(f"❌ Style alterné positif : la pente doit être > 0, reçu {s}")
        terms = regular_expansion(Fraction(s.den, s.num))
        return ContinuedFraction(tuple(regular_to_alternating(terms)))

    return ContinuedFraction(tuple(make_odd(_negative_expansion(s))))


def _check_montesinos_input(s: Slope) -> None:
    if s.is_infinite or s.num < 0:
        raise ValueError(
            f"❌ Montesinos trick : p/q doit être finie avec p, q >= 0, reçu {s}"
        )


def montesinos_triple(s: Slope) -> Tuple[Slope, Slope, Slope]:
    """Coefficients (+1, -q/(p+q), -p/(p+q)) de la chirurgie sur C_ν ∪ C_μ ∪ C_λ."""
    _check_montesinos_input(s)
    p, q = s.num, s.den
    return Slope(1, 1), Slope(-q, p + q), Slope(-p, p + q)


def montesinos_triple_cf(s: Slope) -> Tuple[ContinuedFraction, ContinuedFraction]:
    """
    Formes continues de -p/(p+q) et -q/(p+q) à partir de p/q = [r_n, ..., r_1].

    Returns:
        ([1 - r_n, -r_{n-1}, ..., -r_1], [1, r_n, ..., r_1])
    """
    _check_montesinos_input(s)
    style = ExpansionStyle.ALTERNATING_NONNEGATIVE if s.num > 0 else ExpansionStyle.ODD_LENGTH
    r = cf_expand(s, style).coeffs
    minus_p = (1 - r[0],) + tuple(-c for c in r[1:])
    minus_q = (1,) + r
    return ContinuedFraction(minus_p), ContinuedFraction(minus_q)


def coprime_pairs(limit: int) -> Iterable[Tuple[int, int]]:
    """Couples (p, q) premiers entre eux avec 1 <= p, q <= limit."""
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            if gcd(p, q) == 1:
                yield p, q
