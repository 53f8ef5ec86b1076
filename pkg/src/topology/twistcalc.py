"""
twistcalc.py - Calcul des twists de Dehn sur H_1 du tore épointé T
Action de SL(2,Z) dans la base orientée <μ, λ>, pentes des familles
tordues et nombres d'intersection des courbes de bord.
"""
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from sympy import ImmutableMatrix

from src.topology.contfrac import Slope

PHI_MU = ImmutableMatrix([[1, 1], [0, 1]])
PHI_LAMBDA = ImmutableMatrix([[1, 0], [-1, 1]])
IDENTITY = ImmutableMatrix([[1, 0], [0, 1]])


@dataclass(frozen=True, eq=False)
class CurveClass:
    """
    Classe p[μ] + q[λ] d'une courbe simple essentielle de T.

    Le représentant orienté fourni est conservé (les formules de
    l'intersection dépendent de l'orientation relative de K et L) ;
    l'égalité et le hachage passent par le représentant canonique.
    """
    mu_coeff: int
    lambda_coeff: int

    def __post_init__(self):
        if self.mu_coeff == 0 and self.lambda_coeff == 0:
            raise ValueError("❌ La classe nulle ne représente aucune courbe essentielle")
        if gcd(self.mu_coeff, self.lambda_coeff) != 1:
            raise ValueError(
                f"❌ Coefficients non premiers entre eux : ({self.mu_coeff}, {self.lambda_coeff})"
            )

    @classmethod
    def parse(cls, text: str) -> "CurveClass":
        """Lit 'p,q'."""
        try:
            p, q = (int(v) for v in text.split(","))
        except ValueError:
            raise ValueError(f"❌ Classe de courbe illisible : '{text}' (attendu 'p,q')")
        return cls(p, q)

    def canonical(self) -> "CurveClass":
        p, q = self.mu_coeff, self.lambda_coeff
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return CurveClass(p, q)

    @property
    def slope(self) -> Slope:
        return Slope(self.mu_coeff, self.lambda_coeff)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveClass):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.mu_coeff, a.lambda_coeff) == (b.mu_coeff, b.lambda_coeff)

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.mu_coeff, c.lambda_coeff))

    def __str__(self) -> str:
        return f"({self.mu_coeff}, {self.lambda_coeff})"


@dataclass(frozen=True)
class TwistWord:
    """Exposants (r_n, ..., r_1) de φ_λ^{r_n} ∘ ... ∘ φ_μ^{r_2} ∘ φ_λ^{r_1}."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        # longueur paire : on préfixe un exposant nul
        if len(coeffs) % 2 == 0:
            coeffs = (0,) + coeffs
        object.__setattr__(self, "coeffs", coeffs)


def _as_word(w) -> TwistWord:
    return w if isinstance(w, TwistWord) else TwistWord(tuple(w))


def twist_matrix(w: TwistWord) -> ImmutableMatrix:
    """
    Matrice de la composition des twists, φ_λ^{r_1} agissant en premier.

    Returns:
        Matrice 2x2 entière de déterminant 1
    """
    coeffs = _as_word(w).coeffs
    result = IDENTITY
    # r_1 est le dernier coefficient ; il porte φ_λ, puis on alterne
    for k, r in enumerate(reversed(coeffs)):
        generator = PHI_LAMBDA if k % 2 == 0 else PHI_MU
        result = (generator ** r) * result
    return ImmutableMatrix(result)


def twist_slope(w: TwistWord) -> Slope:
    """Pente de l'image de μ = (1, 0) par twist_matrix(w)."""
    image = twist_matrix(w) * ImmutableMatrix([1, 0])
    return Slope(int(image[0]), int(image[1]))


def _unimodular(K: CurveClass, L: CurveClass) -> int:
    det = K.mu_coeff * L.lambda_coeff - L.mu_coeff * K.lambda_coeff
    if abs(det) != 1:
        raise ValueError(f"❌ Paire non unimodulaire : K={K}, L={L} (déterminant {det})")
    return det


def twist_family_slope(K: CurveClass, L: CurveClass, N: int) -> CurveClass:
    """Classe (p + N p', q + N q') de la (p+Np')/(q+Nq')-lashing."""
    _unimodular(K, L)
    return CurveClass(K.mu_coeff + N * L.mu_coeff, K.lambda_coeff + N * L.lambda_coeff).canonical()


def intersection_profile(K: CurveClass, L: CurveClass, n: int) -> Tuple[int, int, int]:
    """
    Nombres d'intersection minimaux de K^n = φ_L^n(K) avec μ, λ et ν.

    Args:
        K: classe (p, q)
        L: classe (r, s), |rq - ps| = 1
        n: nombre de twists

    Returns:
        (Δμ, Δλ, Δν)
    """
    _unimodular(K, L)
    along_mu = K.mu_coeff + L.mu_coeff * n
    along_lambda = K.lambda_coeff + L.lambda_coeff * n
    d_mu, d_lambda = abs(along_lambda), abs(along_mu)
    # zéro compte comme de même signe que l'autre coordonnée
    same_sign = along_mu * along_lambda >= 0
    d_nu = d_mu + d_lambda if same_sign else d_mu + d_lambda - 2
    return d_mu, d_lambda, d_nu


def _is_stable(profile: Tuple[int, int, int]) -> bool:
    return 0 not in profile and len(set(profile)) == 3


def stability_threshold(K: CurveClass, L: CurveClass, search_bound: int) -> int:
    """
    Plus petit N0 >= 0 tel que pour N0 <= n <= search_bound le profil
    soit formé d'entiers distincts non nuls, avec N0 < search_bound.

    Raises:
        ValueError: si la borne est trop petite, ou si un profil n'a aucune
                    entrée impaire (ce qui contredirait la coprimalité)
    """
    if search_bound < 1:
        raise ValueError(f"❌ search_bound doit être >= 1, reçu {search_bound}")
    _unimodular(K, L)

    last_unstable = -1
    for n in range(search_bound + 1):
        profile = intersection_profile(K, L, n)
        if profile[0] % 2 == 0 and profile[1] % 2 == 0:
            raise ValueError(f"❌ Aucune entrée impaire au rang n={n} : {profile}")
        if not _is_stable(profile):
            last_unstable = n

    if last_unstable >= search_bound - 1:
        raise ValueError(
            f"❌ Aucun rang stable trouvé jusqu'à {search_bound} : augmentez la borne"
        )
    return last_unstable + 1

