"""
surgdesc.py - Diagramme de chirurgie rationnelle paramétré (16 composantes)
Matrice d'enlacement, variante S^1 x S^2, et homologie H_1 exacte de la
variété chirurgiée par matrice de présentation et forme de Smith.
"""
from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from src.tools.diagram_io import format_diagram, parse_diagram
from src.tools.file_manager import read_file_safe, write_file_safe
from src.tools.smith_normal_form import smith_normal_form
from src.topology.contfrac import ContinuedFraction, Slope, cf_eval


class Variant(str, Enum):
    S3 = "S3"
    S1XS2 = "S1xS2"


# Partie hors diagonale de la matrice imprimée (composantes orientées dans le
# sens horaire, b_i = 0 pour i >= 3). Les composantes 1..11 sont le bloc
# gauche, 12..16 le bloc droit.
LASHING_LINKING: Tuple[Tuple[int, ...], ...] = (
    (0, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0),
    (0, 0, 0, -1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1),
    (0, 0, 0, 0, -1, -1, 1, 0, 0, 0, 0, -1, 1, -1, 1, -1),
    (-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1),
    (0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0),
)


@dataclass(frozen=True)
class RationalSurgeryDiagram:
    """Coefficients de chirurgie (un par composante) et matrice d'enlacement."""
    coefficients: Tuple[Slope, ...]
    linking: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        coefficients = tuple(self.coefficients)
        linking = tuple(tuple(int(v) for v in row) for row in self.linking)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "linking", linking)
        n = len(coefficients)
        if len(linking) != n or any(len(row) != n for row in linking):
            raise ValueError(
                f"❌ {n} coefficients mais matrice d'enlacement de taille {len(linking)}"
            )
        for i in range(n):
            if linking[i][i] != 0:
                raise ValueError(f"❌ Diagonale d'enlacement non nulle en {i + 1}")
            for j in range(i + 1, n):
                if linking[i][j] != linking[j][i]:
                    raise ValueError(f"❌ Enlacement non symétrique en ({i + 1}, {j + 1})")

    @property
    def size(self) -> int:
        return len(self.coefficients)

    def permuted(self, order: Sequence[int]) -> "RationalSurgeryDiagram":
        """Renumérote les composantes : la nouvelle composante k est l'ancienne order[k]."""
        return RationalSurgeryDiagram(
            coefficients=tuple(self.coefficients[i] for i in order),
            linking=tuple(tuple(self.linking[i][j] for j in order) for i in order),
        )


@dataclass(frozen=True)
class AbelianGroup:
    """Groupe abélien de type fini Z^r ⊕ Z/d_1 ⊕ ... avec d_1 | d_2 | ..."""
    free_rank: int
    torsion: Tuple[int, ...]

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0 or any(d < 2 for d in torsion):
            raise ValueError(f"❌ Groupe invalide : rang {self.free_rank}, torsion {torsion}")
        if any(torsion[k + 1] % torsion[k] for k in range(len(torsion) - 1)):
            raise ValueError(f"❌ Facteurs invariants hors chaîne de divisibilité : {torsion}")

    @property
    def order(self) -> Optional[int]:
        """Ordre du groupe, None s'il est infini."""
        return None if self.free_rank else prod(self.torsion)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def a_coefficient(a1: int, a2: int, a3: int, variant: Variant = Variant.S3) -> Slope:
    """Coefficient A = [0, a_1, -a_2, a_3] (ou [0, a_1, -a_2, a_3 + 1] dans S^1 x S^2)."""
    last = a3 + 1 if Variant(variant) is Variant.S1XS2 else a3
    return cf_eval(ContinuedFraction((0, a1, -a2, last)))


def lashing_matrix(
    a1: int, a2: int, a3: int, m: int, b1: int, b2: int,
    r: Slope, variant: Variant = Variant.S3,
) -> RationalSurgeryDiagram:
    """
    Diagramme à 16 composantes tel qu'imprimé.

    b_1, b_2 ou m nuls donnent des coefficients ∞ (remplissage trivial).

    Returns:
        Le RationalSurgeryDiagram des r-chirurgies sur la lashing
    """
    if min(a1, a2, a3, m, b1, b2) < 0:
        raise ValueError(f"❌ Paramètres négatifs interdits : {(a1, a2, a3, m, b1, b2)}")
    if not isinstance(r, Slope):
        r = Slope.from_int(r)
    coefficients = (
        a_coefficient(a1, a2, a3, variant),
        Slope(m, 1), Slope(1, 1), Slope(-1, 1), Slope(1, 1), Slope(-1, 1),
        Slope(-a1 - 1, 1), Slope(-a3, 1), Slope(1, 1), Slope(1, m), Slope(a2, 1),
        Slope(-1, b2), Slope(1, b1), r, Slope(-1, b1), Slope(1, b2),
    )
    return RationalSurgeryDiagram(coefficients=coefficients, linking=LASHING_LINKING)


def lashing_slope(b1: int, b2: int = 0) -> Slope:
    """Pente p/q = [-b_3, b_2, -b_1] avec b_3 = 0 de la lashing décrite par le diagramme."""
    return cf_eval(ContinuedFraction((0, b2, -b1)))


def verify_transcription() -> None:
    """
    Auto-test de la transcription : symétrie, diagonale nulle et forme close de A.

    Raises:
        ValueError: à la première incohérence
    """
    n = len(LASHING_LINKING)
    for i in range(n):
        if len(LASHING_LINKING[i]) != n or LASHING_LINKING[i][i] != 0:
            raise ValueError(f"❌ Ligne {i + 1} de la matrice transcrite mal formée")
        for j in range(n):
            if LASHING_LINKING[i][j] != LASHING_LINKING[j][i]:
                raise ValueError(f"❌ Transcription non symétrique en ({i + 1}, {j + 1})")
    for a1 in range(4):
        for a2 in range(4):
            for a3 in range(4):
                expected = Slope(a1 * a2 * a3 + a1 + a3, a2 * a3 + 1)
                if a_coefficient(a1, a2, a3) != expected:
                    raise ValueError(f"❌ Forme close de A incorrecte pour {(a1, a2, a3)}")


def h1_presentation(d: RationalSurgeryDiagram) -> Tuple[Tuple[int, ...], ...]:
    """
    Matrice de présentation entière de H_1.

    La ligne i est p_i en colonne i et q_i·lk_ij ailleurs (p_i/q_i canonique) ;
    un coefficient ∞ = 1/0 donne la ligne e_i.
    """
    rows = []
    for i, c in enumerate(d.coefficients):
        rows.append(tuple(
            c.num if j == i else c.den * d.linking[i][j]
            for j in range(d.size)
        ))
    return tuple(rows)


def h1_group(d: RationalSurgeryDiagram) -> AbelianGroup:
    """Conoyau de la matrice de présentation."""
    snf = smith_normal_form(h1_presentation(d))
    return AbelianGroup(free_rank=snf.free_rank, torsion=snf.torsion)


def h1_order(d: RationalSurgeryDiagram) -> Optional[int]:
    """
    |det| de la présentation, ou None (ordre infini) si le déterminant est nul.

    Le déterminant est calculé sur ZZ par sympy, indépendamment de la forme
    de Smith utilisée par h1_group.
    """
    if d.size == 0:
        return 1
    rows = [[ZZ(v) for v in row] for row in h1_presentation(d)]
    det = int(DomainMatrix(rows, (d.size, d.size), ZZ).det())
    return abs(det) or None


def closed_form_order(b1: int, b2: int, r: int) -> int:
    """Polynôme imprimé pour a_1 = a_2 = a_3 = m = 1."""
    return abs(
        -389 - r
        - b1 * (563 + 778 * b2)
        - b1 ** 2 * (204 + 563 * b2 + 389 * b2 ** 2)
    )


def format_order(order: Optional[int]) -> str:
    return "infini" if order is None else str(order)


def dump(d: RationalSurgeryDiagram, header: Sequence[str] = ()) -> str:
    return format_diagram(d.coefficients, d.linking, header)


def export(d: RationalSurgeryDiagram, path: str, header: Sequence[str] = ()) -> str:
    """Écrit le diagramme au format texte ; renvoie le chemin absolu."""
    return write_file_safe(path, dump(d, header))


def load(path: str) -> RationalSurgeryDiagram:
    """Lit un diagramme exporté (ou écrit à la main dans le même format)."""
    coefficients, linking = parse_diagram(read_file_safe(path))
    return RationalSurgeryDiagram(coefficients=coefficients, linking=linking)
