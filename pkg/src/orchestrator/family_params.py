"""
family_params.py - Indices des familles nommées K(a3, a2, a1, m, b1) et K'(...)
Passage vers les paramètres de lashing et réconciliation du genre imprimé.
"""
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from src.checks.published_tables import TABLE_1
from src.topology.surgdesc import Variant, lashing_slope
from src.topology.traintrack import LashingParams, genus_formula_printed, genus_residual


@dataclass(frozen=True, order=True)
class FamilyParams:
    """
    Indices d'une ligne de famille (1/b1-lashing quand b2 = 0).

    L'ordre naturel (a3, a2, a1, m, b1, b2, variant) est celui des tables.
    """
    a3: int
    a2: int
    a1: int
    m: int
    b1: int
    b2: int = 0
    variant: Variant = Variant.S3

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        values = (self.a3, self.a2, self.a1, self.m, self.b1, self.b2)
        if any(int(v) != v or v < 0 for v in values):
            raise ValueError(f"❌ Indices de famille négatifs ou non entiers : {values}")

    @property
    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.a3, self.a2, self.a1, self.m, self.b1)

    @property
    def label(self) -> str:
        name = "K'" if self.variant is Variant.S1XS2 else "K"
        suffix = f";b2={self.b2}" if self.b2 else ""
        return f"{name}({self.a3},{self.a2},{self.a1},{self.m},{self.b1}{suffix})"

    def to_lashing(self) -> LashingParams:
        """Lashing de pente [0, b2, -b1] = (b1·b2 + 1)/b1, soit p = 1, q = b1 quand b2 = 0."""
        slope = lashing_slope(self.b1, self.b2)
        return LashingParams(a=(self.a1, self.a2, self.a3), m=self.m, p=slope.num, q=slope.den)


class GenusReconciliation(NamedTuple):
    printed: int
    tabulated: Optional[int]
    status: str
    residual: Optional[int]


def genus_reconciliation(params: FamilyParams) -> GenusReconciliation:
    """
    Compare le polynôme de genre imprimé au genre tabulé.

    Statut : 'match', 'mismatch' ou 'no-reference' (ligne absente de la table,
    variante S^1 x S^2 ou b2 > 0).
    """
    lashing = params.to_lashing()
    printed = genus_formula_printed(lashing)
    entry = TABLE_1.get(params.key) if params.variant is Variant.S3 and params.b2 == 0 else None
    if entry is None:
        return GenusReconciliation(printed, None, "no-reference", None)
    status = "match" if printed == entry.genus else "mismatch"
    return GenusReconciliation(printed, entry.genus, status, genus_residual(lashing, entry.genus))
