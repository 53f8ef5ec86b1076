"""
published_tables.py - Valeurs publiées servant de fixtures

Clés : (a3, a2, a1, m, b1), dans l'ordre des indices de famille K(...).
"""
from typing import Dict, NamedTuple, Tuple

FamilyKey = Tuple[int, int, int, int, int]


class Table1Entry(NamedTuple):
    genus: int
    order: int


class Table2Entry(NamedTuple):
    braid_index: int
    torsion: Tuple[int, ...]


# Noeuds hyperboliques L-space dans S^3 : genre et |H_1| de la chirurgie alternée.
TABLE_1: Dict[FamilyKey, Table1Entry] = {
    (0, 1, 1, 1, 1): Table1Entry(119, 272),
    (1, 1, 0, 1, 1): Table1Entry(214, 471),
    (0, 1, 1, 1, 2): Table1Entry(253, 555),
    (0, 1, 1, 2, 1): Table1Entry(269, 588),
    (1, 1, 0, 2, 1): Table1Entry(501, 1067),
    (1, 1, 1, 1, 1): Table1Entry(544, 1156),
    (0, 1, 1, 2, 2): Table1Entry(583, 1239),
    (1, 1, 1, 1, 2): Table1Entry(1117, 2331),
    (0, 0, 1, 2, 2): Table1Entry(258, 563),
    (1, 1, 1, 0, 2): Table1Entry(274, 597),
}

# Noeuds dans S^1 x S^2 : indice de tresse (= nombre d'enroulement) et H_1 à r = 0.
TABLE_2: Dict[FamilyKey, Table2Entry] = {
    (0, 1, 0, 1, 1): Table2Entry(16, (256,)),
    (0, 2, 0, 1, 1): Table2Entry(23, (529,)),
    (0, 1, 0, 1, 2): Table2Entry(23, (23, 23)),
    (0, 1, 1, 1, 1): Table2Entry(26, (2, 338)),
    (1, 1, 0, 1, 1): Table2Entry(28, (784,)),
    (1, 1, 0, 1, 2): Table2Entry(40, (2, 800)),
}

# Profils de tresses positives publiés : (brins, longueur, genre, clé de famille).
POSITIVE_BRAID_PROFILES: Tuple[Tuple[int, int, int, FamilyKey], ...] = (
    (12, 249, 119, (0, 1, 1, 1, 1)),
    (29, 1116, 544, (1, 1, 1, 1, 1)),
)
