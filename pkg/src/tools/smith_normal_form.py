"""
smith_normal_form.py - Forme normale de Smith exacte sur Z
Les relations sont les lignes, les générateurs les colonnes :
le conoyau est Z^{colonnes} / (espace des lignes).
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class SmithForm:
    """Diagonale de la forme de Smith et rang libre du conoyau."""
    diagonal: Tuple[int, ...]
    free_rank: int

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Facteurs invariants >= 2 (chaîne de divisibilité)."""
        return tuple(d for d in self.diagonal if d > 1)


def _find_pivot(a: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    # plus petit |a_ij| non nul, départage : ligne la plus basse, puis colonne
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            v = a[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return None if best is None else (best[1], best[2])


def _clear_cross(a: List[List[int]], t: int) -> bool:
    """Réduit la ligne et la colonne t par le pivot ; True si un reste non nul subsiste."""
    rows, cols = len(a), len(a[0])
    pivot = a[t][t]
    dirty = False
    for i in range(t + 1, rows):
        if a[i][t]:
            f = a[i][t] // pivot
            a[i] = [x - f * y for x, y in zip(a[i], a[t])]
            dirty = dirty or a[i][t] != 0
    for j in range(t + 1, cols):
        if a[t][j]:
            f = a[t][j] // pivot
            for i in range(rows):
                a[i][j] -= f * a[i][t]
            dirty = dirty or a[t][j] != 0
    return dirty


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """
    Calcule la forme normale de Smith d'une matrice entière.

    Args:
        matrix: matrice entière (liste de lignes), éventuellement vide

    Returns:
        SmithForm avec la diagonale (chaîne de divisibilité, valeurs >= 1)
        et le rang libre du conoyau
    """
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return SmithForm(diagonal=(), free_rank=len(a[0]) if a else 0)
    rows, cols = len(a), len(a[0])

    diagonal = []
    t = 0
    while t < min(rows, cols):
        found = _find_pivot(a, t)
        if found is None:
            break
        i, j = found
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        if _clear_cross(a, t):
            continue

        # le pivot doit diviser tout le bloc restant
        offender = next(
            (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
            None,
        )
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue

        diagonal.append(abs(a[t][t]))
        t += 1

    return SmithForm(diagonal=tuple(diagonal), free_rank=cols - len(diagonal))
