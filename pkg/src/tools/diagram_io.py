"""
diagram_io.py - Format texte des diagrammes de chirurgie

    # commentaire (en-tête libre)
    16
    1 -389/1 lk: 0 0 0 -1 ...
    ...

Première ligne utile : nombre de composantes ; puis une ligne par
composante `id p/q lk: v_1 ... v_n`.
"""
from typing import List, Sequence, Tuple

from src.topology.contfrac import Slope

Rows = Tuple[Tuple[int, ...], ...]


def format_diagram(
    coefficients: Sequence[Slope], linking: Rows, header: Sequence[str] = ()
) -> str:
    """Sérialisation déterministe (fin de ligne '\\n', pas d'espace final)."""
    lines = [f"# {h}" for h in header]
    lines.append(str(len(coefficients)))
    for i, (c, row) in enumerate(zip(coefficients, linking), start=1):
        lines.append(f"{i} {c} lk: " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> Tuple[Tuple[Slope, ...], Rows]:
    """
    Relit un diagramme exporté.

    Raises:
        ValueError: ligne mal formée, identifiants hors ordre ou taille incohérente
    """
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("❌ Diagramme vide")
    try:
        size = int(lines[0])
    except ValueError:
        raise ValueError(f"❌ Nombre de composantes illisible : '{lines[0]}'")
    if len(lines) - 1 != size:
        raise ValueError(f"❌ {size} composantes annoncées, {len(lines) - 1} lignes trouvées")

    coefficients: List[Slope] = []
    linking: List[Tuple[int, ...]] = []
    for expected_id, line in enumerate(lines[1:], start=1):
        head, sep, tail = line.partition("lk:")
        fields = head.split()
        if not sep or len(fields) != 2:
            raise ValueError(f"❌ Ligne de composante mal formée : '{line}'")
        if fields[0] != str(expected_id):
            raise ValueError(f"❌ Identifiant {fields[0]} inattendu (attendu {expected_id})")
        coefficients.append(Slope.parse(fields[1]))
        try:
            row = tuple(int(v) for v in tail.split())
        except ValueError:
            raise ValueError(f"❌ Enlacements illisibles : '{line}'")
        if len(row) != size:
            raise ValueError(f"❌ Composante {expected_id} : {len(row)} enlacements au lieu de {size}")
        linking.append(row)
    return tuple(coefficients), tuple(linking)
