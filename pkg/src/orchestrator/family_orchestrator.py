"""
family_orchestrator.py - Orchestrateur des familles K(a3, a2, a1, m, b1) et K'(...)
Lignes d'invariants recoupées par deux routes, tables, fixtures et export
"""
import sys
from dataclasses import dataclass
from itertools import product
from math import isqrt
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

import pandas as pd
from colorama import Fore, Style

from src.checks.fixture_judge import FixtureJudge
from src.orchestrator.family_params import FamilyParams, genus_reconciliation
from src.topology import surgdesc, traintrack
from src.topology.surgdesc import AbelianGroup, Variant
from src.utils.logger import ActionType, log_experiment

GRID_KEYS = ("a3", "a2", "a1", "m", "b1", "b2")
REQUIRED_GRID_KEYS = ("a3", "a2", "a1", "m", "b1")

COLUMNS = [
    "family", "a3", "a2", "a1", "m", "b1", "b2", "variant", "slope",
    "lambda_alt", "h1_order", "h1_group", "genus_printed", "genus_table",
    "genus_status", "dual_route_ok", "winding_ok", "winding_root", "error",
]


@dataclass(frozen=True)
class ReportRow:
    """Une ligne de table ; error est renseigné quand le calcul a échoué."""
    params: FamilyParams
    lambda_alt: Optional[int] = None
    h1_order: Optional[int] = None
    h1_group: Optional[AbelianGroup] = None
    genus_printed: Optional[int] = None
    genus_table: Optional[int] = None
    genus_status: str = "no-reference"
    dual_route_ok: Optional[bool] = None
    winding_ok: Optional[bool] = None
    winding_root: Optional[int] = None
    error: Optional[str] = None

    def to_record(self) -> Dict[str, str]:
        """Valeurs textuelles (n/a pour les champs sans objet)."""
        def text(value) -> str:
            if value is None:
                return "n/a"
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        p = self.params
        slope = surgdesc.lashing_slope(p.b1, p.b2)
        failed = self.error is not None
        return {
            "family": p.label,
            "a3": str(p.a3), "a2": str(p.a2), "a1": str(p.a1),
            "m": str(p.m), "b1": str(p.b1), "b2": str(p.b2),
            "variant": p.variant.value,
            "slope": str(slope),
            "lambda_alt": text(self.lambda_alt),
            "h1_order": "n/a" if failed else surgdesc.format_order(self.h1_order),
            "h1_group": text(self.h1_group),
            "genus_printed": text(self.genus_printed),
            "genus_table": text(self.genus_table),
            "genus_status": self.genus_status,
            "dual_route_ok": text(self.dual_route_ok),
            "winding_ok": text(self.winding_ok),
            "winding_root": text(self.winding_root),
            "error": self.error or "",
        }


def parse_grid(text: str) -> Dict[str, List[int]]:
    """
    Lit une grille 'a1=0..2,m=1,b1=1,3,5'.

    Une valeur sans '=' complète la liste de la clé précédente ; lo..hi est
    inclusif (vide si hi < lo).
    """
    grid: Dict[str, List[int]] = {}
    current = None
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if "=" in token:
            current, token = (s.strip() for s in token.split("=", 1))
            if current not in GRID_KEYS:
                raise ValueError(f"❌ Clé de grille inconnue : '{current}' (attendu {', '.join(GRID_KEYS)})")
            grid.setdefault(current, [])
        elif current is None:
            raise ValueError(f"❌ Valeur '{token}' sans clé dans la grille '{text}'")
        try:
            if ".." in token:
                lo, hi = (int(v) for v in token.split("..", 1))
                values = list(range(lo, hi + 1))
            else:
                values = [int(token)]
        except ValueError:
            raise ValueError(f"❌ Intervalle illisible : '{token}'")
        if any(v < 0 for v in values):
            raise ValueError(f"❌ Valeurs négatives interdites pour {current} : {token}")
        grid[current] += values
    return grid


def expand_grid(grid: Mapping[str, Sequence[int]], variant: Variant = Variant.S3) -> List[FamilyParams]:
    """Produit cartésien de la grille (b2 vaut 0 par défaut)."""
    if not grid:
        return []
    missing = [k for k in REQUIRED_GRID_KEYS if k not in grid]
    if missing:
        raise ValueError(f"❌ Clés manquantes dans la grille : {missing}")
    axes = [sorted(set(grid.get(k, [0]))) for k in GRID_KEYS]
    return [FamilyParams(*values, variant=variant) for values in product(*axes)]


class FamilyOrchestrator:
    """
    Orchestrateur des familles nommées :
    ligne (row) → table → fixtures (check) → export
    """

    # Pente de chirurgie des lignes de table
    SURGERY_SLOPE = 0

    def __init__(self, judge: FixtureJudge = None):
        self.judge = judge

    def row(self, params: FamilyParams) -> ReportRow:
        """
        Calcule une ligne : λ_alt (train track), H_1 à r = 0 (diagramme), genre
        imprimé et drapeaux de cohérence.

        Raises:
            ValueError: si b1 = 0 ou si un module refuse les paramètres
        """
        return self._report(params, self.diagram(params))

    def diagram(self, params: FamilyParams) -> surgdesc.RationalSurgeryDiagram:
        """Diagramme à 16 composantes de la ligne, à la pente SURGERY_SLOPE."""
        if params.b1 < 1:
            raise ValueError(f"❌ b1 >= 1 requis pour une famille nommée, reçu {params.label}")
        return surgdesc.lashing_matrix(
            params.a1, params.a2, params.a3, params.m, params.b1, params.b2,
            self.SURGERY_SLOPE, params.variant,
        )

    def _report(self, params: FamilyParams, diagram: surgdesc.RationalSurgeryDiagram) -> ReportRow:
        lam = traintrack.lambda_alt(params.to_lashing())
        order = surgdesc.h1_order(diagram)
        group = surgdesc.h1_group(diagram)
        rec = genus_reconciliation(params)

        dual_route_ok = winding_ok = winding_root = None
        if params.variant is Variant.S3:
            dual_route_ok = lam == order
        elif order is not None:
            winding_root = isqrt(order)
            winding_ok = winding_root ** 2 == order
        else:
            winding_ok = False

        return ReportRow(
            params=params,
            lambda_alt=lam,
            h1_order=order,
            h1_group=group,
            genus_printed=rec.printed,
            genus_table=rec.tabulated,
            genus_status=rec.status,
            dual_route_ok=dual_route_ok,
            winding_ok=winding_ok,
            winding_root=winding_root if winding_ok else None,
        )

    def table(
        self, grid: Union[Mapping[str, Sequence[int]], Iterable[FamilyParams]]
    ) -> List[ReportRow]:
        """
        Table déterministe (ordre lexicographique des paramètres).

        Une erreur sur une ligne est consignée dans la ligne et n'interrompt
        pas le balayage.
        """
        params_list = expand_grid(grid) if isinstance(grid, Mapping) else list(grid)
        rows = []
        for params in sorted(set(params_list)):
            try:
                rows.append(self.row(params))
            except ValueError as e:
                rows.append(ReportRow(params=params, error=str(e)))

        log_experiment(
            component="FamilyOrchestrator",
            action=ActionType.COMPUTATION,
            details={
                "input": [p.label for p in sorted(set(params_list))],
                "output": f"{len(rows)} lignes",
                "errors": sum(r.error is not None for r in rows),
            },
            status="SUCCESS",
        )
        return rows

    def check(self, verbose: bool = False) -> Dict:
        """
        Exécute toutes les fixtures et affiche un verdict par fixture.

        Ne lève jamais d'exception : les échecs sont des verdicts.
        """
        try:
            judge = self.judge or FixtureJudge()
        except ValueError as e:
            print(f"❌ Configuration invalide : {e}")
            return {"success": False, "passed": 0, "failed": 1, "verdicts": [], "error": str(e)}
        colors = sys.stdout.isatty()
        ok_tag = f"{Fore.GREEN}✅ PASS{Style.RESET_ALL}" if colors else "✅ PASS"
        ko_tag = f"{Fore.RED}❌ FAIL{Style.RESET_ALL}" if colors else "❌ FAIL"
        info_tag = f"{Fore.YELLOW}ℹ️  INFO{Style.RESET_ALL}" if colors else "ℹ️  INFO"

        print(f"\n⚖️  Exécution des fixtures (graine {judge.seed})...\n")
        result = judge.validate()
        for verdict in result["verdicts"]:
            tag = info_tag if verdict.informational else (ok_tag if verdict.passed else ko_tag)
            print(f"   {tag}  {verdict.name} : {verdict.message}")
            if verbose:
                for line in verdict.details:
                    print(f"         • {line}")

        print("\n" + "=" * 70)
        if result["success"]:
            print(f"✅ SUCCÈS : {result['passed']} fixtures validées")
        else:
            print(f"❌ ÉCHEC : {result['failed']} fixture(s) en échec")
        print("=" * 70)
        return result

    def export(self, params: FamilyParams, path: str) -> str:
        """
        Écrit le diagramme de la ligne avec un en-tête (paramètres, λ_alt, H_1).

        Returns:
            Le chemin absolu écrit

        Raises:
            IOError: avec le chemin si l'écriture échoue
        """
        diagram = self.diagram(params)
        report = self._report(params, diagram)
        header = [
            f"famille {params.label}",
            f"a3={params.a3} a2={params.a2} a1={params.a1} m={params.m} "
            f"b1={params.b1} b2={params.b2} variante={params.variant.value}",
            f"pente {surgdesc.lashing_slope(params.b1, params.b2)} ; r = {self.SURGERY_SLOPE}",
            f"lambda_alt {report.lambda_alt}",
            f"H1 {report.h1_group} (ordre {surgdesc.format_order(report.h1_order)})",
        ]
        written = surgdesc.export(diagram, path, header)
        log_experiment(
            component="FamilyOrchestrator",
            action=ActionType.EXPORT,
            details={"input": params.label, "output": written},
            status="SUCCESS",
        )
        return written


def format_rows(rows: Sequence[ReportRow], fmt: str = "tsv") -> str:
    """TSV (en-tête, tabulations, sans guillemets) ou key: value par ligne."""
    records = [r.to_record() for r in rows]
    if fmt == "tsv":
        frame = pd.DataFrame(records, columns=COLUMNS)
        return frame.to_csv(sep="\t", index=False, lineterminator="\n")
    if fmt == "kv":
        return "\n".join(
            "".join(f"{k}: {rec[k]}\n" for k in COLUMNS) for rec in records
        )
    raise ValueError(f"❌ Format inconnu : '{fmt}' (tsv ou kv)")
