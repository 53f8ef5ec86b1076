"""
main.py - Point d'entrée de lashlab
Calculs exacts sur les lashings : pentes, twists, train tracks, chirurgies,
tresses, tables de familles et fixtures.

Commande : python main.py check --verbose
"""
import argparse
import os
import sys
import traceback

from dotenv import load_dotenv
load_dotenv()   # ← OBLIGATOIRE AVANT TOUT IMPORT DE src (LASHLAB_*)

from src.orchestrator.family_orchestrator import (
    FamilyOrchestrator, expand_grid, format_rows, parse_grid,
)
from src.orchestrator.family_params import FamilyParams
from src.topology import braidkit, contfrac, surgdesc, traintrack, twistcalc
from src.utils.logger import ActionType, log_experiment

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_INTERRUPTED = 0, 1, 2, 130


def int_list(text: str):
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"liste d'entiers attendue, reçu '{text}'")


def add_family_arguments(parser: argparse.ArgumentParser):
    for name in ("a3", "a2", "a1", "m", "b1"):
        parser.add_argument(f"--{name}", type=int, required=True)
    parser.add_argument("--b2", type=int, default=0)
    parser.add_argument("--s1xs2", action="store_true", help="variante S^1 x S^2")


def add_format_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        choices=("tsv", "kv"),
        default=os.getenv("LASHLAB_FORMAT", "tsv"),
        help="Format de sortie (défaut: LASHLAB_FORMAT ou tsv)",
    )


def family_from_args(args) -> FamilyParams:
    variant = surgdesc.Variant.S1XS2 if args.s1xs2 else surgdesc.Variant.S3
    return FamilyParams(args.a3, args.a2, args.a1, args.m, args.b1, args.b2, variant)


def parse_arguments(argv=None):
    """Parse les arguments de la ligne de commande"""
    parser = argparse.ArgumentParser(
        prog="lashlab",
        description="🪢 lashlab - Arithmétique exacte des lashings et des noeuds L-space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slope", help="Triplet de Montesinos et fractions continues de p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("profile", help="Profil d'intersection de K^n = φ_L^n(K)")
    p.add_argument("--K", type=twistcalc.CurveClass.parse, required=True)
    p.add_argument("--L", type=twistcalc.CurveClass.parse, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("threshold", help="Seuil de stabilité N0")
    p.add_argument("--K", type=twistcalc.CurveClass.parse, required=True)
    p.add_argument("--L", type=twistcalc.CurveClass.parse, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("weights", help="Poids du train track et formules de tresse")
    p.add_argument("--a", type=int_list, required=True, help="a_1,...,a_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("surgery", help="Homologie du diagramme à 16 composantes")
    for name in ("a1", "a2", "a3", "m", "b1"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--b2", type=int, default=0)
    p.add_argument("--r", type=contfrac.Slope.parse, default=contfrac.Slope(0, 1))
    p.add_argument("--s1xs2", action="store_true")
    p.add_argument("--export", metavar="PATH")
    p.add_argument("--load", metavar="PATH", help="lit un diagramme au format d'export")

    p = sub.add_parser("decompose", help="Décomposition 2-bridge d'une 3-tresse alternée")
    p.add_argument("--xi", default="", help="lettres signées séparées par des blancs")
    p.add_argument("--aprime", type=int_list, default=(1, 1, 1))
    p.add_argument("--strands", type=int, default=3)

    p = sub.add_parser("row", help="Une ligne de famille")
    add_family_arguments(p)
    add_format_argument(p)

    p = sub.add_parser("table", help="Table de familles sur une grille")
    p.add_argument("--grid", required=True, help="ex: a3=0..1,a2=1,a1=0..1,m=1,b1=1..2")
    p.add_argument("--s1xs2", action="store_true")
    add_format_argument(p)

    p = sub.add_parser("check", help="Exécute toutes les fixtures intégrées")
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("export", help="Exporte le diagramme d'une ligne de famille")
    add_family_arguments(p)
    p.add_argument("--out", required=True, metavar="PATH")

    return parser.parse_args(argv)


def print_fields(fields):
    for key, value in fields:
        print(f"{key}: {value}")


def cmd_slope(args) -> int:
    s = contfrac.Slope(args.p, args.q)
    one, minus_q, minus_p = contfrac.montesinos_triple(s)
    cf_p, cf_q = contfrac.montesinos_triple_cf(s)
    fields = [("slope", s), ("triple", f"{one} {minus_q} {minus_p}")]
    if s.num > 0:
        fields.append(("cf_alternating", contfrac.cf_expand(s, contfrac.ExpansionStyle.ALTERNATING_NONNEGATIVE)))
    fields += [
        ("cf_odd", contfrac.cf_expand(s, contfrac.ExpansionStyle.ODD_LENGTH)),
        ("cf_minus_p", cf_p),
        ("cf_minus_q", cf_q),
    ]
    print_fields(fields)
    return EXIT_OK


def cmd_profile(args) -> int:
    d_mu, d_lambda, d_nu = twistcalc.intersection_profile(args.K, args.L, args.n)
    print_fields([
        ("n", args.n),
        ("family_class", twistcalc.twist_family_slope(args.K, args.L, args.n)),
        ("delta_mu", d_mu),
        ("delta_lambda", d_lambda),
        ("delta_nu", d_nu),
    ])
    return EXIT_OK


def cmd_threshold(args) -> int:
    print_fields([("N0", twistcalc.stability_threshold(args.K, args.L, args.bound))])
    return EXIT_OK


def cmd_weights(args) -> int:
    params = traintrack.LashingParams(args.a, args.m, args.p, args.q)
    w = traintrack.weights(params)
    switch = traintrack.switch_condition(params)
    print_fields([
        ("xs", " ".join(str(v) for v in w.xs)),
        ("ys", " ".join(str(v) for v in w.ys)),
        ("lambda_alt", traintrack.lambda_alt(params)),
        ("genus_printed", traintrack.genus_formula_printed(params)),
        ("switch_condition", f"{switch.holds} (x_n={switch.x_n}, borne={switch.bound}, égalité={switch.equality})"),
        ("strand_model", traintrack.strand_count_model(params)),
    ])
    return EXIT_OK


def cmd_surgery(args) -> int:
    if args.load:
        diagram = surgdesc.load(args.load)
    else:
        missing = [n for n in ("a1", "a2", "a3", "m", "b1") if getattr(args, n) is None]
        if missing:
            raise ValueError(f"❌ Paramètres manquants : {', '.join('--' + n for n in missing)} (ou --load)")
        variant = surgdesc.Variant.S1XS2 if args.s1xs2 else surgdesc.Variant.S3
        diagram = surgdesc.lashing_matrix(args.a1, args.a2, args.a3, args.m, args.b1, args.b2, args.r, variant)
    order = surgdesc.h1_order(diagram)
    group = surgdesc.h1_group(diagram)
    print_fields([("order", surgdesc.format_order(order)), ("group", group)])
    if args.export:
        surgdesc.export(diagram, args.export, [f"H1 {group}"])
    log_experiment(
        component="surgdesc",
        action=ActionType.COMPUTATION,
        details={"input": args.load or "lashing_matrix", "output": str(group)},
        status="SUCCESS",
    )
    return EXIT_OK


def cmd_decompose(args) -> int:
    xi = braidkit.from_string(args.xi, args.strands)
    alpha, omega, certificate = braidkit.decompose_two_bridge(xi, args.aprime)
    print_fields([
        ("alpha", alpha),
        ("omega", omega),
        ("alpha_coeffs", ",".join(str(c) for c in certificate.alpha_coeffs)),
        ("omega_coeffs", ",".join(str(c) for c in certificate.omega_coeffs)),
        ("certificate", "ok" if certificate.valid else "INVALIDE"),
    ])
    return EXIT_OK if certificate.valid else EXIT_FAILURE


def run(args) -> int:
    orchestrator = FamilyOrchestrator()
    handlers = {
        "slope": cmd_slope,
        "profile": cmd_profile,
        "threshold": cmd_threshold,
        "weights": cmd_weights,
        "surgery": cmd_surgery,
        "decompose": cmd_decompose,
    }
    if args.command in handlers:
        return handlers[args.command](args)
    if args.command == "row":
        print(format_rows([orchestrator.row(family_from_args(args))], args.format), end="")
        return EXIT_OK
    if args.command == "table":
        grid = parse_grid(args.grid)
        variant = surgdesc.Variant.S1XS2 if args.s1xs2 else surgdesc.Variant.S3
        rows = orchestrator.table(expand_grid(grid, variant))
        print(format_rows(rows, args.format), end="")
        return EXIT_OK
    if args.command == "check":
        result = orchestrator.check(verbose=args.verbose)
        return EXIT_OK if result["success"] else EXIT_FAILURE
    if args.command == "export":
        written = orchestrator.export(family_from_args(args), args.out)
        print(written)
        return EXIT_OK
    raise ValueError(f"❌ Commande inconnue : {args.command}")


def main(argv=None) -> int:
    """Fonction principale"""
    args = parse_arguments(argv)
    try:
        return run(args)

    except KeyboardInterrupt:
        print("\n\n⚠️  Interruption manuelle détectée (Ctrl+C)", file=sys.stderr)
        log_experiment(
            component="System",
            action=ActionType.DEBUG,
            details={"input": args.command, "output": "Arrêt demandé par l'utilisateur"},
            status="INTERRUPTED",
        )
        return EXIT_INTERRUPTED

    except ValueError as e:
        print(f"{e}", file=sys.stderr)
        return EXIT_USAGE

    except (IOError, OSError) as e:
        print(f"❌ ERREUR E/S : {e}", file=sys.stderr)
        log_experiment(
            component="System",
            action=ActionType.DEBUG,
            details={"input": args.command, "output": str(e), "traceback": traceback.format_exc()},
            status="ERROR",
        )
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
