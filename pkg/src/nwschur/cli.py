"""Command-line interface: ``nwschur <command> DIAGRAM [options]``.

DIAGRAM is a file path or ``-`` for stdin, holding JSON
(``{"n_rows": N, "columns": [[...], ...]}`` or a bare column list) or an
ASCII grid of ``X`` and ``.``. Output is JSON with sorted keys.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 internal integrity failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__
from .character import (
    betti_numbers,
    check_complement_duality,
    poincare_polynomial,
    schur_character,
    weyl_character,
)
from .diagram import (
    blowup,
    is_blowup_closed,
    is_lexicographic,
    is_northwest,
    lex_sort,
    northwest_rearrangement,
    parse_diagram,
)
from .exceptions import (
    DiagramParseError,
    NotNorthwestError,
    NWSchurError,
    PreconditionError,
)
from .oracle import DEFAULT_MAX_ROWS, DEFAULT_MAX_SQUARES, tensor_schur_character
from .permutation import monotone_sequence, verify_sequence
from .polynomial import evaluate_at_ones, schur_expand
from .tabloid import fixed_points

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTEGRITY = 4


def _read(path: str, n_rows: int | None):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DiagramParseError(f"cannot read {path}: {exc.strerror}") from exc
    if not text.strip():
        raise DiagramParseError("input is empty; expected a JSON column list or an X/. grid")
    D = parse_diagram(text, n_rows)
    if n_rows is not None and n_rows > D.n_rows:
        D = D.with_rows(n_rows)
    return D


def _poly_report(poly, expand: bool, dim: bool) -> dict:
    out = {"character": poly.to_json()}
    if expand:
        out["schur_expansion"] = schur_expand(poly).to_json()
    if dim:
        out["dimension"] = evaluate_at_ones(poly)
    return out


def cmd_check(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    return {
        "n_rows": D.n_rows,
        "columns": [list(c) for c in D.columns],
        "northwest": is_northwest(D),
        "northwest_after_lex_sort": is_northwest(lex_sort(D)),
        "northwest_up_to_row_permutation": northwest_rearrangement(D) is not None,
        "lexicographic": is_lexicographic(D),
        "blowup_closed": is_blowup_closed(D),
        "max_row": D.max_row,
    }


def cmd_blowup(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    b = blowup(D)
    return {
        "n_rows": D.n_rows,
        "columns": [
            {"rows": list(c), "multiplicity": m, "phantom": m == 0}
            for c, m in zip(b.columns, b.multiplicities)
        ],
        "phantom_count": sum(b.phantom),
    }


def cmd_tabloids(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    N = D.n_rows
    entries = []
    for t, data in fixed_points(lex_sort(D), N):
        entry = data.to_json()
        entry["filling"] = t.to_json()
        entries.append(entry)
    return {"n_rows": N, "tabloid_count": len(entries), "tabloids": entries}


def cmd_perms(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        seq = monotone_sequence(D, D.n_rows)
    steps = verify_sequence(D, seq)
    return {
        "n_rows": D.n_rows,
        "sorted_input": bool(caught),
        "permutations": [u.to_json() for u in seq],
        "steps": [
            {"column": list(s.column), "permutation": s.permutation.to_json(),
             "alpha": s.alpha, "beta": s.beta}
            for s in steps
        ],
        "all_hold": all(s.alpha and s.beta for s in steps),
    }


def cmd_char(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    try:
        if args.module == "weyl":
            if args.expand:
                raise PreconditionError("--expand applies to Schur characters only")
            poly = weyl_character(D, D.n_rows, workers=args.threads)
        else:
            poly = schur_character(D, D.n_rows, workers=args.threads)
    except NotNorthwestError as exc:
        raise NotNorthwestError(
            f"{exc}; the character formula needs a northwest diagram, "
            "try `oracle-char` for a brute-force character"
        ) from exc
    out = _poly_report(poly, args.expand, args.dim)
    out["module"] = args.module
    out["tabloid_count"] = len(fixed_points(lex_sort(D), D.n_rows))
    return out


def cmd_oracle_char(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    poly = tensor_schur_character(D, D.n_rows, args.max_squares, args.max_rows)
    out = _poly_report(poly, args.expand, args.dim)
    out["module"] = "schur"
    return out


def cmd_duality(args) -> dict:
    D = _read(args.diagram, args.rect_rows)
    return check_complement_duality(D, args.rect_rows, args.rect_cols).to_json()


def cmd_poincare(args) -> dict:
    D = _read(args.diagram, args.n_rows)
    P = poincare_polynomial(D, D.n_rows)
    return {"poincare": P.to_json(), "betti": betti_numbers(P), "text": str(P)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nwschur", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--pretty", action="store_true", help="indented human-readable output")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker cap (default: $NWSCHUR_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, n_rows=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("diagram", help="diagram file, or - for stdin")
        if n_rows:
            p.add_argument("--n-rows", type=int, default=None,
                           help="GL(N) rank; defaults to the declared or maximal row")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "northwest / lexicographic / blowup status")
    add("blowup", cmd_blowup, "intersection closure with phantom columns")
    add("tabloids", cmd_tabloids, "standard tabloids with fixed-point data")
    add("perms", cmd_perms, "monotone permutation sequence with checks")
    p = add("char", cmd_char, "character via the fixed-point formula")
    p.add_argument("--module", choices=["schur", "weyl"], default="schur")
    p.add_argument("--expand", action="store_true", help="Schur expansion")
    p.add_argument("--dim", action="store_true", help="module dimension")
    p = add("oracle-char", cmd_oracle_char, "brute-force Schur module character")
    p.add_argument("--expand", action="store_true")
    p.add_argument("--dim", action="store_true")
    p.add_argument("--max-squares", type=int, default=DEFAULT_MAX_SQUARES)
    p.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS)
    p = add("duality", cmd_duality, "rectangle-complement duality check", n_rows=False)
    p.add_argument("--rect-rows", type=int, required=True)
    p.add_argument("--rect-cols", type=int, required=True)
    add("poincare", cmd_poincare, "Poincare polynomial of a blowup-closed diagram")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except DiagramParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NWSchurError as exc:
        print(f"internal integrity failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    if args.pretty:
        print(json.dumps(result, sort_keys=True, indent=2))
    else:
        print(json.dumps(result, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
