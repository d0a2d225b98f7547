"""Command-line front end.

    morseres <command> [--method M] [--field p] [--format json|table]
             [--max-size k] [file]

The input is an ideal document (JSON) read from ``file`` or standard input::

    {"variables": ["x1", "x2", "x3"],
     "generators": [[1, 1, 0], [1, 0, 1]],
     "artinian": "auto"}

``artinian`` may be ``"auto"``, an explicit exponent list, or absent (plain
ideal). Exit status: 0 ok, 1 verification or comparison failure, 2 input
error.
"""
import argparse
import json
import sys

from . import subsets as ss
from .catalog import assemble_matching, restrict_to_J
from .errors import MorseResError, NotMinimalError, SetupViolation
from .monomial import MonomialIdeal, artinian_reduction, scarf_complex
from .morse import betti_from_matching, morse_complex, verify_bw
from .oracle import minimal_betti
from .twogen import (
    algorithm1_matching,
    betti_and_cm_type,
    explicit_matching,
    is_level,
    p_partition,
    scarf_structure,
)

COMMANDS = ("betti", "matching", "verify", "scarf", "level", "cm-type", "reduce",
            "oracle", "compare", "cells")
METHODS = ("twogen", "catalog", "algorithm1", "search")

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


# documents -----------------------------------------------------------------


def parse_document(doc):
    """Build the ideal described by a parsed ideal document."""
    if not isinstance(doc, dict):
        raise InputError("the ideal document must be a JSON object")
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise InputError("'generators' must be a nonempty list of exponent vectors")
    width = None
    for g in gens:
        if not isinstance(g, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in g):
            raise InputError(f"generator {g!r} is not a list of integers")
        if width is None:
            width = len(g)
        elif len(g) != width:
            raise InputError("exponent vectors must all have the same length")
    names = doc.get("variables")
    if names is None:
        names = [f"x{i + 1}" for i in range(width)]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise InputError("'variables' must be a list of names")
    if len(names) != width:
        raise InputError(f"{len(names)} variable names for exponent vectors of length {width}")
    if len(set(names)) != len(names):
        raise InputError("variable names must be unique")
    J = MonomialIdeal(tuple(tuple(g) for g in gens), tuple(names))
    art = doc.get("artinian")
    if art is None:
        return J
    unused = doc.get("unused", "reject")
    if art == "auto":
        return artinian_reduction(J, None, unused)
    if isinstance(art, list):
        return artinian_reduction(J, art, unused)
    raise InputError("'artinian' must be \"auto\" or a list of exponents")


def ideal_document(I):
    """Document that reproduces ``I``."""
    if I.is_artinian:
        gens = [list(g) for g in I.generators[: I.r]]
        return {"variables": list(I.variables), "generators": gens, "artinian": list(I.e)}
    return {"variables": list(I.variables), "generators": [list(g) for g in I.generators]}


def _subset(mask):
    return list(ss.members(mask))


def betti_json(table, I):
    return {
        "totals": list(table.totals()),
        "entries": [
            {"degree": i, "multidegree": list(u), "monomial": I.format_monomial(u), "rank": r}
            for (i, u), r in table.sorted_entries()
        ],
    }


def cells_json(I, mc):
    return {
        "ideal": ideal_document(I),
        "by_dimension": list(mc.by_dimension()),
        "cells": [
            {"dimension": c.dim, "indices": _subset(c.mask), "multidegree": list(c.label)}
            for c in mc.cells
        ],
        "precedence": [[_subset(a), _subset(b)] for a, b in mc.precedence],
    }


def validate_cells_document(doc):
    """Re-parse a ``cells`` document and recompute every label from its indices."""
    I = parse_document(doc["ideal"])
    for cell in doc["cells"]:
        mask = ss.as_mask(cell["indices"])
        if cell["dimension"] != ss.size(mask) - 1:
            return False
        if list(I.label(mask)) != list(cell["multidegree"]):
            return False
    keys = {tuple(c["indices"]) for c in doc["cells"]}
    for low, high in doc["precedence"]:
        if tuple(low) not in keys or tuple(high) not in keys or len(high) != len(low) + 1:
            return False
    return True


# commands ------------------------------------------------------------------


def _default_method(I):
    if I.is_artinian and I.r == 2:
        return "twogen"
    return "catalog"


def build_matching(I, method):
    """``(ideal, matching)`` for the chosen method.

    A plain ideal with the catalog method is matched through its automatic
    Artinian reduction and the result restricted to its own generators.
    """
    method = method or _default_method(I)
    if method in ("twogen", "algorithm1"):
        if I.r != 2:
            raise SetupViolation(
                f"--method {method} needs exactly two original generators (got {I.r}); "
                "use --method catalog for up to four",
                "r = 2",
            )
        if not I.is_artinian:
            raise SetupViolation(
                f"--method {method} needs the Artinian reduction; add \"artinian\": \"auto\" "
                "or use --method catalog",
                "artinian",
            )
        M = explicit_matching(I) if method == "twogen" else algorithm1_matching(I)
        return I, M
    if method in ("catalog", "search"):
        kind = "catalog" if method == "catalog" else "search"
        if I.is_artinian:
            return I, assemble_matching(I, kind)
        full = artinian_reduction(I)
        return I, restrict_to_J(assemble_matching(full, kind), I.r)
    raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def _table_lines(table, I):
    lines = [f"totals: {' '.join(str(t) for t in table.totals())}"]
    for (i, u), r in table.sorted_entries():
        lines.append(f"  beta_{i}  {I.format_monomial(u):<24} {r}")
    return lines


def run(command, I, args):
    """Execute one command; returns ``(status, json payload, table lines)``."""
    if command == "reduce":
        R = artinian_reduction(I) if not I.is_artinian else I
        doc = ideal_document(R)
        return OK, doc, [str(R)]
    if command == "oracle":
        table = minimal_betti(I, p=args.field)
        return OK, betti_json(table, I), _table_lines(table, I)
    if command == "level":
        rep = is_level(I)
        payload = {
            "is_level": rep.is_level,
            "alpha": rep.alpha,
            "beta": rep.beta,
            "gamma": rep.gamma,
            "top_degrees": {",".join(map(str, ss.members(t))): d for t, d in sorted(rep.top_degrees.items())},
            "witness": None if rep.witness is None else [_subset(t) for t in rep.witness],
        }
        lines = [f"level: {'yes' if rep.is_level else 'no'}  alpha={rep.alpha} beta={rep.beta} gamma={rep.gamma}"]
        for t, d in sorted(rep.top_degrees.items()):
            lines.append(f"  top cell {ss.fmt(t)}  degree {d}")
        return OK, payload, lines
    if command == "cm-type":
        table, cm = betti_and_cm_type(I)
        part = p_partition(I)
        payload = {"cm_type": cm, "A_and_B": sorted(part.A & part.B), "P1": sorted(part.P1),
                   "P2": sorted(part.P2), "betti_totals": list(table.totals())}
        return OK, payload, [f"Cohen-Macaulay type: {cm}"]
    if command == "scarf":
        if I.is_artinian and I.r == 2 and not (p_partition(I).A & p_partition(I).B):
            st = scarf_structure(I)
            cx, totals = st.complex, list(st.betti)
            closed = True
        else:
            cx = scarf_complex(I)
            counts = cx.f_vector()
            totals = list(counts[1:])
            closed = False
        payload = {"facets": [_subset(f) for f in cx.facets], "totals": totals, "closed_form": closed}
        return OK, payload, [f"facets: {cx!r}", f"faces by dimension: {' '.join(map(str, totals))}"]

    J, M = build_matching(I, args.method)
    if command == "matching":
        payload = {"method": args.method or _default_method(I), "count": len(M), "pairs": M.to_lists()}
        lines = [f"{len(M)} pairs"] + [f"  {ss.fmt(a)} -> {ss.fmt(b)}" for a, b in M.sorted_edges()]
        return OK, payload, lines
    if command == "verify":
        rep = verify_bw(J, M)
        payload = {
            "passed": rep.passed,
            "reason": rep.reason,
            "is_matching": rep.matching.is_matching,
            "is_homogeneous": rep.matching.is_homogeneous,
            "is_acyclic": rep.matching.is_acyclic,
            "offending_pair": None if rep.offending_pair is None else [_subset(t) for t in rep.offending_pair],
        }
        line = "BW-matching: pass" if rep.passed else f"BW-matching: FAIL ({rep.reason})"
        return (OK if rep.passed else FAILED), payload, [line]
    if command == "betti":
        table = betti_from_matching(J, M)
        return OK, betti_json(table, J), _table_lines(table, J)
    if command == "compare":
        ours = betti_from_matching(J, M, allow_nonminimal=True)
        oracle = minimal_betti(J, p=args.field)
        diff = ours.diff(oracle)
        payload = {
            "equal": not diff,
            "matching": betti_json(ours, J),
            "oracle": betti_json(oracle, J),
            "differences": [
                {"degree": i, "multidegree": list(u), "matching": a, "oracle": b}
                for (i, u), (a, b) in sorted(diff.items(), key=lambda kv: (kv[0][0], kv[0][1]))
            ],
        }
        lines = [f"matching: {ours.totals()}", f"oracle:   {oracle.totals()}",
                 "equal" if not diff else f"{len(diff)} differing entries"]
        return (OK if not diff else FAILED), payload, lines
    if command == "cells":
        mc = morse_complex(J, M)
        lines = [f"cells by dimension: {' '.join(map(str, mc.by_dimension()))}"]
        for c in mc.cells:
            lines.append(f"  dim {c.dim}  {ss.fmt(c.mask):<16} {J.format_monomial(c.label)}")
        for a, b in mc.precedence:
            lines.append(f"  {ss.fmt(a)} <= {ss.fmt(b)}")
        return OK, cells_json(J, mc), lines
    raise InputError(f"unknown command {command!r}")


def build_parser():
    p = argparse.ArgumentParser(prog="morseres", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help="ideal document (JSON); standard input when absent")
    p.add_argument("--method", choices=METHODS, default=None,
                   help="matching construction (default: twogen for r = 2, else catalog)")
    p.add_argument("--field", type=int, default=2, help="prime characteristic for the oracle")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-size", type=int, default=16,
                   help="refuse ideals with more generators than this")
    return p


def main(argv=None):
    args = build_parser().parse_intermixed_args(argv)
    try:
        text = open(args.file).read() if args.file else sys.stdin.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as ex:
            raise InputError(f"malformed JSON: {ex}") from None
        I = parse_document(doc)
        if I.q > args.max_size:
            raise InputError(f"{I.q} generators exceed --max-size {args.max_size}")
        status, payload, lines = run(args.command, I, args)
    except (InputError, OSError) as ex:
        print(f"morseres: error: {ex}", file=sys.stderr)
        return INPUT_ERROR
    except SetupViolation as ex:
        clause = f" [{ex.clause}]" if ex.clause else ""
        print(f"morseres: error{clause}: {ex}", file=sys.stderr)
        return INPUT_ERROR
    except NotMinimalError as ex:
        print(f"morseres: {ex}", file=sys.stderr)
        return FAILED
    except MorseResError as ex:
        print(f"morseres: error: {ex}", file=sys.stderr)
        return INPUT_ERROR
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
