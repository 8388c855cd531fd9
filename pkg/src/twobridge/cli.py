"""Command-line front end.

Exit codes: 0 success, 1 usage or word-parse error, 2 non-hyperbolic word,
3 internal invariant violation. Diagnostics go to stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automorphisms import enumerate_automorphisms, induced_symmetry_subgroup, predicted_symmetry_group
from .commens import (
    analysis_report,
    census,
    commensurable,
    cover_report,
    detectable_hidden_elements,
    hidden_symmetry_verdict,
)
from .cusp import ExcludedWordError, InvariantError, build_complex, expected_valences, is_excluded
from .orbifold import ArithmeticWordError, ladder_invariant, minimal_orbifold_cusp
from .render import render_svg
from .words import NonHyperbolicError, WordError, normalize, parse_word


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="twobridge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("valences", help="expected vs computed valence table")
    p.add_argument("word")

    p = sub.add_parser("symmetries", help="symmetry group classification")
    p.add_argument("word")

    p = sub.add_parser("autgroup", help="automorphism group of the cusp complex")
    p.add_argument("word")

    p = sub.add_parser("hidden", help="hidden-symmetry verdict")
    p.add_argument("word")

    p = sub.add_parser("commensurable", help="decide commensurability of two words")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("orbifold-cusp", help="minimal-orbifold cusp cellulation")
    p.add_argument("word")

    p = sub.add_parser("census", help="classify all words up to a crossing bound")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--out", default=None, help="write JSON lines here instead of stdout")

    p = sub.add_parser("render", help="draw the cusp tiling as SVG")
    p.add_argument("word")
    p.add_argument("--out", required=True)
    p.add_argument("--copies", nargs=2, type=int, default=[1, 1], metavar=("KX", "KY"))

    p = sub.add_parser("cover", help="irregular covering verdict")
    p.add_argument("word")
    return parser


def _word(text: str):
    word, _ = normalize(parse_word(text))
    return word


def _cmd_analyze(args) -> int:
    report = analysis_report(args.word)
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    w = report["word"]
    print(f"word           {w['input']}  (normalized {w['normalized']}, "
          f"canonical {w['canonical']}, mirrored {w['mirrored']})")
    print(f"syllables      {report['syllables']}  n={report['n']}  c={report['crossings']}")
    frac = report["fraction"]
    print(f"fraction       {frac['p']}/{frac['q']}  from {frac['continued_fraction']}")
    print(f"components     {report['components']}")
    print(f"flags          hyperbolic={report['hyperbolic']} "
          f"arithmetic={report['arithmetic']} palindromic={report['palindromic']}")
    sym = report["symmetry_group"]
    print(f"symmetry group {sym['isomorphism_type']} "
          f"(orientation-preserving {sym['orientation_preserving']}, "
          f"orientation-reversing {sym['has_orientation_reversing']})")
    cxd = report["complex"]
    print(f"cusp complex   V={cxd['vertices']} E={cxd['edges']} F={cxd['triangles']} "
          f"periods={cxd['periods'][0]}x{cxd['periods'][1]} "
          f"clasps={cxd['clasp_triangles']} meridional={cxd['meridional_edges']}")
    aut = report["automorphisms"]
    print(f"automorphisms  order {aut['order']} "
          f"({aut['orientation_preserving']} orientation-preserving); "
          f"matches induced symmetries: {aut['matches_induced_symmetries']}")
    print(f"hidden         {report['hidden_symmetries']['notes']}")
    if report["ladder"]:
        lad = report["ladder"]
        print(f"ladder         {lad['kind']}: {lad['letters']} "
              f"(canonical {lad['canonical']})")
    return 0


def _cmd_valences(args) -> int:
    word = _word(args.word)
    cx = build_complex(word)
    computed = cx.computed_valences()
    print(f"computed valences for {word} (r = {computed.r}):")
    for label, val in computed.valences.items():
        print(f"  {label:>4}: {val}")
    if is_excluded(word):
        print("word is in the excluded family {R2L2, RL^m, RL^mR}: "
              "no closed-form table")
        return 0
    expected = expected_valences(word)
    agree = expected.valences == computed.valences
    print(f"closed-form table agrees: {agree}")
    if not agree:
        raise InvariantError(f"valence mismatch for {word}")
    return 0


def _cmd_symmetries(args) -> int:
    word = _word(args.word)
    sym = predicted_symmetry_group(word)
    print(f"Sym(S^3 \\ K({word})) = {sym.isomorphism_type} of order {sym.order}")
    print(f"orientation-preserving subgroup: {sym.orientation_preserving_type}")
    print(f"orientation-reversing symmetries: {sym.has_orientation_reversing}")
    return 0


def _cmd_autgroup(args) -> int:
    word = _word(args.word)
    cx = build_complex(word)
    auts = enumerate_automorphisms(cx)
    induced = induced_symmetry_subgroup(cx)
    print(f"automorphism group of the quotient complex of {word}: order {len(auts)}")
    for a in auts:
        sign = "+" if a.orientation == 1 else "-"
        print(f"  {a.tag:<12} orientation {sign}  order {a.order}")
    same = sorted(a.dart_map for a in auts) == sorted(a.dart_map for a in induced)
    print(f"equals symmetry-induced subgroup: {same}")
    return 0


def _cmd_hidden(args) -> int:
    word = _word(args.word)
    verdict = hidden_symmetry_verdict(word)
    print(json.dumps(verdict.to_json_dict(), indent=2))
    detectable = detectable_hidden_elements(word)
    orders = sorted({a.order for a in detectable})
    print(f"detectable hidden classes on the tiling quotient: {len(detectable)}"
          + (f" (element orders {orders})" if detectable else ""))
    return 0


def _cmd_commensurable(args) -> int:
    w1, w2 = _word(args.word1), _word(args.word2)
    verdict = commensurable(w1, w2)
    state = "commensurable" if verdict.commensurable else "not commensurable"
    print(f"{w1} and {w2}: {state} ({verdict.reason})")
    return 0


def _cmd_orbifold(args) -> int:
    word = _word(args.word)
    cusp = minimal_orbifold_cusp(word)
    ladder = ladder_invariant(word)
    print(f"minimal-orbifold cusp of {word}: {cusp.base_type} ({cusp.cusp_kind})")
    print(f"cells: V={cusp.vertex_count} E={cusp.edge_count} F={cusp.face_count}; "
          f"underlying Euler characteristic {cusp.underlying_euler}, "
          f"orbifold Euler characteristic {cusp.orbifold_euler}")
    for p in cusp.cone_points:
        where = p.location
        if p.location == "vertex":
            where += f" labels {list(p.vertex_labels)} quotient valence {p.quotient_valence}"
        else:
            where += f" on a {p.edge_kind} edge"
        print(f"  cone point of order {p.order}: {where}")
    print(f"corollary dichotomy satisfied: {cusp.satisfies_corollary_dichotomy()}")
    print(f"ladder invariant ({ladder.kind}): {ladder.letters} "
          f"[{' - '.join(ladder.endpoints)}]")
    return 0


def _cmd_census(args) -> int:
    report = census(args.max_crossings)
    lines = [json.dumps(rec) for rec in report.records]
    lines.append(json.dumps(report.summary()))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
        print(f"wrote {len(report.records)} records + summary to {args.out}",
              file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_render(args) -> int:
    word = _word(args.word)
    cx = build_complex(word)
    svg = render_svg(cx, args.copies[0], args.copies[1])
    with open(args.out, "w") as handle:
        handle.write(svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _cmd_cover(args) -> int:
    print(json.dumps(cover_report(_word(args.word)), indent=2))
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "valences": _cmd_valences,
    "symmetries": _cmd_symmetries,
    "autgroup": _cmd_autgroup,
    "hidden": _cmd_hidden,
    "commensurable": _cmd_commensurable,
    "orbifold-cusp": _cmd_orbifold,
    "census": _cmd_census,
    "render": _cmd_render,
    "cover": _cmd_cover,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NonHyperbolicError as exc:
        print(f"twobridge: non-hyperbolic word: {exc}", file=sys.stderr)
        return 2
    except (WordError, ExcludedWordError, ArithmeticWordError, ValueError) as exc:
        print(f"twobridge: error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"twobridge: internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
