"""Command-line front end.

Exit codes: 0 success, 1 validation failure (or a failed verification),
2 usage or input-parsing error.  Tabular output is TSV.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .algebra import InputError, format_algebra, load_algebra, path_basis, validate_skew_gentle
from .config import CommandConfig
from .intersections import Intersector, hom_dim_words
from .modules import TransposeOracle, build_module, hom_dim_linear, is_isomorphic, module_of
from .surface import classify_regions, load_surface, relation_report, tiling_algebra, validate_admissible
from .tautilt import TauTilting, compare_with_oracle, exhaustive_within, tagged_triangulation
from .verify import Workbench, verify_int_dim, verify_tau
from .words import HatQuiver, SplitPair, TaggedWord, Trivial, WordError

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dims(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _tagged(hq: HatQuiver, word: str, tags: Optional[str]) -> TaggedWord:
    if tags is not None and "@tags=" not in word:
        word = f"{word} @tags={tags}"
    tw = hq.parse_tagged(word)
    if not tw.word.inextensible:
        raise InputError(f"word {tw.word.text()} is not inextensible")
    if not hq.is_admissible(tw.word):
        raise InputError(f"word {tw.word.text()} is not admissible")
    return hq.canonical(tw)


def _result_text(r) -> str:
    return r.text()


# -- handlers ---------------------------------------------------------------


def cmd_algebra_check(args, out: TextIO) -> int:
    t = load_algebra(args.file)
    rep = validate_skew_gentle(t)
    if not rep.ok:
        for v in rep.violations:
            print(f"violation\t{v}", file=out)
        return EXIT_INVALID
    print(f"status\tOK", file=out)
    print(f"vertices\t{len(t.vertices)}", file=out)
    print(f"special\t{' '.join(t.special) or '-'}", file=out)
    print(f"rank\t{t.rank()}", file=out)
    print(f"dim\t{path_basis(t).dim}", file=out)
    return EXIT_OK


def cmd_algebra_from_surface(args, out: TextIO) -> int:
    s, tri = load_surface(args.file)
    rep = validate_admissible(s, tri)
    if not rep.ok:
        for v in rep.violations:
            print(f"violation\t{v}", file=out)
        return EXIT_INVALID
    t = tiling_algebra(s, tri)
    print(f"vertices\t{' '.join(t.vertices)}", file=out)
    print(f"special\t{' '.join(t.special) or '-'}", file=out)
    for a in t.sp_arrows:
        print(f"arrow\t{a.name}\t{a.source}\t{a.target}", file=out)
    for r in relation_report(t):
        print(f"relation\t{r}", file=out)
    if args.regions:
        regions = classify_regions(s, tri)
        for reg in regions.regions:
            print(f"region\t{reg.kind}\t{' '.join(reg.sides)}\t{' '.join(reg.holes) or '-'}", file=out)
        for n in regions.notes:
            print(f"note\t{n}", file=out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_algebra(t))
    return EXIT_OK


def cmd_words_enumerate(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    print("index\tword\tlength\tdims\tprojective\tinjective", file=out)
    for k, tw in enumerate(hq.enumerate_admissible(args.max_len)):
        M = build_module(hq, tw)
        print(f"{k}\t{tw.text()}\t{len(tw.word)}\t{_dims(M.dim_vector())}\t{int(hq.is_projective(tw))}\t{int(hq.is_injective(tw))}", file=out)
    return EXIT_OK


def cmd_module_build(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    tw = _tagged(hq, args.word, args.tags)
    M = build_module(hq, tw)
    print(f"word\t{tw.text()}", file=out)
    print(f"dims\t{_dims(M.dim_vector())}", file=out)
    print(M.dump(), file=out)
    return EXIT_OK


def cmd_module_tau(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    tw = _tagged(hq, args.word, args.tags)
    r = hq.tagged_rotation(tw)
    M = module_of(hq, r)
    print(f"word\t{tw.text()}", file=out)
    print(f"rotation\t{_result_text(r)}", file=out)
    print(f"dims\t{_dims(M.dim_vector())}", file=out)
    if args.oracle:
        T = TransposeOracle(t).tau(build_module(hq, tw))
        same = is_isomorphic(T, M)
        print(f"oracle_dims\t{_dims(T.dim_vector())}", file=out)
        print(f"oracle_agrees\t{int(same)}", file=out)
        if not same:
            return EXIT_INVALID
    return EXIT_OK


def cmd_module_hom(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    a, b = _tagged(hq, args.word, args.tags), _tagged(hq, args.word2, args.tags2)
    comb = hom_dim_words(hq, a, b)
    lin = hom_dim_linear(build_module(hq, a), build_module(hq, b))
    print(f"hom_words\t{comb}", file=out)
    print(f"hom_linear\t{lin}", file=out)
    return EXIT_OK if comb == lin else EXIT_INVALID


def cmd_int(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    a, b = _tagged(hq, args.word, args.tags), _tagged(hq, args.word2, args.tags2)
    r = Intersector(hq).int_number(a, b)
    print(f"int\t{r.total}", file=out)
    print(f"black_12\t{r.black_12}", file=out)
    print(f"black_21\t{r.black_21}", file=out)
    return EXIT_OK


def cmd_tautilt_enumerate(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    hq = HatQuiver(t)
    tt = TauTilting(hq)
    ds = tt.enumerate_dissections(args.max_len)
    exhaustive = exhaustive_within(hq, args.max_len)
    print(f"# elements of T^x: {len(tagged_triangulation(t))}", file=out)
    print(f"# exhaustive: {int(exhaustive)}" + ("" if exhaustive else " (results are relative to --max-len)"), file=out)
    print("index\tcurves\tshifted\tdims\telements", file=out)
    for k, R in enumerate(ds):
        s = tt.support_tau_tilting_module(R)
        print(f"{k}\t{len(R.curves)}\t{len(R.shifted)}\t{_dims(s.dim_vector)}\t{R.text()}", file=out)
    print(f"# dissections: {len(ds)}", file=out)
    if args.oracle:
        c = compare_with_oracle(hq, args.max_len)
        print(f"# oracle: {c.oracle} support tau-tilting modules; agree={int(c.agree)}", file=out)
        if not c.agree:
            return EXIT_INVALID
    return EXIT_OK


def _verify(args, out: TextIO, fn) -> int:
    t = load_algebra(args.algebra)
    rep = fn(Workbench(t), args.max_len)
    print(f"checked\t{rep.checked}", file=out)
    print(f"failures\t{len(rep.failures)}", file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(f"checked\t{rep.checked}\nfailures\t{len(rep.failures)}\n")
            for f in rep.failures:
                fh.write(f"failure\t{f}\n")
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_verify_int_dim(args, out: TextIO) -> int:
    return _verify(args, out, verify_int_dim)


def cmd_verify_tau(args, out: TextIO) -> int:
    return _verify(args, out, verify_tau)


def _dot_id(x: str) -> str:
    return '"' + x.replace('"', r"\"") + '"'


def cmd_export_dot(args, out: TextIO) -> int:
    t = load_algebra(args.algebra)
    if args.graph == "quiver":
        print("digraph Q {", file=out)
        for v in t.vertices:
            shape = "doublecircle" if v in t.special else "circle"
            print(f"  {_dot_id(v)} [shape={shape}];", file=out)
        for a in t.sp_arrows:
            print(f"  {_dot_id(a.source)} -> {_dot_id(a.target)} [label={_dot_id(a.name)}];", file=out)
        for x, y in t.sp_relations_written():
            print(f"  // relation {x}{y}", file=out)
        print("}", file=out)
        return EXIT_OK
    hq = HatQuiver(t)
    g = TauTilting(hq).compatibility_graph(args.max_len)
    nodes = sorted(g.nodes, key=lambda n: n.key())
    ids = {n: f"n{k}" for k, n in enumerate(nodes)}
    print("graph C {", file=out)
    for n in nodes:
        print(f"  {ids[n]} [label={_dot_id(n.text())}];", file=out)
    for u, v in sorted(g.edges, key=lambda e: sorted((ids[e[0]], ids[e[1]]))):
        a, b = sorted((ids[u], ids[v]))
        print(f"  {a} -- {b};", file=out)
    print("}", file=out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route usage errors through one exit path
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewgentle", description="Skew-gentle algebras, tagged curves and tau-tilting.")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def max_len(x: str) -> int:
        v = int(x)
        if v < 0:
            raise argparse.ArgumentTypeError("must be >= 0")
        return v

    alg = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = alg.add_parser("check")
    c.add_argument("file")
    c.set_defaults(fn=cmd_algebra_check)
    c = alg.add_parser("from-surface")
    c.add_argument("file")
    c.add_argument("--regions", action="store_true", help="also list the regions with their types")
    c.add_argument("--output", help="write the algebra in .alg format")
    c.set_defaults(fn=cmd_algebra_from_surface)

    words = sub.add_parser("words").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = words.add_parser("enumerate")
    c.add_argument("--algebra", required=True)
    c.add_argument("--max-len", type=max_len, default=6)
    c.set_defaults(fn=cmd_words_enumerate)

    mod = sub.add_parser("module").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn in (("build", cmd_module_build), ("tau", cmd_module_tau), ("hom", cmd_module_hom)):
        c = mod.add_parser(name)
        c.add_argument("--algebra", required=True)
        c.add_argument("--word", required=True, help='letters separated by spaces, e.g. "z(1,-)^- b^- z(2,-)"')
        c.add_argument("--tags", help="comma-separated tags for the special end slots")
        if name == "hom":
            c.add_argument("--word2", required=True)
            c.add_argument("--tags2")
        if name == "tau":
            c.add_argument("--oracle", action="store_true", help="compare with the transpose oracle")
        c.set_defaults(fn=fn)

    c = sub.add_parser("int")
    c.add_argument("--algebra", required=True)
    c.add_argument("--word", required=True)
    c.add_argument("--tags")
    c.add_argument("--word2", required=True)
    c.add_argument("--tags2")
    c.set_defaults(fn=cmd_int)

    tt = sub.add_parser("tautilt").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = tt.add_parser("enumerate")
    c.add_argument("--algebra", required=True)
    c.add_argument("--max-len", type=max_len, default=6)
    c.add_argument("--oracle", action="store_true")
    c.set_defaults(fn=cmd_tautilt_enumerate)

    ver = sub.add_parser("verify").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn, default in (("int-dim", cmd_verify_int_dim, 6), ("tau", cmd_verify_tau, 8)):
        c = ver.add_parser(name)
        c.add_argument("--algebra", required=True)
        c.add_argument("--max-len", type=max_len, default=default)
        c.add_argument("--report", help="write a TSV failure report")
        c.set_defaults(fn=fn)

    ex = sub.add_parser("export").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = ex.add_parser("dot")
    c.add_argument("--algebra", required=True)
    c.add_argument("--graph", choices=("quiver", "compat"), default="quiver")
    c.add_argument("--max-len", type=max_len, default=4)
    c.set_defaults(fn=cmd_export_dot)
    return p


def config_of(args) -> CommandConfig:
    return CommandConfig(
        subcommand=f"{args.group} {getattr(args, 'cmd', '')}".strip(),
        inputs=tuple(x for x in (getattr(args, "file", None), getattr(args, "algebra", None)) if x),
        max_len=getattr(args, "max_len", 6),
        output=getattr(args, "output", None),
        oracle=getattr(args, "oracle", False),
        report=getattr(args, "report", None),
    )


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config_of(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.fn(args, out)
    except (InputError, WordError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
