"""Command-line front end.

Every verb is a thin adapter around one library call: files are parsed, the
operation runs, and the result is printed in the same text formats.  Verdicts
are data, so boolean answers print true/false and exit 0 either way; domain
errors exit 1 with a one-line diagnostic; usage errors exit 2.
"""

import argparse
import sys

from . import class_explorer, equivalence, random_ext, reductions, rotation
from .errors import PosetError
from .poset import format_graph, format_poset, parse_graph, parse_poset


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _poset(path):
    return parse_poset(_read(path))


def _graph(path):
    return parse_graph(_read(path))


def _parse_set(text):
    if text is None:
        return frozenset()
    body = text.strip().lstrip("{").rstrip("}")
    return frozenset(int(tok) for tok in body.replace(",", " ").split())


def _fmt_set(xs):
    return "{%s}" % ",".join(str(x) for x in sorted(xs))


def _bool(verdict):
    print("true" if verdict else "false")
    return 0


def _spec(args):
    return rotation.RotationSpec(_parse_set(args.A), _parse_set(args.C))


def cmd_validate(args):
    t = rotation.validate(_poset(args.poset), _spec(args))
    print("A=%s B=%s C=%s" % (_fmt_set(t.A), _fmt_set(t.B), _fmt_set(t.C)))
    return 0


def cmd_rotate(args):
    print(format_poset(rotation.rotate(_poset(args.poset), _spec(args))), end="")
    return 0


def cmd_cut(args):
    print(format_poset(rotation.cut(_poset(args.poset), _parse_set(args.A))), end="")
    return 0


def cmd_classify(args):
    P = _poset(args.poset)
    print(equivalence.classify_triple(P, args.a, args.b, args.c).value)
    return 0


def cmd_equiv(args):
    return _bool(equivalence.are_equivalent(_poset(args.p), _poset(args.q)))


def cmd_equiv_iso(args):
    return _bool(
        equivalence.equivalent_upto_iso(
            _poset(args.p), _poset(args.q), guard=args.guard
        )
    )


def cmd_witness(args):
    spec = equivalence.find_rotation(_poset(args.p), _poset(args.q))
    print("none" if spec is None else rotation.format_rotation_spec(spec))
    return 0


def cmd_canon(args):
    print(format_poset(equivalence.canonical_form(_poset(args.poset), guard=args.guard)), end="")
    return 0


def cmd_class(args):
    report = class_explorer.enumerate_class(_poset(args.poset), guard=args.guard)
    if args.machine:
        print("class 0 labeled=%d iso=%d" % (report.labeled_size, report.iso_count))
        return 0
    print("labeled=%d iso=%d" % (report.labeled_size, report.iso_count))
    for i, t in enumerate(report.iso_types):
        print("# iso type %d" % i)
        print(format_poset(t), end="")
    return 0


def cmd_stats(args):
    stats = class_explorer.class_stats(args.n, guard=args.guard, jobs=args.jobs)
    if args.machine:
        for row in stats.rows:
            print("class %d labeled=%d iso=%d" % (row.class_id, row.labeled, row.iso))
        return 0
    print("%-6s %8s %6s" % ("class", "labeled", "iso"))
    for row in stats.rows:
        print("%-6d %8d %6d" % (row.class_id, row.labeled, row.iso))
    print("total=%d classes=%d min_labeled=%d max_labeled=%d"
          % (stats.total, len(stats.rows), stats.min_labeled, stats.max_labeled))
    return 0


def cmd_reduce(args):
    if args.direction == "p2g":
        print(format_graph(reductions.poset_to_graph(_poset(args.inputs[0]))), end="")
    elif args.direction == "g2p":
        print(format_poset(reductions.graph_to_poset(_graph(args.inputs[0]))), end="")
    else:
        if len(args.inputs) != 2:
            raise PosetError("iso2rot needs two poset files")
        P2, Q2 = reductions.iso_to_roteq(_poset(args.inputs[0]), _poset(args.inputs[1]))
        print("# padded left")
        print(format_poset(P2), end="")
        print("# padded right")
        print(format_poset(Q2), end="")
    return 0


def cmd_sample(args):
    print(format_poset(random_ext.random_poset(args.n, args.p, args.seed)), end="")
    return 0


def cmd_ext_check(args):
    t = random_ext.ExtensionType(
        _parse_set(args.A), _parse_set(args.B), _parse_set(args.C)
    )
    a = random_ext.ext_witness(_poset(args.poset), t)
    print("none" if a is None else a)
    return 0


def cmd_pivot(args):
    print(format_poset(random_ext.pivot_rotation(_poset(args.poset), args.a)), end="")
    return 0


def build_parser():
    top = argparse.ArgumentParser(prog="posetrot",
                                  description="rotations and cuts of finite posets")
    sub = top.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check a rotation spec against a poset")
    p.add_argument("poset")
    p.add_argument("--A", default=None, help="comma-separated labels")
    p.add_argument("--C", default=None, help="comma-separated labels")

    p = add("rotate", cmd_rotate, help="apply a rotation")
    p.add_argument("poset")
    p.add_argument("--A", default=None)
    p.add_argument("--C", default=None)

    p = add("cut", cmd_cut, help="apply a cut")
    p.add_argument("poset")
    p.add_argument("--A", default=None)

    p = add("classify", cmd_classify, help="class of one labeled triple")
    p.add_argument("poset")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)

    p = add("equiv", cmd_equiv, help="rotation-equivalence on a shared domain")
    p.add_argument("p")
    p.add_argument("q")

    p = add("equiv-iso", cmd_equiv_iso, help="equivalence up to isomorphism")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--guard", type=int, default=10)

    p = add("witness", cmd_witness, help="print one rotation mapping p to q")
    p.add_argument("p")
    p.add_argument("q")

    p = add("canon", cmd_canon, help="canonical form under rotation and isomorphism")
    p.add_argument("poset")
    p.add_argument("--guard", type=int, default=10)

    p = add("class", cmd_class, help="enumerate the equivalence class")
    p.add_argument("poset")
    p.add_argument("--guard", type=int, default=7)
    p.add_argument("--machine", action="store_true")

    p = add("stats", cmd_stats, help="class-size spectrum over all posets of size n")
    p.add_argument("n", type=int)
    p.add_argument("--guard", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--machine", action="store_true")

    p = add("reduce", cmd_reduce, help="gadget translations")
    p.add_argument("direction", choices=("p2g", "g2p", "iso2rot"))
    p.add_argument("inputs", nargs="+")

    p = add("sample", cmd_sample, help="random poset by linear-order thinning")
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=None)

    p = add("ext-check", cmd_ext_check, help="find an element realizing an extension type")
    p.add_argument("poset")
    p.add_argument("--A", default=None)
    p.add_argument("--B", default=None)
    p.add_argument("--C", default=None)

    p = add("pivot", cmd_pivot, help="delete an element and rotate around it")
    p.add_argument("poset")
    p.add_argument("a", type=int)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (PosetError, ValueError, IndexError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
