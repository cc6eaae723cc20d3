"""Command-line front end.

Exit codes: 0 success or property holds, 1 property failed (a witness is
printed), 2 malformed input or bad arguments, 3 resource budget exceeded.
"""

import argparse
import json
import re
import sys

from . import census as census_mod
from . import constructions as cons
from . import green, hecke, nilpotent, quotients, representations
from .core import (
    adjoin_identity, adjoin_zero, classify, find_identity, find_zero, idempotent_report,
    is_associative, is_hypergroup, is_multigroup, strip_zero,
)
from .errors import (
    AxiomError, InputError, MultiOpError, NotFoundError, PreconditionError, ResourceError,
)
from .fixtures import FIXTURE_NAMES, fixture
from .io import TableDocument, dumps_multiop, load_multiop, read_path
from .semigroups import (
    Poset, brandt_semigroup, cyclic_group, dihedral_group, left_zero_semigroup,
    null_semigroup, rectangular_band, symmetric_group_s3,
)


class Outcome:
    def __init__(self, code=0, text="", result=None, witness=None):
        self.code = code
        self.text = text
        self.result = result if result is not None else {}
        self.witness = witness


def _load(path):
    return load_multiop(read_path(path))


def _labels(m, mask):
    return m.labels(mask)


def _fmt(m, mask):
    return "{" + ",".join(m.labels(mask)) + "}"


def _parse_subset(m, text):
    text = (text or "").strip()
    if text in ("", "empty"):
        return 0
    if text == "all":
        return m.full
    return m.subset(x.strip() for x in text.split(","))


def _emit_table(m, args, name=None):
    """Write the document to -o or return it for stdout."""
    doc = dumps_multiop(m, name)
    result = {"document": json.loads(doc)}
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
        return Outcome(0, f"wrote {args.output} ({m.n} elements)", result)
    return Outcome(0, doc.rstrip("\n"), result)


# -- analysis commands -------------------------------------------------------

def cmd_check(args):
    m = _load(args.file)
    v = is_associative(m)
    if not v:
        a, b, c = v.witness
        names = m.names
        text = (f"not associative at ({names[a]}, {names[b]}, {names[c]}): "
                f"a*(b*c) = {_fmt(m, v.detail['left'])}, (a*b)*c = {_fmt(m, v.detail['right'])}")
        return Outcome(1, text, {"associative": False}, [names[a], names[b], names[c]])
    kind = classify(m)
    one = find_identity(m)
    zero = find_zero(m)
    idem, quasi = idempotent_report(m)
    hyper = is_hypergroup(m)
    mg = is_multigroup(m)
    simple = green.classify_simplicity(m)
    result = {
        "associative": True,
        "class": kind,
        "identity": None if one is None else m.names[one],
        "zero": None if zero is None else m.names[zero],
        "hypergroup": hyper,
        "multigroup": mg.holds,
        "inverse": {m.names[a]: m.names[b] for a, b in enumerate(mg.witness)} if mg else None,
        "idempotents": _labels(m, idem),
        "quasi_idempotents": _labels(m, quasi),
        "simplicity": simple,
    }
    lines = ["associative", f"class: {kind}"]
    lines.append(f"identity {result['identity']}" if one is not None else "identity: none")
    lines.append(f"zero {result['zero']}" if zero is not None else "zero: none")
    lines.append("hypergroup" if hyper else "not a hypergroup")
    if mg:
        inv = ", ".join(f"{k}->{v}" for k, v in result["inverse"].items())
        lines.append(f"multigroup (inverse {inv})")
    else:
        lines.append("not a multigroup")
    lines.append(f"idempotents: {_fmt(m, idem)}")
    lines.append(f"quasi-idempotents: {_fmt(m, quasi)}")
    lines.append(f"simplicity: {simple}")
    return Outcome(0, "\n".join(lines), result)


def cmd_green(args):
    m = _load(args.file)
    g = green.green_data(m)
    simple = green.classify_simplicity(m)
    Q = green.quarks(m)
    comm = green.green_commutation(m)
    result = {
        "L": [_labels(m, c) for c in g.L],
        "R": [_labels(m, c) for c in g.R],
        "J": [_labels(m, c) for c in g.J],
        "H": [_labels(m, c) for c in g.H],
        "D": [_labels(m, c) for c in g.D],
        "simplicity": simple,
        "quarks": _labels(m, Q),
        "commute": comm.holds,
    }
    lines = []
    for rel in "LRJHD":
        lines.append(f"{rel}: " + " ".join(_fmt(m, c) for c in getattr(g, rel)))
    lines.append(f"simplicity: {simple}")
    lines.append(f"quarks: {_fmt(m, Q)}")
    boxes = green.egg_boxes(m)
    result["egg_boxes"] = []
    for i, box in enumerate(boxes):
        lines.append(f"egg-box {i + 1}:")
        lines.append(green.format_egg_box(m, box))
        result["egg_boxes"].append([[_labels(m, c) for c in row] for row in box.cells])
    if simple == green.STRONGLY_SIMPLE and not green.is_zero_singleton(m):
        mat = green.incidence_matrix(m)
        result["incidence_matrix"] = mat.astype(int).tolist()
        lines.append("incidence matrix:")
        lines.append(representations.format_matrix(mat))
    if comm:
        lines.append("L o R = R o L")
    else:
        x, y = comm.witness
        lines.append(f"L o R != R o L: ({m.names[x]}, {m.names[y]}) {comm.detail}")
        result["commutation_witness"] = [m.names[x], m.names[y]]
    return Outcome(0, "\n".join(lines), result)


def cmd_nilpotent(args):
    m = _load(args.file)
    nil = nilpotent.nilpotency(m)
    R = nilpotent.radical(m)
    result = {"nilpotent": nil.nilpotent, "degree": nil.degree, "radical": _labels(m, R)}
    lines = []
    if nil.nilpotent:
        lines.append(f"nilpotent, degree {nil.degree} (longest path {nil.longest_path})")
    else:
        cyc = " -> ".join(m.names[x] for x in nil.cycle)
        lines.append(f"not nilpotent; cycle {cyc}")
        result["cycle"] = [m.names[x] for x in nil.cycle]
    lines.append(f"radical: {_fmt(m, R)}")
    if m.n <= args.limit:
        maxi = nilpotent.maximal_nilpotent_submultisemigroups(m, args.limit)
        result["maximal_nilpotent"] = [_labels(m, X) for X in maxi]
        lines.append("maximal nilpotent submultisemigroups: " + (" ".join(_fmt(m, X) for X in maxi) or "none"))
    else:
        lines.append(f"maximal nilpotent search skipped (n > {args.limit})")
    return Outcome(0, "\n".join(lines), result)


def _parse_partition(m, text):
    classes = []
    seen = 0
    for chunk in text.split(";"):
        if chunk.strip():
            mask = _parse_subset(m, chunk)
            if mask & seen:
                raise InputError("partition classes overlap")
            seen |= mask
            classes.append(mask)
    classes += [1 << x for x in range(m.n) if not seen >> x & 1]
    return quotients.Partition(m.n, classes)


def cmd_quotient(args):
    m = _load(args.file)
    if (args.partition is None) == (args.rees is None):
        raise InputError("give exactly one of --partition or --rees")
    if args.rees is not None:
        out = quotients.rees_quotient(m, _parse_subset(m, args.rees))
    else:
        p = _parse_partition(m, args.partition)
        v = quotients.is_congruence(m, p)
        if not v:
            side, a, b, c, s = v.witness
            names = m.names
            text = (f"not a congruence ({side}): {names[a]} ~ {names[b]}, c = {names[c]}, "
                    f"{names[s]} has no partner")
            return Outcome(1, text, {"congruence": False}, [side, names[a], names[b], names[c], names[s]])
        out = quotients.quotient(m, p)
    return _emit_table(out, args)


def cmd_rep(args):
    m = _load(args.file)
    result = {}
    lines = []
    code = 0
    witness = None
    for side in ("left", "right"):
        v = representations.verify_rep(m, side)
        result[side] = v.holds
        if v:
            lines.append(f"{side} regular representation: ok")
        else:
            a, b = v.witness
            lines.append(f"{side} regular representation fails at ({m.names[a]}, {m.names[b]})")
            code, witness = 1, [side, m.names[a], m.names[b]]
    if args.element:
        mat = representations.regular_rep(m, args.element, "left")
        lines.append(f"tau_{args.element}:")
        lines.append(representations.format_matrix(mat))
        result["matrix"] = mat.astype(int).tolist()
    return Outcome(code, "\n".join(lines), result, witness)


# -- generators ---------------------------------------------------------------

def _semigroup(text):
    text = text.strip()
    if text == "S3":
        return symmetric_group_s3()
    patterns = [
        (r"C(\d+)", lambda k: cyclic_group(k)),
        (r"D(\d+)", lambda k: dihedral_group(k)),
        (r"leftzero(\d+)", lambda k: left_zero_semigroup(k)),
        (r"null(\d+)", lambda k: null_semigroup(k)),
        (r"brandt(\d+)", lambda k: brandt_semigroup(k)),
    ]
    for pat, make in patterns:
        hit = re.fullmatch(pat, text)
        if hit and 1 <= int(hit[1]) <= 64:
            return make(int(hit[1]))
    hit = re.fullmatch(r"band(\d+)x(\d+)", text)
    if hit and 1 <= int(hit[1]) * int(hit[2]) <= 64:
        return rectangular_band(int(hit[1]), int(hit[2]))
    raise InputError(f"unknown semigroup {text!r} (S3, C<n>, D<m>, band<p>x<q>, leftzero<n>, null<n>, brandt<k>)")


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"construction {args.name} needs --{name.replace('_', '-')}")


def _sg_subset(s, text):
    index = {x: i for i, x in enumerate(s.names)}
    try:
        return sum(1 << index[x.strip()] for x in set(text.split(",")) if x.strip())
    except KeyError as exc:
        raise InputError(f"unknown element {exc.args[0]!r}") from None


def build_construction(args):
    name = args.name
    if name == "trivial":
        _need(args, "n")
        if args.n < 1:
            raise InputError("n must be positive")
        base = cons.trivial_multiop(args.n)
        return cons.trivial_multiop(args.n, _parse_subset(base, args.subset))
    if name == "coset":
        _need(args, "group", "subgroup")
        g = _semigroup(args.group)
        return cons.coset_multiop(g, _sg_subset(g, args.subgroup), args.level)
    if name == "ideal":
        _need(args, "semigroup", "kind")
        return cons.ideal_multiop(_semigroup(args.semigroup), args.kind)
    if name == "monogenic":
        _need(args, "semigroup")
        return cons.monogenic_multiop(_semigroup(args.semigroup))
    if name == "subword":
        _need(args, "alphabet", "max_len")
        return cons.subword_multiop(args.alphabet, args.max_len)
    if name == "no_quasi_idempotent":
        _need(args, "n")
        return cons.no_quasi_idempotent_hypergroup(args.n)
    if name == "poset_band":
        chains = [int(x) for x in (args.chains or "2").split(",")]
        if any(k < 1 for k in chains):
            raise InputError("chain lengths must be positive")
        posets = []
        for i, k in enumerate(chains):
            labels = [str(j + 1) for j in range(k)] if len(chains) == 1 else [f"{chr(97 + i)}{j + 1}" for j in range(k)]
            posets.append(Poset.chain(k, labels))
        return cons.poset_band(posets)
    if name == "double_variant":
        _need(args, "input", "x", "y")
        m = _load(args.input)
        return cons.double_variant(m, _parse_subset(m, args.x), _parse_subset(m, args.y))
    if name == "disconnected_union":
        _need(args, "input", "input2")
        return cons.disconnected_union(_load(args.input), _load(args.input2))
    if name == "inflation":
        _need(args, "input", "map")
        m = _load(args.input)
        return cons.inflation(m, [x.strip() for x in args.map.split(",")])
    if name == "adjoin_zero":
        _need(args, "input")
        return adjoin_zero(_load(args.input), args.mode)
    if name == "adjoin_identity":
        _need(args, "input")
        return adjoin_identity(_load(args.input))
    if name == "strip_zero":
        _need(args, "input")
        return strip_zero(_load(args.input))
    raise InputError(f"unknown construction {name!r}")


CONSTRUCTIONS = (
    "trivial", "coset", "ideal", "monogenic", "subword", "no_quasi_idempotent", "poset_band",
    "double_variant", "disconnected_union", "inflation", "adjoin_zero", "adjoin_identity", "strip_zero",
)


def cmd_construct(args):
    return _emit_table(build_construction(args), args, args.name)


def cmd_hecke(args):
    W = hecke.build_coxeter(args.kind)
    return _emit_table(hecke.boolean_hecke(W, args.q), args, f"hecke_{args.kind}")


def cmd_fixture(args):
    return _emit_table(fixture(args.name), args, args.name)


def cmd_census(args):
    ns = [int(x) for x in str(args.n).split(",")]
    lines, records = [], []
    if args.single_valued:
        for n in ns:
            total, ok = census_mod.single_valued_census(n)
            records.append({"n": n, "total": total, "associative": ok, "fraction": ok / total})
            lines.append(f"n={n}: {ok}/{total} single-valued operations associative ({ok / total:.6g})")
        return Outcome(0, "\n".join(lines), {"reports": records})
    for n in ns:
        if args.exhaustive:
            rep = census_mod.exhaustive_census(n, args.allow_large)
        else:
            rep = census_mod.estimate_fractions(n, args.samples, args.seed, args.density)
        records.append(rep.to_dict())
        lo, hi = rep.interval()
        lines.append(
            f"n={n} {'total' if rep.exhaustive else 'samples'}={rep.samples} "
            f"associative={rep.count_associative} ({rep.fraction():.4f}, 95% CI [{lo:.4f}, {hi:.4f}]) "
            f"hypergroup={rep.count_hypergroup} Z={rep.count_Z} "
            f"n^4(3/4)^n={census_mod.union_bound(n):.3g} time={rep.elapsed:.2f}s"
        )
    return Outcome(0, "\n".join(lines), {"reports": records})


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _q(text):
    from fractions import Fraction

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p = _Parser(prog="multisemi", description="Finite multisemigroup toolkit")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in (
        ("check", cmd_check, "axioms and classification"),
        ("green", cmd_green, "Green's relations, egg-boxes, incidence matrix"),
        ("nilpotent", cmd_nilpotent, "nilpotency degree, radical, maximal nilpotent subsets"),
        ("rep", cmd_rep, "verify the regular representations"),
    ):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("file", help="table document, or - for stdin")
        sp.set_defaults(func=fn)
        if name == "nilpotent":
            sp.add_argument("--limit", type=int, default=12)
        if name == "rep":
            sp.add_argument("--element", help="also print tau of this element")

    sp = sub.add_parser("quotient", help="congruence or Rees quotient", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--partition", help="classes as 'a,b;c,d' (unlisted elements are singletons)")
    sp.add_argument("--rees", help="ideal as 'a,b'")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("construct", help="generate a construction", parents=[common])
    sp.add_argument("name", choices=CONSTRUCTIONS)
    sp.add_argument("--n", type=int)
    sp.add_argument("--subset", help="labels, 'all' or 'empty'")
    sp.add_argument("--group")
    sp.add_argument("--subgroup")
    sp.add_argument("--level", default="elements", choices=["elements", "cosets"])
    sp.add_argument("--semigroup")
    sp.add_argument("--kind")
    sp.add_argument("--alphabet", type=int)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--chains", help="comma-separated chain lengths")
    sp.add_argument("--input")
    sp.add_argument("--input2")
    sp.add_argument("--x")
    sp.add_argument("--y")
    sp.add_argument("--map")
    sp.add_argument("--mode", default="bullet", choices=["bullet", "odot"])
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("hecke", help="Boolean Hecke multigroup", parents=[common])
    sp.add_argument("kind", help="A1, A2, A3, B2, B3 or I2(m)")
    sp.add_argument("--q", type=_q, default=_q("2"))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_hecke)

    sp = sub.add_parser("census", help="count associative tables", parents=[common])
    sp.add_argument("--n", required=True, help="size or comma-separated sizes")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--allow-large", action="store_true", help="permit the 2^27-table run at n=3")
    sp.add_argument("--single-valued", action="store_true")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("fixture", help="write a stored example table", parents=[common])
    sp.add_argument("name", choices=FIXTURE_NAMES)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_fixture)
    return p


def _input_record(args):
    skip = {"func", "json", "command"}
    out = {}
    for k, v in vars(args).items():
        if k in skip or v is None:
            continue
        out[k] = v if isinstance(v, (int, float, str, bool)) else str(v)
    return out


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (AxiomError, PreconditionError, NotFoundError) as exc:
        witness = getattr(exc, "witness", None)
        out = Outcome(1, f"error: {exc}", {"error": str(exc)}, witness)
    except ResourceError as exc:
        out = Outcome(3, f"error: {exc}", {"error": str(exc)})
    except (InputError, MultiOpError) as exc:
        out = Outcome(2, f"error: {exc}", {"error": str(exc)})
    if args.json:
        env = {"command": args.command, "input": _input_record(args), "result": out.result}
        if out.witness is not None:
            env["witness"] = out.witness
        print(json.dumps(env, ensure_ascii=False, default=str))
    else:
        stream = sys.stderr if out.code and out.text.startswith("error:") else sys.stdout
        if out.text:
            print(out.text, file=stream)
    return out.code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
