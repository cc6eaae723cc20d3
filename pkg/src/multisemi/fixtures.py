"""Hardcoded multiplication tables of the standard small examples."""

from .core import MultiOp, bits
from .constructions import poset_band
from .errors import InputError
from .semigroups import Poset

# Cells are given as a single label or a list of labels.

_TWO_ELEMENT = (
    ["a", "b"],
    [
        ["a", ["a", "b"]],
        ["a", "b"],
    ],
)

_KL_A2 = (
    ["e", "s", "t", "st", "ts", "sts"],
    [
        ["e", "s", "t", "st", "ts", "sts"],
        ["s", "s", "st", "st", ["sts", "s"], "sts"],
        ["t", "ts", "t", ["sts", "t"], "ts", "sts"],
        ["st", ["sts", "s"], "st", ["sts", "st"], ["sts", "s"], "sts"],
        ["ts", "ts", ["sts", "t"], ["sts", "t"], ["sts", "ts"], "sts"],
        ["sts", "sts", "sts", "sts", "sts", "sts"],
    ],
)

_HECKE_A2 = (
    ["e", "s", "t", "st", "ts", "sts"],
    [
        ["e", "s", "t", "st", "ts", "sts"],
        ["s", ["e", "s"], "st", ["t", "st"], "sts", ["ts", "sts"]],
        ["t", "ts", ["e", "t"], "sts", ["s", "ts"], ["st", "sts"]],
        ["st", "sts", ["s", "st"], ["ts", "sts"], ["e", "s", "sts"], ["t", "st", "ts", "sts"]],
        ["ts", ["t", "ts"], "sts", ["e", "t", "sts"], ["st", "sts"], ["s", "st", "ts", "sts"]],
        ["sts", ["st", "sts"], ["ts", "sts"], ["s", "st", "ts", "sts"], ["t", "st", "ts", "sts"],
         ["e", "s", "t", "st", "ts", "sts"]],
    ],
)

_S5_209 = (
    ["1", "a", "b", "t"],
    [
        ["1", "a", "b", "t"],
        ["a", "a", ["1", "a", "b", "t"], ["a", "t"]],
        ["b", "t", "b", "t"],
        ["t", "t", ["b", "t"], "t"],
    ],
)

# Rees quotient of the submultisemigroup W \ {e} of the type B2
# Kazhdan-Lusztig multisemigroup by its zero {stst}.
_KL_B2_T = (
    ["s", "t", "st", "ts", "sts", "tst"],
    [
        ["s", "st", "st", ["s", "sts"], "sts", "st"],
        ["ts", "t", ["t", "tst"], "ts", "ts", "tst"],
        [["s", "sts"], "st", "st", ["s", "sts"], ["s", "sts"], "st"],
        ["ts", ["t", "tst"], ["t", "tst"], "ts", "ts", ["t", "tst"]],
        ["sts", "st", "st", ["s", "sts"], "s", "st"],
        ["ts", "tst", ["t", "tst"], "ts", "ts", "t"],
    ],
)


def _t_5207() -> MultiOp:
    """Five elements: S(X) for the chain 1 < 2 plus a twin (1',1') of (1,1).

    x o y = pi(x)*pi(y) when x lies in {(1,1),(1',1'),(1,2)} and y in
    {(1,1),(1',1'),(2,1)}, otherwise the same set with (1',1') added.
    """
    base = poset_band(Poset.chain(2))
    names = list(base.names) + ["(1',1')"]
    twin = 4
    pi = [0, 1, 2, 3, 0]
    left_set = {0, twin, 1}
    right_set = {0, twin, 2}
    cube = []
    for x in range(5):
        row = []
        for y in range(5):
            cell = base(pi[x], pi[y])
            if not (x in left_set and y in right_set):
                cell |= 1 << twin
            row.append(cell)
        cube.append(row)
    return MultiOp(cube, names)


def _t_531() -> MultiOp:
    """S(X) for the chain 1 < 2 with (2,2) removed from the carrier and from every product."""
    base = poset_band(Poset.chain(2))
    keep = [0, 1, 2]
    cube = [[base(a, b) & bits(keep) for b in keep] for a in keep]
    return MultiOp(cube, [base.names[i] for i in keep])


_LITERAL = {
    "two_element": _TWO_ELEMENT,
    "kl_a2": _KL_A2,
    "hecke_a2": _HECKE_A2,
    "s5_209": _S5_209,
    "kl_b2_T": _KL_B2_T,
}

_BUILT = {
    "t_5207": _t_5207,
    "t_531": _t_531,
}

FIXTURE_NAMES = ("two_element", "kl_a2", "hecke_a2", "s5_209", "t_5207", "t_531", "kl_b2_T")


def fixture(name: str) -> MultiOp:
    if name in _LITERAL:
        names, table = _LITERAL[name]
        m = MultiOp.from_labels(names, table)
    elif name in _BUILT:
        m = _BUILT[name]()
    else:
        raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    return m
