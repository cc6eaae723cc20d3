"""Ideals, Green's relations, quarks and simplicity.

Identity adjunction is simulated: S^1*a is {a} together with S*a, and so on.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import MultiOp, Verdict, bits, members, require_associative, subset_product
from .errors import InputError, PreconditionError

LEFT, RIGHT, TWOSIDED = "left", "right", "twosided"

NOT_SIMPLE, SIMPLE, STRONGLY_SIMPLE = "not_simple", "simple", "strongly_simple"


def left_ideal(m: MultiOp, a: int) -> int:
    return 1 << a | subset_product(m, m.full, 1 << a)


def right_ideal(m: MultiOp, a: int) -> int:
    return 1 << a | subset_product(m, 1 << a, m.full)


def twosided_ideal(m: MultiOp, a: int) -> int:
    left = left_ideal(m, a)
    return left | subset_product(m, left, m.full)


def principal_ideal(m: MultiOp, a, kind: str = TWOSIDED) -> int:
    require_associative(m)
    a = m.index(a)
    if kind == LEFT:
        return left_ideal(m, a)
    if kind == RIGHT:
        return right_ideal(m, a)
    if kind == TWOSIDED:
        return twosided_ideal(m, a)
    raise InputError(f"unknown ideal kind {kind!r}")


def ideal_closure(m: MultiOp, X: int, kind: str = TWOSIDED) -> int:
    """Smallest ideal of the given kind containing X (S^1*X, X*S^1 or S^1*X*S^1)."""
    out = X
    if kind in (LEFT, TWOSIDED):
        out |= subset_product(m, m.full, X)
    if kind in (RIGHT, TWOSIDED):
        out |= subset_product(m, out, m.full)
    return out


def is_ideal(m: MultiOp, X: int, kind: str = TWOSIDED) -> bool:
    return ideal_closure(m, X, kind) == X


def _classes(ideals):
    """Group indices by equal principal ideal; classes ordered by least element."""
    seen = {}
    for i, ideal in enumerate(ideals):
        seen.setdefault(ideal, 0)
        seen[ideal] |= 1 << i
    return tuple(sorted(seen.values(), key=lambda c: (c & -c)))


def _join(n, first, second):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (first, second):
        for cls in part:
            idx = members(cls)
            for x in idx[1:]:
                parent[find(x)] = find(idx[0])
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), 0)
        groups[find(x)] |= 1 << x
    return tuple(sorted(groups.values(), key=lambda c: (c & -c)))


@dataclass(frozen=True)
class GreenData:
    """Green's preorders (as matrices) and the five relations (as partitions).

    ``leq_L[b, a]`` is true iff b <=_L a, i.e. S^1*b is contained in S^1*a.
    """

    n: int
    left_ideals: tuple
    right_ideals: tuple
    twosided_ideals: tuple
    leq_L: np.ndarray
    leq_R: np.ndarray
    leq_J: np.ndarray
    L: tuple
    R: tuple
    J: tuple
    H: tuple
    D: tuple

    @staticmethod
    def _find(part, a):
        for cls in part:
            if cls >> a & 1:
                return cls
        raise InputError(f"element {a} not in carrier")

    def L_class(self, a):
        return self._find(self.L, a)

    def R_class(self, a):
        return self._find(self.R, a)

    def J_class(self, a):
        return self._find(self.J, a)

    def H_class(self, a):
        return self._find(self.H, a)

    def D_class(self, a):
        return self._find(self.D, a)

    @staticmethod
    def relation_matrix(part, n):
        mat = np.zeros((n, n), dtype=bool)
        for cls in part:
            idx = members(cls)
            mat[np.ix_(idx, idx)] = True
        return mat


def _preorder(ideals):
    n = len(ideals)
    mat = np.zeros((n, n), dtype=bool)
    for b in range(n):
        for a in range(n):
            mat[b, a] = ideals[b] & ~ideals[a] == 0
    return mat


@lru_cache(maxsize=512)
def green_data(m: MultiOp) -> GreenData:
    require_associative(m)
    n = m.n
    lefts = tuple(left_ideal(m, a) for a in range(n))
    rights = tuple(right_ideal(m, a) for a in range(n))
    twos = tuple(twosided_ideal(m, a) for a in range(n))
    L = _classes(lefts)
    R = _classes(rights)
    J = _classes(twos)
    H = _classes([(lefts[a], rights[a]) for a in range(n)])
    D = _join(n, L, R)
    return GreenData(n, lefts, rights, twos, _preorder(lefts), _preorder(rights), _preorder(twos), L, R, J, H, D)


def is_simple(m: MultiOp) -> bool:
    g = green_data(m)
    return all(t == m.full for t in g.twosided_ideals)


def _minimal(ideals, a):
    own = ideals[a]
    return all(ideals[t] == own for t in members(own))


def quarks(m: MultiOp) -> int:
    """Elements whose principal left and right ideals are both minimal."""
    g = green_data(m)
    return bits(a for a in range(m.n) if _minimal(g.left_ideals, a) and _minimal(g.right_ideals, a))


def classify_simplicity(m: MultiOp) -> str:
    if not is_simple(m):
        return NOT_SIMPLE
    if quarks(m) == m.full:
        return STRONGLY_SIMPLE
    return SIMPLE


def is_zero_singleton(m: MultiOp) -> bool:
    """True for the one-element multisemigroup with empty product."""
    return m.n == 1 and m(0, 0) == 0


def is_hypergroup_on(m: MultiOp, H: int) -> bool:
    """Whether the subset H is a submultisemigroup satisfying the reproduction axiom."""
    if not H or not m.is_closed(H):
        return False
    for a in members(H):
        if subset_product(m, H, 1 << a) != H or subset_product(m, 1 << a, H) != H:
            return False
    return True


def incidence_matrix(m: MultiOp) -> np.ndarray:
    """Boolean matrix over (L-classes x R-classes) marking hypergroup intersections.

    Only for strongly simple inputs other than the zero singleton, where an
    intersection is a hypergroup exactly when its self-product is non-empty.
    """
    if classify_simplicity(m) != STRONGLY_SIMPLE:
        raise PreconditionError("incidence matrix needs a strongly simple multisemigroup")
    if is_zero_singleton(m):
        raise PreconditionError("incidence matrix is undefined for the zero singleton")
    g = green_data(m)
    out = np.zeros((len(g.L), len(g.R)), dtype=bool)
    for i, I in enumerate(g.L):
        for j, J in enumerate(g.R):
            cell = I & J
            out[i, j] = bool(cell) and subset_product(m, cell, cell) != 0
    return out


def green_commutation(m: MultiOp) -> Verdict:
    """Check L o R = R o L; the witness is the first pair in the symmetric difference.

    Composition reads left to right: (x, y) is in R o L iff x R z and z L y
    for some z.
    """
    g = green_data(m)
    Lm = GreenData.relation_matrix(g.L, m.n).astype(np.uint8)
    Rm = GreenData.relation_matrix(g.R, m.n).astype(np.uint8)
    lr = (Lm @ Rm) > 0
    rl = (Rm @ Lm) > 0
    diff = np.argwhere(lr != rl)
    if len(diff) == 0:
        return Verdict(True)
    x, y = (int(v) for v in diff[0])
    where = "R o L" if rl[x, y] else "L o R"
    return Verdict(False, (x, y), f"pair only in {where}")


@dataclass(frozen=True)
class EggBox:
    """H-classes of one D-class laid out as R-classes (rows) by L-classes (columns)."""

    rows: tuple
    cols: tuple
    cells: tuple  # cells[i][j] = rows[i] & cols[j], possibly empty


def egg_boxes(m: MultiOp) -> list:
    g = green_data(m)
    boxes = []
    for d in g.D:
        rows = tuple(r for r in g.R if r & d)
        cols = tuple(c for c in g.L if c & d)
        boxes.append(EggBox(rows, cols, tuple(tuple(r & c for c in cols) for r in rows)))
    return boxes


def format_egg_box(m: MultiOp, box: EggBox) -> str:
    def label(mask):
        return "{" + ",".join(m.labels(mask)) + "}" if mask else "-"

    def head(mask, letter):
        return f"{letter}_{m.names[members(mask)[0]]}"

    header = [""] + [head(c, "L") for c in box.cols]
    body = [[head(r, "R")] + [label(x) for x in row] for r, row in zip(box.rows, box.cells)]
    widths = [max(len(r[j]) for r in [header] + body) for j in range(len(header))]
    lines = [" | ".join(x.ljust(w) for x, w in zip(r, widths)) for r in [header] + body]
    return "\n".join(lines)


def minimal_left_ideals(m: MultiOp) -> list:
    g = green_data(m)
    return sorted({g.left_ideals[a] for a in range(m.n) if _minimal(g.left_ideals, a)}, key=lambda c: c & -c)


def minimal_right_ideals(m: MultiOp) -> list:
    g = green_data(m)
    return sorted({g.right_ideals[a] for a in range(m.n) if _minimal(g.right_ideals, a)}, key=lambda c: c & -c)


def principal_ideal_family(m: MultiOp, kind: str, unions: int = 2) -> set:
    """Principal ideals of one kind plus unions of up to ``unions`` of them."""
    g = green_data(m)
    base = {LEFT: g.left_ideals, RIGHT: g.right_ideals, TWOSIDED: g.twosided_ideals}[kind]
    family = set(base)
    if unions >= 2:
        family |= {x | y for x in base for y in base}
    return family


def all_ideals(m: MultiOp, kind: str = TWOSIDED, limit: int = 6) -> list:
    """Every non-empty ideal of one kind, by exhaustive enumeration (n <= limit)."""
    if m.n > limit:
        raise PreconditionError(f"exhaustive ideal enumeration limited to n <= {limit}")
    return [X for X in range(1, 1 << m.n) if is_ideal(m, X, kind)]


def support_H_partition(m: MultiOp) -> Optional[tuple]:
    """H-classes contained in the support Q(S), or None when the support is empty."""
    Q = quarks(m)
    if not Q:
        return None
    return tuple(h for h in green_data(m).H if h & Q)
