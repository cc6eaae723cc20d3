"""Action digraph, nilpotency, radical and maximal nilpotent submultisemigroups."""

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Optional

import numpy as np

from .core import MultiOp, bits, popcount, require_associative, subset_product
from .errors import InternalError, ResourceError
from . import green


@dataclass(frozen=True)
class ActionDigraph:
    """Edge s -> t iff t lies in a*s for some a; ``adj[s, t]``."""

    adj: np.ndarray

    @property
    def n(self):
        return self.adj.shape[0]

    def edges(self):
        return [(int(s), int(t)) for s, t in np.argwhere(self.adj)]

    def successors(self, s):
        return [int(t) for t in np.flatnonzero(self.adj[s])]


def action_digraph(m: MultiOp) -> ActionDigraph:
    adj = m.array.any(axis=0)
    adj.flags.writeable = False
    return ActionDigraph(adj)


@dataclass(frozen=True)
class Nilpotency:
    nilpotent: bool
    degree: Optional[int] = None
    longest_path: Optional[int] = None
    cycle: Optional[tuple] = None  # s0 -> s1 -> ... -> s0 when not nilpotent


def _longest_path(g: ActionDigraph):
    """Edge count of the longest directed path, or a cycle when one exists."""
    ts = TopologicalSorter()
    for s in range(g.n):
        ts.add(s)
        for t in g.successors(s):
            ts.add(t, s)
    try:
        order = list(ts.static_order())
    except CycleError as exc:
        cyc = [int(x) for x in exc.args[1]]
        if not all(g.adj[cyc[i], cyc[i + 1]] for i in range(len(cyc) - 1)):
            cyc.reverse()
        return None, tuple(cyc)
    depth = [0] * g.n
    for s in order:
        for t in g.successors(s):
            depth[t] = max(depth[t], depth[s] + 1)
    return max(depth), None


def degree_by_powers(m: MultiOp, X: Optional[int] = None) -> Optional[int]:
    """Least k with X^k empty (X defaults to S), or None when X is not nilpotent."""
    X = m.full if X is None else X
    if not X:
        return 1
    # A non-empty X^(n+1) yields a path of n edges, hence a cycle.
    cur = X
    for k in range(2, m.n + 2):
        cur = subset_product(m, cur, X)
        if not cur:
            return k
    return None


def nilpotency(m: MultiOp) -> Nilpotency:
    """Decide nilpotency from the action digraph; degree = longest path + 2.

    The direct computation of the least k with S^k empty is run as well and
    any disagreement is an internal error.
    """
    require_associative(m)
    g = action_digraph(m)
    longest, cycle = _longest_path(g)
    direct = degree_by_powers(m)
    if cycle is not None:
        if direct is not None:
            raise InternalError("digraph has a cycle but S^k vanishes")
        return Nilpotency(False, cycle=cycle)
    if direct != longest + 2:
        raise InternalError(f"degree mismatch: path gives {longest + 2}, powers give {direct}")
    return Nilpotency(True, direct, longest)


def element_nilpotent(m: MultiOp, s) -> bool:
    """Whether s^k is empty for some k; stops as soon as a power repeats."""
    s = m.index(s)
    seen = set()
    cur = 1 << s
    while cur:
        if cur in seen:
            return False
        seen.add(cur)
        cur = subset_product(m, cur, 1 << s)
    return True


def is_nilpotent_subset(m: MultiOp, X: int) -> bool:
    return degree_by_powers(m, X) is not None


def radical(m: MultiOp) -> int:
    """Elements whose principal two-sided ideal is nilpotent."""
    require_associative(m)
    g = green.green_data(m)
    return bits(s for s in range(m.n) if is_nilpotent_subset(m, g.twosided_ideals[s]))


def maximal_nilpotent_ideal(m: MultiOp, limit: int = 10) -> int:
    """The largest nilpotent two-sided ideal, by enumerating all ideals (n <= limit)."""
    require_associative(m)
    if m.n > limit:
        raise ResourceError(f"ideal enumeration limited to n <= {limit}")
    best = 0
    for X in range(1, 1 << m.n):
        if green.is_ideal(m, X) and is_nilpotent_subset(m, X):
            best |= X
    if best and not (green.is_ideal(m, best) and is_nilpotent_subset(m, best)):
        raise InternalError("union of nilpotent ideals is not a nilpotent ideal")
    return best


def _candidates(m: MultiOp, R: int):
    """Subsets to search: supersets of R avoiding elements with s in s*s."""
    if green.classify_simplicity(m) == green.STRONGLY_SIMPLE and not green.is_zero_singleton(m):
        blocks = [h for h in green.green_data(m).H if subset_product(m, h, h) == 0]
    else:
        blocks = [1 << s for s in range(m.n) if not (R >> s & 1) and not (m(s, s) >> s & 1)]
    k = len(blocks)
    for code in range(1 << k):
        X = R
        for i in range(k):
            if code >> i & 1:
                X |= blocks[i]
        if X:
            yield X


def maximal_nilpotent_submultisemigroups(m: MultiOp, limit: int = 12) -> list:
    """Inclusion-maximal closed subsets T with T^k empty for some k.

    Every maximal one contains the radical; on strongly simple inputs each
    is a union of H-classes H with H*H empty.  Sorted by (size desc, mask).
    """
    require_associative(m)
    if m.n > limit:
        raise ResourceError(f"maximal nilpotent search limited to n <= {limit}")
    if nilpotency(m).nilpotent:
        return [m.full]
    R = radical(m)
    found = [X for X in _candidates(m, R) if m.is_closed(X) and is_nilpotent_subset(m, X)]
    found.sort(key=lambda X: (-popcount(X), X))
    maximal = []
    for X in found:
        if not any(X & ~Y == 0 for Y in maximal):
            maximal.append(X)
    return maximal


def closed_subsets(m: MultiOp):
    """Every non-empty closed subset (exponential; for small tests)."""
    return [X for X in range(1, 1 << m.n) if m.is_closed(X)]
