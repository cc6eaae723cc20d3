"""Finite multivalued operations and their axiom-level decision procedures.

A subset of the carrier is an ``int`` used as a bit vector: bit ``i`` is set
iff element ``i`` is a member.  Element identity is the index; labels are
only for presentation and serialization.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from . import _kernel
from .errors import AxiomError, DimensionError, InputError, ModeError, NotFoundError

SEMIGROUP = "semigroup"
QUASI_SEMIGROUP = "quasi_semigroup"
PROPER = "proper_multisemigroup"


def bits(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check; truthy iff the property holds."""

    holds: bool
    witness: Any = None
    detail: Any = None

    def __bool__(self):
        return self.holds


class MultiOp:
    """An n-element carrier with a table of subsets ``cube[a][b] = a * b``.

    Instances are immutable.  Associativity is not assumed; see
    :func:`is_associative`.
    """

    def __init__(self, cube: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        rows = tuple(tuple(int(c) for c in row) for row in cube)
        n = len(rows)
        if n == 0:
            raise InputError("a multioperation needs a non-empty carrier")
        limit = 1 << n
        for row in rows:
            if len(row) != n:
                raise InputError("table must be square")
            for c in row:
                if c < 0 or c >= limit:
                    raise DimensionError(f"cell {c:#x} does not fit a carrier of size {n}")
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise InputError(f"expected {n} labels, got {len(names)}")
        if any(not x for x in names):
            raise InputError("labels must be non-empty")
        if len(set(names)) != n:
            raise InputError("labels must be pairwise distinct")
        self._cube = rows
        self._names = names
        self._index = {x: i for i, x in enumerate(names)}

    @classmethod
    def from_sets(cls, table, names=None):
        """Build from cells given as iterables of element indices."""
        return cls([[bits(cell) for cell in row] for row in table], names)

    @classmethod
    def from_labels(cls, names, table):
        """Build from cells given as labels: a single label, or an iterable of labels."""
        index = {x: i for i, x in enumerate(names)}

        def cell(value):
            if isinstance(value, str):
                value = [value]
            try:
                return bits(index[x] for x in value)
            except KeyError as exc:
                raise InputError(f"unknown label {exc.args[0]!r} in table") from None

        return cls([[cell(v) for v in row] for row in table], names)

    @classmethod
    def from_array(cls, arr, names=None):
        """Build from a Boolean array with ``arr[a, b, k]`` true iff k is in a * b."""
        arr = np.asarray(arr, dtype=bool)
        n = arr.shape[0]
        if arr.shape != (n, n, n):
            raise InputError(f"expected shape (n, n, n), got {arr.shape}")
        weights = 1 << np.arange(n, dtype=object)
        cube = [[int((weights[arr[a, b]]).sum()) for b in range(n)] for a in range(n)]
        return cls(cube, names)

    @property
    def n(self) -> int:
        return len(self._names)

    @property
    def names(self) -> tuple:
        return self._names

    @property
    def cube(self) -> tuple:
        return self._cube

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __call__(self, a: int, b: int) -> int:
        return self._cube[a][b]

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.n:
                return int(label)
            raise InputError(f"element index {label} out of range")
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown element {label!r}") from None

    def subset(self, labels: Iterable) -> int:
        return bits(self.index(x) for x in labels)

    def labels(self, mask: int) -> list:
        return [self._names[i] for i in members(mask)]

    def check_width(self, mask: int) -> int:
        if mask < 0 or mask >> self.n:
            raise DimensionError(f"subset {mask:#x} does not fit a carrier of size {self.n}")
        return mask

    @cached_property
    def array(self) -> np.ndarray:
        n = self.n
        arr = np.zeros((n, n, n), dtype=bool)
        for a, row in enumerate(self._cube):
            for b, cell in enumerate(row):
                for k in members(cell):
                    arr[a, b, k] = True
        arr.flags.writeable = False
        return arr

    @cached_property
    def _scan(self):
        return _kernel.scan(self.array)

    def relabel(self, names) -> "MultiOp":
        return MultiOp(self._cube, names)

    def permute(self, order: Sequence[int]) -> "MultiOp":
        """Reorder the carrier: new element i is old element ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise InputError("order must be a permutation of the carrier")
        pos = {old: new for new, old in enumerate(order)}

        def move(mask):
            return bits(pos[k] for k in members(mask))

        cube = [[move(self._cube[a][b]) for b in order] for a in order]
        return MultiOp(cube, [self._names[i] for i in order])

    def restrict(self, T: int) -> "MultiOp":
        """The restriction to a subset closed under the operation."""
        self.check_width(T)
        idx = members(T)
        if not idx:
            raise InputError("cannot restrict to the empty set")
        for a in idx:
            for b in idx:
                if self._cube[a][b] & ~T:
                    raise InputError(f"subset is not closed: {self._names[a]}*{self._names[b]} leaves it")
        pos = {old: new for new, old in enumerate(idx)}
        cube = [[bits(pos[k] for k in members(self._cube[a][b])) for b in idx] for a in idx]
        return MultiOp(cube, [self._names[i] for i in idx])

    def is_closed(self, T: int) -> bool:
        idx = members(T)
        return all(not (self._cube[a][b] & ~T) for a in idx for b in idx)

    def format_cell(self, mask: int) -> str:
        labels = self.labels(mask)
        if len(labels) == 1:
            return labels[0]
        return "{" + ",".join(labels) + "}"

    def __eq__(self, other):
        if not isinstance(other, MultiOp):
            return NotImplemented
        return self._names == other._names and self._cube == other._cube

    def __hash__(self):
        return hash((self._names, self._cube))

    def __repr__(self):
        return f"MultiOp(n={self.n}, names={list(self._names)!r})"

    def __str__(self):
        head = ["*"] + list(self._names)
        rows = [[self._names[a]] + [self.format_cell(c) for c in row] for a, row in enumerate(self._cube)]
        widths = [max(len(r[j]) for r in [head] + rows) for j in range(len(head))]
        lines = [" | ".join(x.ljust(w) for x, w in zip(r, widths)) for r in [head] + rows]
        lines.insert(1, "-+-".join("-" * w for w in widths))
        return "\n".join(lines)


def subset_product(m: MultiOp, A: int, B: int) -> int:
    """The extension of the operation to subsets: union of a*b over a in A, b in B."""
    m.check_width(A)
    m.check_width(B)
    cube = m.cube
    out = 0
    bs = members(B)
    for a in members(A):
        row = cube[a]
        for b in bs:
            out |= row[b]
    return out


def is_associative(m: MultiOp) -> Verdict:
    """Check the union-associativity law for every triple.

    On failure the witness is the lexicographically first triple ``(a, b, c)``
    and ``detail`` holds ``{"left": a*(b*c), "right": (a*b)*c}`` as subsets.
    """
    witness = m._scan.witness
    if witness is None:
        return Verdict(True)
    a, b, c = witness
    left = subset_product(m, 1 << a, m(b, c))
    right = subset_product(m, m(a, b), 1 << c)
    return Verdict(False, witness, {"left": left, "right": right})


def require_associative(m: MultiOp) -> None:
    v = is_associative(m)
    if not v:
        a, b, c = v.witness
        names = m.names
        raise AxiomError(f"not associative at ({names[a]}, {names[b]}, {names[c]})", v.witness)


def find_identity(m: MultiOp) -> Optional[int]:
    cube = m.cube
    for e in range(m.n):
        if all(cube[e][a] == 1 << a and cube[a][e] == 1 << a for a in range(m.n)):
            return e
    return None


def _fresh(names, candidates) -> str:
    taken = set(names)
    for c in candidates:
        if c not in taken:
            return c
    base = candidates[0]
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def adjoin_identity(m: MultiOp) -> MultiOp:
    """S^1: ``m`` itself when it has an identity, else ``m`` with a new identity appended."""
    if find_identity(m) is not None:
        return m
    n = m.n
    cube = [list(row) + [1 << a] for a, row in enumerate(m.cube)]
    cube.append([1 << b for b in range(n)] + [1 << n])
    return MultiOp(cube, list(m.names) + [_fresh(m.names, ["1", "e", "id"])])


def find_zero(m: MultiOp) -> Optional[int]:
    cube = m.cube
    for z in range(m.n):
        zb = 1 << z
        if all(cube[a][z] == zb and cube[z][a] == zb for a in range(m.n)):
            return z
    return None


def is_quasi_semigroup(m: MultiOp) -> bool:
    return all(popcount(c) <= 1 for row in m.cube for c in row)


def adjoin_zero(m: MultiOp, mode: str = "bullet") -> MultiOp:
    """Append a new zero element.

    ``bullet``: a.b = (a*b) + {0} on the old carrier and {0} otherwise.
    ``odot``: a.b = a*b when non-empty, else {0}; only for quasi-semigroups
    without zero, where it yields a semigroup with zero.
    """
    n = m.n
    z = 1 << n
    if mode == "bullet":
        cube = [[c | z for c in row] + [z] for row in m.cube]
    elif mode == "odot":
        if not is_quasi_semigroup(m):
            raise ModeError("odot zero adjunction needs a quasi-semigroup")
        if find_zero(m) is not None:
            raise ModeError("odot zero adjunction needs a quasi-semigroup without zero")
        cube = [[c if c else z for c in row] + [z] for row in m.cube]
    else:
        raise ModeError(f"unknown zero adjunction mode {mode!r}")
    cube.append([z] * (n + 1))
    return MultiOp(cube, list(m.names) + [_fresh(m.names, ["0", "z", "zero"])])


def strip_zero(m: MultiOp) -> MultiOp:
    """Remove the zero element and delete it from every cell."""
    z = find_zero(m)
    if z is None:
        raise NotFoundError("multioperation has no zero element")
    if m.n == 1:
        raise NotFoundError("cannot remove the zero of a one-element carrier")
    keep = [i for i in range(m.n) if i != z]
    pos = {old: new for new, old in enumerate(keep)}

    def drop(mask):
        return bits(pos[k] for k in members(mask) if k != z)

    cube = [[drop(m(a, b)) for b in keep] for a in keep]
    return MultiOp(cube, [m.names[i] for i in keep])


def idempotent_report(m: MultiOp):
    """Return ``(idempotents, quasi_idempotents)`` as subsets."""
    idem = bits(e for e in range(m.n) if m(e, e) == 1 << e)
    quasi = bits(e for e in range(m.n) if m(e, e) >> e & 1)
    return idem, quasi


def is_hypergroup(m: MultiOp) -> bool:
    """Reproduction axiom S*a = a*S = S for every a (on an associative table)."""
    require_associative(m)
    arr = m.array
    return bool(arr.any(axis=0).all() and arr.any(axis=1).all())


def is_multigroup(m: MultiOp) -> Verdict:
    """Check the multigroup axioms; the witness on success is the inverse map."""
    require_associative(m)
    one = find_identity(m)
    if one is None:
        return Verdict(False, None, "no identity")
    n = m.n
    inverse = []
    for a in range(n):
        right = [b for b in range(n) if m(a, b) >> one & 1]
        left = [c for c in range(n) if m(c, a) >> one & 1]
        if len(right) != 1 or len(left) != 1 or right != left:
            return Verdict(False, a, "relative inverse missing or not unique")
        inverse.append(right[0])
    for a in range(n):
        for b in range(n):
            cell = m(a, b)
            mirrored = m(inverse[b], inverse[a])
            for c in range(n):
                if (cell >> c & 1) != (mirrored >> inverse[c] & 1):
                    return Verdict(False, (a, b, c), "inverse reversal law fails")
    return Verdict(True, tuple(inverse))


def _check_permutation(n, sigma):
    sigma = [int(x) for x in sigma]
    if sorted(sigma) != list(range(n)):
        raise InputError("involution candidate must be a permutation of the carrier")
    return sigma


def is_involution(m: MultiOp, sigma: Sequence[int]) -> bool:
    """True iff sigma is involutive and sigma(a*b) = sigma(b)*sigma(a) for all a, b."""
    sigma = _check_permutation(m.n, sigma)
    if any(sigma[sigma[a]] != a for a in range(m.n)):
        return False
    for a in range(m.n):
        for b in range(m.n):
            image = bits(sigma[s] for s in members(m(a, b)))
            if image != m(sigma[b], sigma[a]):
                return False
    return True


def classify(m: MultiOp) -> str:
    """Finest of ``semigroup``, ``quasi_semigroup``, ``proper_multisemigroup``."""
    require_associative(m)
    sizes = {popcount(c) for row in m.cube for c in row}
    if sizes == {1}:
        return SEMIGROUP
    if sizes <= {0, 1}:
        return QUASI_SEMIGROUP
    return PROPER


def generated_submultisemigroup(m: MultiOp, X: int) -> int:
    """Least subset containing X and closed under the operation."""
    m.check_width(X)
    if not X:
        raise InputError("generating set must be non-empty")
    T = X
    while True:
        grown = T | subset_product(m, T, T)
        if grown == T:
            return T
        T = grown


def power(m: MultiOp, X: int, k: int) -> int:
    """X^k = X^(k-1) * X, for k >= 1."""
    m.check_width(X)
    if k < 1:
        raise InputError("powers are defined for k >= 1 only")
    out = X
    for _ in range(k - 1):
        out = subset_product(m, out, X)
    return out
