"""Auxiliary single-valued semigroups, posets and structure tensors used as inputs
to the constructions."""

from fractions import Fraction
from itertools import product

import numpy as np

from .core import MultiOp, bits, members
from .errors import InputError


class SemigroupTable:
    """A finite semigroup given by its Cayley table of element indices."""

    def __init__(self, table, names=None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("semigroup table must be square and non-empty")
        if any(not 0 <= x < n for r in rows for x in r):
            raise InputError("semigroup table entries out of range")
        for a, b, c in product(range(n), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise InputError(f"table is not associative at ({a}, {b}, {c})")
        self.table = rows
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise InputError("semigroup labels must be n distinct strings")

    @property
    def n(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def set_mul(self, A: int, B: int) -> int:
        out = 0
        bs = members(B)
        for a in members(A):
            for b in bs:
                out |= 1 << self.table[a][b]
        return out

    def identity(self):
        for e in range(self.n):
            if all(self.table[e][a] == a == self.table[a][e] for a in range(self.n)):
                return e
        return None

    def is_group(self):
        e = self.identity()
        if e is None:
            return False
        return all(any(self.table[a][b] == e for b in range(self.n)) for a in range(self.n))

    def is_subgroup(self, H: int) -> bool:
        e = self.identity()
        if not self.is_group() or not (H >> e & 1):
            return False
        return self.set_mul(H, H) & ~H == 0

    def S1_left(self, a):
        """S^1 a."""
        return 1 << a | bits(self.table[x][a] for x in range(self.n))

    def S1_right(self, a):
        return 1 << a | bits(self.table[a][x] for x in range(self.n))

    def S1_two(self, a):
        left = self.S1_left(a)
        return left | self.set_mul(left, (1 << self.n) - 1)

    def monogenic(self, a):
        """<a> = {a^i : i > 0}."""
        out, x = 0, a
        while not out >> x & 1:
            out |= 1 << x
            x = self.table[x][a]
        return out

    def as_multiop(self) -> MultiOp:
        return MultiOp([[1 << c for c in row] for row in self.table], self.names)

    def __repr__(self):
        return f"SemigroupTable(n={self.n})"


def from_permutations(generators, names=None) -> SemigroupTable:
    """Closure of a set of permutations (tuples) under composition (p*q = p after q)."""
    gens = [tuple(g) for g in generators]
    size = len(gens[0])
    ident = tuple(range(size))
    elems = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    table = [[seen[tuple(p[i] for i in q)] for q in elems] for p in elems]
    return SemigroupTable(table, names)


def cyclic_group(n: int) -> SemigroupTable:
    return SemigroupTable([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group_s3() -> SemigroupTable:
    """S3 on {e, s, t, st, ts, sts} with s = (0 1), t = (1 2)."""
    s, t = (1, 0, 2), (0, 2, 1)

    def comp(*ps):
        out = tuple(range(3))
        for p in reversed(ps):
            out = tuple(p[i] for i in out)
        return out

    words = {"e": (), "s": (s,), "t": (t,), "st": (s, t), "ts": (t, s), "sts": (s, t, s)}
    elems = {w: comp(*ps) for w, ps in words.items()}
    names = list(words)
    index = {elems[w]: i for i, w in enumerate(names)}
    table = [[index[comp(elems[a], elems[b])] for b in names] for a in names]
    return SemigroupTable(table, names)


def dihedral_group(m: int) -> SemigroupTable:
    """Dihedral group of order 2m as pairs (rotation, flip)."""
    elems = [(k, f) for f in (0, 1) for k in range(m)]
    index = {x: i for i, x in enumerate(elems)}

    def mul(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (-1) ** f1 * k2) % m, f1 ^ f2)

    names = [f"r{k}" if f == 0 else f"f{k}" for k, f in elems]
    return SemigroupTable([[index[mul(x, y)] for y in elems] for x in elems], names)


def rectangular_band(p: int, q: int) -> SemigroupTable:
    elems = [(i, j) for i in range(p) for j in range(q)]
    index = {x: k for k, x in enumerate(elems)}
    table = [[index[(x[0], y[1])] for y in elems] for x in elems]
    return SemigroupTable(table, [f"({i},{j})" for i, j in elems])


def left_zero_semigroup(n: int) -> SemigroupTable:
    return SemigroupTable([[a] * n for a in range(n)])


def null_semigroup(n: int) -> SemigroupTable:
    """All products equal element 0."""
    return SemigroupTable([[0] * n for _ in range(n)], ["0"] + [f"x{i}" for i in range(1, n)])


def brandt_semigroup(k: int) -> SemigroupTable:
    """Brandt semigroup B_k: matrix units e_ij plus a zero (last element)."""
    elems = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    zero = len(elems)
    index = {x: c for c, x in enumerate(elems)}

    def mul(x, y):
        if x == zero or y == zero or elems[x][1] != elems[y][0]:
            return zero
        return index[(elems[x][0], elems[y][1])]

    names = [f"e{i}{j}" for i, j in elems] + ["0"]
    return SemigroupTable([[mul(x, y) for y in range(zero + 1)] for x in range(zero + 1)], names)


def words_up_to(alphabet_size: int, max_len: int) -> list:
    letters = "abcdefghijklmnopqrstuvwxyz"[:alphabet_size]
    words = [""]
    level = [""]
    for _ in range(max_len):
        level = [w + x for w in level for x in letters]
        words.extend(level)
    return words


def truncated_word_semigroup(alphabet_size: int, max_len: int) -> SemigroupTable:
    """Words of length <= max_len under concatenation, overflow sent to a zero '#'."""
    words = words_up_to(alphabet_size, max_len)
    index = {w: i for i, w in enumerate(words)}
    zero = len(words)

    def mul(x, y):
        if x == zero or y == zero:
            return zero
        w = words[x] + words[y]
        return index.get(w, zero)

    names = [w or "ε" for w in words] + ["#"]
    return SemigroupTable([[mul(x, y) for y in range(zero + 1)] for x in range(zero + 1)], names)


class Poset:
    """A finite partial order given by ``leq[x][y]`` meaning x <= y."""

    def __init__(self, leq, names=None):
        mat = np.asarray(leq, dtype=bool)
        n = mat.shape[0]
        if mat.shape != (n, n) or n == 0:
            raise InputError("order matrix must be square and non-empty")
        if not mat.diagonal().all():
            raise InputError("order is not reflexive")
        if (mat & mat.T & ~np.eye(n, dtype=bool)).any():
            raise InputError("order is not antisymmetric")
        if ((mat.astype(np.uint8) @ mat.astype(np.uint8) > 0) & ~mat).any():
            raise InputError("order is not transitive")
        self.leq = mat
        self.names = tuple(names) if names is not None else tuple(str(i + 1) for i in range(n))

    @property
    def n(self):
        return self.leq.shape[0]

    @classmethod
    def chain(cls, k, names=None):
        return cls([[i <= j for j in range(k)] for i in range(k)], names)

    def down(self, a) -> list:
        return [x for x in range(self.n) if self.leq[x, a]]

    def minimal_elements(self) -> list:
        return [x for x in range(self.n) if self.leq[:, x].sum() == 1]


class StructureTensor:
    """Non-negative structure constants ``coeffs[i][j][k]`` of an associative algebra.

    Stored sparsely: ``rows[i][j]`` maps k to a positive Fraction.
    """

    def __init__(self, coeffs, names=None, check=True):
        if isinstance(coeffs, dict):
            raise InputError("pass a dense n x n x n nested sequence or use from_sparse")
        n = len(coeffs)
        sparse = []
        for i in range(n):
            row = []
            for j in range(n):
                cell = {}
                for k in range(n):
                    c = Fraction(coeffs[i][j][k])
                    if c < 0:
                        raise InputError(f"negative structure constant at ({i}, {j}, {k})")
                    if c:
                        cell[k] = c
                row.append(cell)
            sparse.append(row)
        self._init(sparse, names, check)

    @classmethod
    def from_sparse(cls, rows, names=None, check=True):
        obj = cls.__new__(cls)
        clean = []
        for i, row in enumerate(rows):
            out = []
            for j, cell in enumerate(row):
                d = {}
                for k, c in cell.items():
                    c = Fraction(c)
                    if c < 0:
                        raise InputError(f"negative structure constant at ({i}, {j}, {k})")
                    if c:
                        d[int(k)] = c
                out.append(d)
            clean.append(out)
        obj._init(clean, names, check)
        return obj

    def _init(self, rows, names, check):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputError("structure tensor must be n x n x n")
        self.rows = rows
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if check:
            bad = self.associativity_defect()
            if bad is not None:
                raise InputError(f"structure constants are not associative at {bad}")

    @property
    def n(self):
        return len(self.rows)

    def coefficient(self, i, j, k):
        return self.rows[i][j].get(k, Fraction(0))

    def _mul_vec(self, vec, j, left=True):
        out = {}
        for m, c in vec.items():
            cell = self.rows[m][j] if left else self.rows[j][m]
            for k, d in cell.items():
                out[k] = out.get(k, 0) + c * d
        return {k: v for k, v in out.items() if v}

    def associativity_defect(self):
        """First (i, j, k) with (a_i a_j) a_k != a_i (a_j a_k), or None."""
        n = self.n
        for i in range(n):
            for j in range(n):
                ij = self.rows[i][j]
                for k in range(n):
                    left = self._mul_vec(ij, k, left=True)
                    right = self._mul_vec(self.rows[j][k], i, left=False)
                    if left != right:
                        return (i, j, k)
        return None
