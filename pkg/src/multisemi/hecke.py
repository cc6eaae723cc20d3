"""Small finite Coxeter groups and their Hecke algebras in the standard basis.

Hecke coefficients are exact Fractions at a fixed numeric parameter q > 1.
"""

import re
from fractions import Fraction

from .core import MultiOp, bits, is_associative
from .errors import InputError, InternalError
from .semigroups import StructureTensor

LETTERS = "stuvwxyz"


class CoxeterGroup:
    """Elements of a finite Coxeter group in a faithful permutation model.

    Elements are indexed in (length, lexicographically least reduced word)
    order; index 0 is the identity.
    """

    def __init__(self, kind, generators):
        self.kind = kind
        self.gens = tuple(tuple(g) for g in generators)
        self.rank = len(self.gens)
        self.letters = LETTERS[: self.rank]
        ident = tuple(range(len(self.gens[0])))
        perms, words = [ident], [""]
        seen = {ident: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:  # already in word order
                for i, g in enumerate(self.gens):
                    y = tuple(perms[x][k] for k in g)  # x * g
                    if y not in seen:
                        seen[y] = len(perms)
                        perms.append(y)
                        words.append(words[x] + self.letters[i])
                        nxt.append(seen[y])
            frontier = sorted(nxt, key=lambda j: words[j])
        order = sorted(range(len(perms)), key=lambda j: (len(words[j]), words[j]))
        self.perms = tuple(perms[j] for j in order)
        self.words = tuple(words[j] for j in order)
        self._index = {p: i for i, p in enumerate(self.perms)}
        self.lengths = tuple(len(w) for w in self.words)
        self.names = tuple(w or "e" for w in self.words)
        self.left_gen = tuple(
            tuple(self._index[tuple(g[k] for k in p)] for p in self.perms) for g in self.gens
        )
        self.right_gen = tuple(
            tuple(self._index[tuple(p[k] for k in g)] for p in self.perms) for g in self.gens
        )
        self.coxeter_matrix = tuple(tuple(self._order(i, j) for j in range(self.rank)) for i in range(self.rank))
        self._check()

    @property
    def order(self):
        return len(self.perms)

    def _order(self, i, j):
        x, k = 0, 0
        while True:
            x = self.right_gen[j][self.right_gen[i][x]]
            k += 1
            if x == 0:
                return k

    def _check(self):
        top = max(self.lengths)
        if self.lengths.count(0) != 1 or self.lengths.count(top) != 1:
            raise InternalError("Coxeter group must have one identity and one longest element")
        for w in range(self.order):
            for s in range(self.rank):
                if abs(self.lengths[self.right_gen[s][w]] - self.lengths[w]) != 1:
                    raise InternalError("length must change by one under a generator")

    def index(self, w):
        if isinstance(w, int):
            if 0 <= w < self.order:
                return w
            raise InputError(f"element index {w} out of range")
        word = "" if w == "e" else w
        x = 0
        for ch in word:
            if ch not in self.letters:
                raise InputError(f"unknown generator {ch!r}")
            x = self.right_gen[self.letters.index(ch)][x]
        return x

    def multiply(self, x, y):
        p, q = self.perms[x], self.perms[y]
        return self._index[tuple(p[k] for k in q)]

    def inverse(self, x):
        p = self.perms[x]
        inv = [0] * len(p)
        for i, v in enumerate(p):
            inv[v] = i
        return self._index[tuple(inv)]

    def __repr__(self):
        return f"CoxeterGroup({self.kind}, order={self.order})"


def _type_a(n):
    gens = []
    for i in range(n):
        p = list(range(n + 1))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(p)
    return gens


def _type_b(n):
    # Signed permutations of {1..n} acting on 2n points: point 2i is +i, 2i+1 is -i.
    size = 2 * n
    gens = []
    for i in range(n - 1):
        p = list(range(size))
        p[2 * i], p[2 * i + 2] = p[2 * i + 2], p[2 * i]
        p[2 * i + 1], p[2 * i + 3] = p[2 * i + 3], p[2 * i + 1]
        gens.append(p)
    p = list(range(size))
    p[2 * (n - 1)], p[2 * (n - 1) + 1] = p[2 * (n - 1) + 1], p[2 * (n - 1)]
    gens.append(p)
    return gens


def _type_i2(m):
    if m == 2:
        return [[1, 0, 2, 3], [0, 1, 3, 2]]
    return [[(-i) % m for i in range(m)], [(1 - i) % m for i in range(m)]]


def build_coxeter(kind: str) -> CoxeterGroup:
    """Kinds A<n> (n >= 1), B<n> (n >= 2) and I2(m) (m >= 2)."""
    text = kind.strip()
    if (hit := re.fullmatch(r"A(\d+)", text)) and 1 <= int(hit[1]) <= 5:
        gens = _type_a(int(hit[1]))
    elif (hit := re.fullmatch(r"B(\d+)", text)) and 2 <= int(hit[1]) <= 4:
        gens = _type_b(int(hit[1]))
    elif (hit := re.fullmatch(r"I2\((\d+)\)", text)) and 2 <= int(hit[1]) <= 64:
        gens = _type_i2(int(hit[1]))
    else:
        raise InputError(f"unsupported Coxeter type {kind!r}")
    return CoxeterGroup(text, gens)


def _as_q(q):
    q = Fraction(q)
    if q <= 1:
        raise InputError("the Hecke parameter must exceed 1")
    return q


class HeckeVec:
    """A standard-basis expansion sum c_w H_w with positive exact coefficients."""

    def __init__(self, coeffs, q):
        self.q = _as_q(q)
        clean = {}
        for w, c in coeffs.items():
            c = Fraction(c)
            if c < 0:
                raise InputError("Hecke coefficients must be non-negative")
            if c:
                clean[int(w)] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, w, q):
        return cls({w: 1}, q)

    def support(self) -> int:
        return bits(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, HeckeVec) and self.q == other.q and self.coeffs == other.coeffs

    def __repr__(self):
        terms = " + ".join(f"{c}*H[{w}]" for w, c in sorted(self.coeffs.items()))
        return f"HeckeVec({terms or '0'}, q={self.q})"


def hecke_gen_mul(W: CoxeterGroup, s, v: HeckeVec) -> HeckeVec:
    """H_s * v using H_s H_x = H_sx if l(sx) > l(x), else (q-1) H_x + q H_sx."""
    s = W.letters.index(s) if isinstance(s, str) else int(s)
    if not 0 <= s < W.rank:
        raise InputError(f"generator {s} out of range")
    q = v.q
    out = {}
    for x, c in v.coeffs.items():
        sx = W.left_gen[s][x]
        if W.lengths[sx] > W.lengths[x]:
            out[sx] = out.get(sx, 0) + c
        else:
            out[x] = out.get(x, 0) + (q - 1) * c
            out[sx] = out.get(sx, 0) + q * c
    return HeckeVec(out, q)


def hecke_mul(W: CoxeterGroup, w1, w2, q=2) -> HeckeVec:
    """H_w1 H_w2, applying the letters of the stored reduced word of w1 right to left."""
    x, y = W.index(w1), W.index(w2)
    v = HeckeVec.basis(y, q)
    for ch in reversed(W.words[x]):
        v = hecke_gen_mul(W, ch, v)
    return v


def hecke_mul_word(W: CoxeterGroup, word: str, w2, q=2) -> HeckeVec:
    """Same as hecke_mul but along an arbitrary word (used to test braid invariance)."""
    v = HeckeVec.basis(W.index(w2), q)
    for ch in reversed(word):
        v = hecke_gen_mul(W, ch, v)
    return v


def hecke_tensor(W: CoxeterGroup, q=2, check=False) -> StructureTensor:
    rows = [[hecke_mul(W, x, y, q).coeffs for y in range(W.order)] for x in range(W.order)]
    return StructureTensor.from_sparse(rows, W.names, check=check)


def boolean_hecke(W: CoxeterGroup, q=2) -> MultiOp:
    """x*y = support of H_x H_y."""
    cube = [[hecke_mul(W, x, y, q).support() for y in range(W.order)] for x in range(W.order)]
    m = MultiOp(cube, W.names)
    if not is_associative(m):
        raise InternalError("Boolean Hecke table is not associative")
    return m


def inverse_map(W: CoxeterGroup) -> tuple:
    return tuple(W.inverse(x) for x in range(W.order))
