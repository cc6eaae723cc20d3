"""Generators of multisemigroups.

Each constructor re-verifies associativity of its output and raises
``InternalError`` if the check fails, since every construction here is
associative by a known argument.
"""

from itertools import combinations, product

from .core import MultiOp, Verdict, bits, is_associative, members, subset_product
from .errors import CompatibilityError, InputError, InternalError, PreconditionError, ResourceError
from .semigroups import Poset, SemigroupTable, StructureTensor, rectangular_band, words_up_to


def _verified(m: MultiOp, what: str) -> MultiOp:
    v = is_associative(m)
    if not v:
        raise InternalError(f"{what} produced a non-associative table at {v.witness}")
    return m


def trivial_multiop(n: int, X: int = 0, names=None) -> MultiOp:
    """Every product equals the fixed subset X."""
    if n < 1:
        raise InputError("n must be positive")
    if X < 0 or X >> n:
        raise InputError("X does not fit the carrier")
    return MultiOp([[X] * n for _ in range(n)], names)


def coset_multiop(g: SemigroupTable, H: int, level: str = "elements") -> MultiOp:
    """a*b = HaHb on G, or Ha*Hb = {Hc : Hc in HaHb} on the cosets H\\G."""
    if not g.is_group():
        raise InputError("coset construction needs a group")
    if not g.is_subgroup(H):
        raise InputError("H is not a subgroup")
    n = g.n

    def coset(a):
        return g.set_mul(H, 1 << a)

    def hahb(a, b):
        return g.set_mul(g.set_mul(coset(a), H), 1 << b)

    if level == "elements":
        return _verified(MultiOp([[hahb(a, b) for b in range(n)] for a in range(n)], g.names), "coset_multiop")
    if level != "cosets":
        raise InputError(f"unknown level {level!r}")
    cosets = []
    reps = []
    for a in range(n):
        c = coset(a)
        if c not in cosets:
            cosets.append(c)
            reps.append(a)
    cube = []
    for a in reps:
        row = []
        for b in reps:
            prod = hahb(a, b)
            row.append(bits(i for i, c in enumerate(cosets) if c & ~prod == 0))
        cube.append(row)
    names = ["H" + g.names[a] for a in reps]
    return _verified(MultiOp(cube, names), "coset_multiop")


def inflation(m: MultiOp, f, names=None) -> MultiOp:
    """x * y = preimage of f(x)*f(y) under a surjection f from a new carrier onto m."""
    f = [m.index(v) for v in f]
    if set(f) != set(range(m.n)):
        raise InputError("inflation map must be surjective")
    fibres = [bits(x for x, fx in enumerate(f) if fx == s) for s in range(m.n)]

    def pre(mask):
        out = 0
        for s in members(mask):
            out |= fibres[s]
        return out

    cube = [[pre(m(fx, fy)) for fy in f] for fx in f]
    return _verified(MultiOp(cube, names), "inflation")


IDEAL_KINDS = ("L", "R", "J", "L∩", "R∩", "J∩")


def ideal_multiop(s: SemigroupTable, kind: str) -> MultiOp:
    """The six ideal multioperations: S^1aS^1b, aS^1bS^1, S^1aS^1bS^1 and the
    intersections of principal ideals of a and b."""
    n = s.n
    aliases = {"L^": "L∩", "R^": "R∩", "J^": "J∩", "Lcap": "L∩", "Rcap": "R∩", "Jcap": "J∩"}
    kind = aliases.get(kind, kind)
    if kind not in IDEAL_KINDS:
        raise InputError(f"unknown ideal kind {kind!r}")
    if kind == "L":
        cell = lambda a, b: s.set_mul(s.S1_left(a), s.S1_left(b))  # noqa: E731
    elif kind == "R":
        cell = lambda a, b: s.set_mul(s.S1_right(a), s.S1_right(b))  # noqa: E731
    elif kind == "J":
        cell = lambda a, b: s.set_mul(s.S1_two(a), s.S1_two(b))  # noqa: E731
    elif kind == "L∩":
        cell = lambda a, b: s.S1_left(a) & s.S1_left(b)  # noqa: E731
    elif kind == "R∩":
        cell = lambda a, b: s.S1_right(a) & s.S1_right(b)  # noqa: E731
    else:
        cell = lambda a, b: s.S1_two(a) & s.S1_two(b)  # noqa: E731
    return _verified(MultiOp([[cell(a, b) for b in range(n)] for a in range(n)], s.names), "ideal_multiop")


def monogenic_multiop(s: SemigroupTable) -> MultiOp:
    """a*b = <a> ∩ <b>."""
    gen = [s.monogenic(a) for a in range(s.n)]
    return _verified(MultiOp([[x & y for y in gen] for x in gen], s.names), "monogenic_multiop")


def positive_basis_multiop(t: StructureTensor) -> MultiOp:
    """i*j = {k : c_ij^k > 0}."""
    cube = [[bits(cell) for cell in row] for row in t.rows]
    return _verified(MultiOp(cube, t.names), "positive_basis_multiop")


def clebsch_gordan(k: int, l: int) -> frozenset:
    """Tensor product rule for simple sl2-modules indexed by highest weight."""
    if k < 0 or l < 0:
        raise InputError("weights are non-negative")
    return frozenset(range(abs(k - l), k + l + 1, 2))


def _cg_set(A, B):
    out = set()
    for a in A:
        for b in B:
            out |= clebsch_gordan(a, b)
    return out


def cg_associativity_check(bound: int) -> Verdict:
    """Check the associativity law for the Clebsch-Gordan rule on all triples <= bound."""
    for a, b, c in product(range(bound + 1), repeat=3):
        left = _cg_set({a}, clebsch_gordan(b, c))
        right = _cg_set(clebsch_gordan(a, b), {c})
        if left != right:
            return Verdict(False, (a, b, c), {"left": left, "right": right})
    return Verdict(True)


def variant(m: MultiOp, X: int) -> MultiOp:
    """Sandwich variant a.b = a * X * b."""
    cube = [[subset_product(m, subset_product(m, 1 << a, X), 1 << b) for b in range(m.n)] for a in range(m.n)]
    return MultiOp(cube, m.names)


def mixed_law_defect(m1: MultiOp, m2: MultiOp):
    """First triple breaking (a.b)ob = a.(boc) or (aob).c = ao(b.c), or None."""
    for a, b, c in product(range(m1.n), repeat=3):
        if subset_product(m2, m1(a, b), 1 << c) != subset_product(m1, 1 << a, m2(b, c)):
            return (a, b, c)
        if subset_product(m1, m2(a, b), 1 << c) != subset_product(m2, 1 << a, m1(b, c)):
            return (a, b, c)
    return None


def general_double(m1: MultiOp, m2: MultiOp) -> MultiOp:
    """Cellwise union of two operations on one carrier satisfying the mixed law."""
    if m1.n != m2.n:
        raise InputError("both operations must share the carrier")
    bad = mixed_law_defect(m1, m2)
    if bad is not None:
        raise CompatibilityError(f"mixed associativity fails at {bad}", bad)
    cube = [[x | y for x, y in zip(r1, r2)] for r1, r2 in zip(m1.cube, m2.cube)]
    return _verified(MultiOp(cube, m1.names), "general_double")


def double_variant(m: MultiOp, X: int, Y: int) -> MultiOp:
    return general_double(variant(m, X), variant(m, Y))


MAX_SUBWORD_CARRIER = 10 ** 4


def scattered_subwords(word: str, max_len=None) -> set:
    out = set()
    top = len(word) if max_len is None else min(max_len, len(word))
    for r in range(top + 1):
        for idx in combinations(range(len(word)), r):
            out.add("".join(word[i] for i in idx))
    return out


def subword_multiop(alphabet_size: int, max_len: int) -> MultiOp:
    """Words of length <= max_len; u*v = scattered subwords of uv of length <= max_len.

    Truncation is sound: both bracketings of u*v*w equal the length-bounded
    scattered subwords of uvw, because a subword of a subword is a subword.
    """
    if alphabet_size < 1 or max_len < 1:
        raise InputError("alphabet_size and max_len must be positive")
    if alphabet_size > 26 or alphabet_size ** max_len > MAX_SUBWORD_CARRIER:
        raise ResourceError("subword carrier too large")
    words = words_up_to(alphabet_size, max_len)
    index = {w: i for i, w in enumerate(words)}
    cube = [[bits(index[x] for x in scattered_subwords(u + v, max_len)) for v in words] for u in words]
    return _verified(MultiOp(cube, [w or "ε" for w in words]), "subword_multiop")


def _disjoint_names(n1, n2):
    if set(n1) & set(n2):
        return [f"{x}_1" for x in n1], [f"{x}_2" for x in n2]
    return list(n1), list(n2)


def disconnected_union(m1: MultiOp, m2: MultiOp) -> MultiOp:
    """Block-diagonal union; products across the two blocks are empty."""
    p = m1.n
    cube = [list(row) + [0] * m2.n for row in m1.cube]
    cube += [[0] * p + [c << p for c in row] for row in m2.cube]
    a, b = _disjoint_names(m1.names, m2.names)
    return _verified(MultiOp(cube, a + b), "disconnected_union")


def reproductive(s: SemigroupTable, f) -> MultiOp:
    """a*b = f(a)f(b), valid when f(f(a)f(b)) = f(a)f(b) for all a, b."""
    f = [int(x) for x in f]
    if len(f) != s.n:
        raise InputError("f must assign a subset to every element")

    def lift(mask):
        out = 0
        for x in members(mask):
            out |= f[x]
        return out

    cube = []
    for a in range(s.n):
        row = []
        for b in range(s.n):
            prod = s.set_mul(f[a], f[b])
            if lift(prod) != prod:
                raise PreconditionError(f"reproductive condition fails for ({s.names[a]}, {s.names[b]})", (a, b))
            row.append(prod)
        cube.append(row)
    return _verified(MultiOp(cube, s.names), "reproductive")


def no_quasi_idempotent_hypergroup(n: int) -> MultiOp:
    """a*b = S for a != b and S minus {a} for a = b (n >= 3)."""
    if n < 3:
        raise InputError("needs at least three elements")
    full = (1 << n) - 1
    cube = [[full if a != b else full & ~(1 << a) for b in range(n)] for a in range(n)]
    return _verified(MultiOp(cube, [f"x{i + 1}" for i in range(n)]), "no_quasi_idempotent_hypergroup")


def _merge_posets(posets):
    names, blocks = [], []
    for p in posets:
        if len(p.minimal_elements()) != 1:
            raise InputError("every component needs a unique minimal element")
        blocks.append((len(names), p))
        names.extend(p.names)
    if len(set(names)) != len(names):
        names = [f"{x}_{i}" for i, (_, p) in enumerate(blocks) for x in p.names]
    down = []
    for off, p in blocks:
        for a in range(p.n):
            down.append([off + x for x in p.down(a)])
    return names, down


def poset_band(posets) -> MultiOp:
    """Carrier X x X with (a,b)*(c,d) = a_down x d_down.

    ``posets`` is a Poset or a list of Posets taken as a disjoint union; the
    product is the reproductive construction over the rectangular band X x X.
    """
    if isinstance(posets, Poset):
        posets = [posets]
    names, down = _merge_posets(posets)
    k = len(names)
    band = rectangular_band(k, k)
    f = [bits(x * k + y for x in down[a] for y in down[b]) for a in range(k) for b in range(k)]
    m = reproductive(band, f)
    return m.relabel([f"({names[a]},{names[b]})" for a in range(k) for b in range(k)])
