"""Independent reference computations and random generators for the tests.

Everything here works on plain Python sets and lists so it shares no code
with the package under test beyond the MultiOp container.
"""

import itertools

import numpy as np

from multisemi.core import MultiOp, is_associative
from multisemi.constructions import disconnected_union, inflation


def table_sets(m):
    return [[frozenset(k for k in range(m.n) if m(a, b) >> k & 1) for b in range(m.n)] for a in range(m.n)]


def set_product(t, A, B):
    out = set()
    for a in A:
        for b in B:
            out |= t[a][b]
    return frozenset(out)


def brute_associative(t):
    n = len(t)
    for a, b, c in itertools.product(range(n), repeat=3):
        if set_product(t, t[a][b], {c}) != set_product(t, {a}, t[b][c]):
            return False
    return True


def brute_degree(t):
    """Least k with S^k empty, or None if the powers never vanish."""
    n = len(t)
    S = frozenset(range(n))
    cur, seen, k = S, set(), 1
    while cur:
        if cur in seen:
            return None
        seen.add(cur)
        cur = set_product(t, cur, S)
        k += 1
    return k


def brute_subset_nilpotent(t, X):
    cur, seen = frozenset(X), set()
    while cur:
        if cur in seen:
            return False
        seen.add(cur)
        cur = set_product(t, cur, X)
    return True


def brute_ideals(t):
    """All non-empty two-sided ideals."""
    n = len(t)
    S = frozenset(range(n))
    out = []
    for code in range(1, 1 << n):
        X = frozenset(i for i in range(n) if code >> i & 1)
        if set_product(t, S, X) <= X and set_product(t, X, S) <= X:
            out.append(X)
    return out


def brute_principal(t, a, side):
    """S^1 * a (side 'L'), a * S^1 ('R') or S^1 * a * S^1 ('J')."""
    S = frozenset(range(len(t)))
    X = frozenset({a})
    if side in "LJ":
        X = X | set_product(t, S, X)
    if side in "RJ":
        X = X | set_product(t, X, S)
    return X


# Kazhdan-Lusztig basis of a dihedral group at v = 1: C_w is the sum of all
# y with l(y) < l(w) plus w itself.  Supports of C_x C_y in the C-basis give
# the positive-basis multiplication.

def kl_dihedral(W):
    n = W.order
    lengths = W.lengths

    def c_vec(w):
        v = np.zeros(n, dtype=np.int64)
        for y in range(n):
            if lengths[y] < lengths[w] or y == w:
                v[y] = 1
        return v

    basis = [c_vec(w) for w in range(n)]
    mult = np.array([[W.multiply(x, y) for y in range(n)] for x in range(n)])

    def product(u, v):
        out = np.zeros(n, dtype=np.int64)
        for x in np.flatnonzero(u):
            for y in np.flatnonzero(v):
                out[mult[x, y]] += u[x] * v[y]
        return out

    order = sorted(range(n), key=lambda w: -lengths[w])
    cube = []
    for x in range(n):
        row = []
        for y in range(n):
            rest = product(basis[x], basis[y])
            support = 0
            for w in order:
                c = rest[w]
                if c:
                    assert c > 0
                    support |= 1 << w
                    rest = rest - c * basis[w]
            assert not rest.any()
            row.append(support)
        cube.append(row)
    return MultiOp(cube, W.names)


# Random families

def random_table(rng, n, density, triangular=False):
    arr = rng.random((n, n, n)) < density
    if triangular:
        a, b, k = np.indices((n, n, n))
        arr &= k > np.maximum(a, b)
    return MultiOp.from_array(arr)


def _filtered(rng, n, tries=400):
    for _ in range(tries):
        kind = rng.integers(3)
        if kind == 0:
            m = random_table(rng, n, rng.choice([0.05, 0.1, 0.2, 0.3]), triangular=True)
        elif kind == 1:
            m = random_table(rng, n, rng.choice([0.05, 0.1]))
        else:
            m = random_table(rng, n, rng.choice([0.9, 0.95]))
        if is_associative(m):
            return m
    return None


def random_associative(rng, n):
    """An associative table on n elements from a mixture of random families.

    Direct filtering of random tables only yields small or dense examples,
    so larger ones are also built as inflations and disconnected unions of
    smaller random associative tables.
    """
    choice = int(rng.integers(4)) if n > 2 else 0
    if choice == 3:
        return graded_table(rng, n)
    if choice == 0:
        m = _filtered(rng, n)
        if m is not None:
            return m
        choice = 1
    k = int(rng.integers(1, n))
    if choice == 1:
        base = random_associative(rng, k)
        f = list(range(k)) + [int(x) for x in rng.integers(0, k, n - k)]
        rng.shuffle(f)
        return inflation(base, f)
    return disconnected_union(random_associative(rng, k), random_associative(rng, n - k))


def graded_table(rng, n):
    """Grades 1..K all occupied; a*b is the whole level g(a)+g(b), empty past K.

    Always associative and nilpotent of degree K+1.
    """
    K = int(rng.integers(1, n + 1))
    grade = list(range(1, K + 1)) + [int(x) for x in rng.integers(1, K + 1, n - K)]
    rng.shuffle(grade)
    level = {g: sum(1 << x for x in range(n) if grade[x] == g) for g in range(1, K + 1)}
    cube = [[level.get(grade[a] + grade[b], 0) for b in range(n)] for a in range(n)]
    return MultiOp(cube)


def grid_table(rng, n, density):
    """Elements at random grid positions (i, j); a*b is a random subset of the
    elements sitting at (row of a, column of b)."""
    p, q = rng.integers(1, 3, size=2)
    pos = [(int(rng.integers(p)), int(rng.integers(q))) for _ in range(n)]
    arr = np.zeros((n, n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            for k in range(n):
                if pos[k] == (pos[a][0], pos[b][1]):
                    arr[a, b, k] = rng.random() < density
    return MultiOp.from_array(arr)


def random_strongly_simple(rng, count, max_n=5, max_tries=200000):
    """Strongly simple tables found by filtering uniform and grid random tables."""
    from multisemi.green import STRONGLY_SIMPLE, classify_simplicity

    found, seen = [], set()
    for _ in range(max_tries):
        n = int(rng.integers(2, max_n + 1))
        if rng.random() < 0.3:
            m = MultiOp.from_array(rng.random((n, n, n)) < 0.5)
        else:
            m = grid_table(rng, n, rng.choice([0.5, 0.7, 0.9]))
        if m in seen or not is_associative(m):
            continue
        if classify_simplicity(m) == STRONGLY_SIMPLE:
            seen.add(m)
            found.append(m)
            if len(found) == count:
                break
    return found


def brute_hypergroup(t, H):
    """Reproduction axiom on the subset H, which must be closed."""
    H = frozenset(H)
    if not H or set_product(t, H, H) - H:
        return False
    return all(set_product(t, H, {a}) == H and set_product(t, {a}, H) == H for a in H)


def strongly_simple_violations(m):
    """Claims (a)-(f) for a strongly simple table; returns failure labels.

    (a) every L-class meets every R-class; (b) each H-class has empty square
    or is a hypergroup; (c) a*b is non-empty iff the intersection of the
    L-class of a and the R-class of b is a hypergroup; (d) every L- and
    R-class holds a hypergroup H-class; (e) I meet J equals J*I for minimal
    left I and minimal right J; (f) H is a congruence with a bisimple
    quasi-semigroup quotient whose H-classes are singletons.
    """
    from multisemi import green, quotients
    from multisemi.core import is_quasi_semigroup

    t = table_sets(m)
    n = m.n
    lefts = [brute_principal(t, a, "L") for a in range(n)]
    rights = [brute_principal(t, a, "R") for a in range(n)]
    Lc = {lefts[a]: frozenset(b for b in range(n) if lefts[b] == lefts[a]) for a in range(n)}
    Rc = {rights[a]: frozenset(b for b in range(n) if rights[b] == rights[a]) for a in range(n)}
    L_of = [Lc[lefts[a]] for a in range(n)]
    R_of = [Rc[rights[a]] for a in range(n)]
    H = {L_of[a] & R_of[a] for a in range(n)}
    bad = []
    if any(not (L & R) for L in Lc.values() for R in Rc.values()):
        bad.append("a")
    if any(set_product(t, h, h) and not brute_hypergroup(t, h) for h in H):
        bad.append("b")
    for a in range(n):
        for b in range(n):
            if bool(t[a][b]) != brute_hypergroup(t, L_of[a] & R_of[b]):
                bad.append("c")
                break
        else:
            continue
        break
    zero = n == 1 and not t[0][0]
    if not zero:
        for cls in list(Lc.values()) + list(Rc.values()):
            if not any(h <= cls and brute_hypergroup(t, h) for h in H):
                bad.append("d")
                break
    min_left = {I for I in lefts if all(lefts[x] == I for x in I)}
    min_right = {J for J in rights if all(rights[x] == J for x in J)}
    if any(I & J != set_product(t, J, I) for I in min_left for J in min_right):
        bad.append("e")
    p = quotients.Partition(n, [sum(1 << x for x in h) for h in H])
    if not quotients.is_congruence(m, p):
        bad.append("f")
    else:
        q = quotients.quotient(m, p)
        g = green.green_data(q)
        if not (is_quasi_semigroup(q) and len(g.D) == 1
                and all(h.bit_count() == 1 for h in g.H)):
            bad.append("f")
    return bad


def construction_matrix():
    """One output of every construction, used by several test files."""
    from multisemi import constructions as C
    from multisemi import fixture
    from multisemi.semigroups import Poset, brandt_semigroup, cyclic_group, symmetric_group_s3

    return [
        C.trivial_multiop(3), C.trivial_multiop(3, 5),
        C.coset_multiop(symmetric_group_s3(), 0b11, "elements"),
        C.coset_multiop(symmetric_group_s3(), 0b11, "cosets"),
        C.inflation(fixture("two_element"), [0, 1, 1]), C.ideal_multiop(brandt_semigroup(2), "J"),
        C.ideal_multiop(brandt_semigroup(2), "L∩"), C.monogenic_multiop(cyclic_group(6)),
        C.subword_multiop(2, 2), C.no_quasi_idempotent_hypergroup(4), C.poset_band(Poset.chain(3)),
        C.poset_band([Poset.chain(2), Poset.chain(1)]), C.double_variant(cyclic_group(3).as_multiop(), 1, 2),
        C.disconnected_union(fixture("kl_a2"), fixture("two_element")),
    ]
