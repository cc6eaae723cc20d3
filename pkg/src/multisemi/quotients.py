"""Congruences, quotients, Rees quotients and homomorphism checks."""

from .core import MultiOp, Verdict, bits, is_associative, members, require_associative, subset_product
from .errors import InputError, InternalError, NotFoundError, PreconditionError
from . import green


class Partition:
    """A partition of range(n) stored as class masks ordered by least element."""

    def __init__(self, n: int, classes):
        masks = [c if isinstance(c, int) else bits(c) for c in classes]
        if any(c <= 0 for c in masks):
            raise InputError("partition classes must be non-empty")
        total = 0
        for c in masks:
            if c & total:
                raise InputError("partition classes overlap")
            total |= c
        if total != (1 << n) - 1:
            raise InputError("partition classes do not cover the carrier")
        self.n = n
        self.classes = tuple(sorted(masks, key=lambda c: c & -c))
        cls = [0] * n
        for i, c in enumerate(self.classes):
            for x in members(c):
                cls[x] = i
        self.class_of = tuple(cls)

    @classmethod
    def from_map(cls, values):
        """Kernel of a map given as a sequence of hashable values."""
        groups = {}
        for x, v in enumerate(values):
            groups[v] = groups.get(v, 0) | 1 << x
        return cls(len(values), groups.values())

    @classmethod
    def discrete(cls, n):
        return cls(n, [1 << x for x in range(n)])

    @classmethod
    def single(cls, n):
        return cls(n, [(1 << n) - 1])

    def saturate(self, mask: int) -> int:
        out = 0
        for x in members(mask):
            out |= self.classes[self.class_of[x]]
        return out

    def class_set(self, mask: int) -> int:
        """Indices of the classes met by a subset, as a mask over classes."""
        return bits(self.class_of[x] for x in members(mask))

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.classes == other.classes

    def __hash__(self):
        return hash((self.n, self.classes))

    def __repr__(self):
        return f"Partition(n={self.n}, classes={[members(c) for c in self.classes]})"


def _check_partition(m, p):
    if not isinstance(p, Partition):
        p = Partition(m.n, p)
    if p.n != m.n:
        raise InputError("partition size does not match the carrier")
    return p


def is_congruence(m: MultiOp, p) -> Verdict:
    """Literal check of the left and right matching conditions.

    For a ~ b and every c, each s in c*a needs some s' ~ s in c*b and each
    t in c*b some t' ~ t in c*a (left), and likewise with a*c, b*c (right).
    The witness is (side, a, b, c, s) for the first unmatched element s.
    """
    require_associative(m)
    p = _check_partition(m, p)
    cls = p.class_of
    n = m.n
    for a in range(n):
        for b in range(n):
            if a == b or cls[a] != cls[b]:
                continue
            for c in range(n):
                for side, x, y in (("left", m(c, a), m(c, b)), ("right", m(a, c), m(b, c))):
                    for s in members(x):
                        if not any(cls[t] == cls[s] for t in members(y)):
                            return Verdict(False, (side, a, b, c, s))
    return Verdict(True)


def is_congruence_saturated(m: MultiOp, p) -> Verdict:
    """Class-wise form: j(a)*j(b) is contained in j(a*b) for all a, b."""
    require_associative(m)
    p = _check_partition(m, p)
    for a in range(m.n):
        ja = p.classes[p.class_of[a]]
        for b in range(m.n):
            jb = p.classes[p.class_of[b]]
            extra = subset_product(m, ja, jb) & ~p.saturate(m(a, b))
            if extra:
                return Verdict(False, (a, b), extra)
    return Verdict(True)


def class_name(m: MultiOp, mask: int) -> str:
    return m.format_cell(mask)


def quotient(m: MultiOp, p) -> MultiOp:
    """Classes as elements; A o B = classes met by A*B."""
    p = _check_partition(m, p)
    v = is_congruence(m, p)
    if not v:
        raise PreconditionError(f"partition is not a congruence: {v.witness}", v.witness)
    cube = [[p.class_set(subset_product(m, A, B)) for B in p.classes] for A in p.classes]
    q = MultiOp(cube, [class_name(m, c) for c in p.classes])
    if not is_strong_hom(m, q, p.class_of):
        raise InternalError("canonical map to the quotient is not a strong homomorphism")
    return q


def canonical_map(p: Partition) -> tuple:
    return p.class_of


def rees_quotient(m: MultiOp, I: int) -> MultiOp:
    """Carrier S minus I with a.b = (a*b) minus I, for a proper two-sided ideal I."""
    require_associative(m)
    m.check_width(I)
    if I == m.full:
        raise InputError("the ideal must be proper")
    if not green.is_ideal(m, I, green.TWOSIDED):
        raise InputError("subset is not a two-sided ideal")
    keep = [x for x in range(m.n) if not I >> x & 1]
    pos = {old: new for new, old in enumerate(keep)}
    cube = [[bits(pos[k] for k in members(m(a, b) & ~I)) for b in keep] for a in keep]
    out = MultiOp(cube, [m.names[x] for x in keep])
    if not is_associative(out):
        raise InternalError("Rees quotient is not associative")
    return out


def _targets(m2, phi):
    return [m2.index(x) for x in phi]


def is_strong_hom(m: MultiOp, m2: MultiOp, phi) -> Verdict:
    """{phi(s) : s in a*b} = phi(a) o phi(b) for all a, b; witness (a, b)."""
    phi = _targets(m2, phi)
    if len(phi) != m.n:
        raise InputError("map must be defined on every element")
    for a in range(m.n):
        for b in range(m.n):
            image = bits(phi[s] for s in members(m(a, b)))
            if image != m2(phi[a], phi[b]):
                return Verdict(False, (a, b), {"image": image, "product": m2(phi[a], phi[b])})
    return Verdict(True)


def kernel(phi) -> Partition:
    return Partition.from_map(list(phi))


def is_weak_hom(m: MultiOp, m2: MultiOp, phi) -> Verdict:
    """Union of phi(s) over s in a*b equals phi(a) o phi(b); phi maps elements to subsets."""
    phi = [m2.check_width(int(x)) for x in phi]
    if len(phi) != m.n:
        raise InputError("map must be defined on every element")
    for a in range(m.n):
        for b in range(m.n):
            image = 0
            for s in members(m(a, b)):
                image |= phi[s]
            if image != subset_product(m2, phi[a], phi[b]):
                return Verdict(False, (a, b))
    return Verdict(True)


def congruence_closure(m: MultiOp, pairs=()) -> Partition:
    """A congruence containing the given pairs.

    Starts from the pairs and, while some a ~ b, c break the matching
    condition, merges every class met by the two products involved.  Least
    congruences need not exist for multivalued products, so this is just
    one convenient coarsening.  Raises NotFoundError when a merged pair has
    one empty and one non-empty product, which no merging can repair.
    """
    require_associative(m)
    n = m.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def merge(xs):
        xs = list(xs)
        for x in xs[1:]:
            parent[find(x)] = find(xs[0])

    for a, b in pairs:
        merge([m.index(a), m.index(b)])
    changed = True
    while changed:
        changed = False
        p = Partition.from_map([find(x) for x in range(n)])
        for a in range(n):
            for b in range(a + 1, n):
                if p.class_of[a] != p.class_of[b]:
                    continue
                for c in range(n):
                    for x, y in ((m(c, a), m(c, b)), (m(a, c), m(b, c))):
                        if p.class_set(x) != p.class_set(y):
                            if not x or not y:
                                raise NotFoundError(f"no congruence found: products of {m.names[a]} and "
                                                    f"{m.names[b]} with {m.names[c]} differ in emptiness")
                            merge(members(x | y))
                            changed = True
    return Partition.from_map([find(x) for x in range(n)])


def support_quotient(m: MultiOp) -> MultiOp:
    """Q(S) modulo H, checked against (I,J).(I',J') = (I',J) or empty."""
    Q = green.quarks(m)
    if not Q:
        raise PreconditionError("the support Q(S) is empty")
    g = green.green_data(m)
    sub = m.restrict(Q)
    idx = members(Q)
    pos = {old: new for new, old in enumerate(idx)}
    h_classes = [h for h in g.H if h & Q]
    p = Partition(sub.n, [bits(pos[x] for x in members(h)) for h in h_classes])
    q = quotient(sub, p)
    # closed formula over pairs (I, J) of minimal left / right ideals
    reps = [members(h)[0] for h in p.classes]
    ij = [(g.left_ideals[idx[r]], g.right_ideals[idx[r]]) for r in reps]
    where = {pair: i for i, pair in enumerate(ij)}
    for x, (I, J) in enumerate(ij):
        for y, (I2, J2) in enumerate(ij):
            nonempty = subset_product(m, I & J, I2 & J2) != 0
            expected = 0
            if nonempty:
                if (I2, J) not in where:
                    raise InternalError(f"no H-class for the pair at {(x, y)}")
                expected = 1 << where[(I2, J)]
            if q(x, y) != expected:
                raise InternalError(f"support quotient disagrees with the closed formula at {(x, y)}")
    return q
