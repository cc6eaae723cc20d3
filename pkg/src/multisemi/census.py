"""Exhaustive and Monte-Carlo counts of associative multivalued operations.

Random tables come from PCG64 streams: sample ``i`` under ``seed`` uses
``default_rng(SeedSequence(seed, spawn_key=(i,)))`` and draws one double per
membership bit in row-major (a, b, k) order; the bit is set iff the double
is below ``density``.  Samples are independent, so any split of the index
range gives the same counts.
"""

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
from statsmodels.stats.proportion import proportion_confint

from . import _kernel
from .core import MultiOp
from .errors import InputError, ResourceError

# Work units are n**5 per sampled table (the cost of one associativity scan).
DEFAULT_WORK_BUDGET = 5 * 10 ** 12
EXHAUSTIVE_BATCH = 1 << 14


def random_array(n: int, seed: int, index: int = 0, density: float = 0.5) -> np.ndarray:
    if n < 1:
        raise InputError("n must be positive")
    if not 0.0 <= density <= 1.0:
        raise InputError("density must lie in [0, 1]")
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
    return rng.random((n, n, n)) < density


def random_multiop(n: int, seed: int, index: int = 0, density: float = 0.5) -> MultiOp:
    return MultiOp.from_array(random_array(n, seed, index, density))


def wilson_interval(count: int, total: int):
    if total == 0:
        return (0.0, 1.0)
    lo, hi = proportion_confint(count, total, alpha=0.05, method="wilson")
    return (float(lo), float(hi))


def union_bound(n: int) -> float:
    """n^4 (3/4)^n, the decay rate of the non-associative fraction."""
    return n ** 4 * 0.75 ** n


@dataclass
class CensusReport:
    n: int
    samples: int
    count_associative: int
    count_hypergroup: int
    count_Z: int
    seed: Optional[int] = None
    elapsed: float = 0.0
    exhaustive: bool = False
    density: float = 0.5
    extra: dict = field(default_factory=dict)

    def fraction(self, which: str = "associative") -> float:
        return getattr(self, f"count_{which}") / self.samples if self.samples else 0.0

    def interval(self, which: str = "associative"):
        return wilson_interval(getattr(self, f"count_{which}"), self.samples)

    def check_invariants(self):
        if not self.count_Z <= self.count_hypergroup <= self.count_associative <= self.samples:
            raise AssertionError("census counts violate Z <= hypergroup <= associative <= samples")

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("extra")
        for which in ("associative", "hypergroup", "Z"):
            out[f"fraction_{which}"] = self.fraction(which)
            lo, hi = self.interval(which)
            out[f"ci_{which}_lo"] = lo
            out[f"ci_{which}_hi"] = hi
        out["union_bound"] = union_bound(self.n)
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def classify_array(arr: np.ndarray):
    """(associative, hypergroup, Z) for one Boolean table."""
    res = _kernel.scan(arr)
    assoc = res.witness is None
    hyper = assoc and bool(arr.any(axis=0).all()) and bool(arr.any(axis=1).all())
    return assoc, hyper, assoc and res.full


def estimate_fractions(n: int, samples: int, seed: int, density: float = 0.5,
                       budget: int = DEFAULT_WORK_BUDGET, start: int = 0) -> CensusReport:
    """Monte-Carlo counts over samples start .. start+samples-1."""
    if samples < 1:
        raise InputError("samples must be positive")
    if samples * n ** 5 > budget:
        raise ResourceError(f"{samples} samples at n={n} exceed the work budget")
    t0 = time.perf_counter()
    a = h = z = 0
    for i in range(start, start + samples):
        assoc, hyper, zz = classify_array(random_array(n, seed, i, density))
        a += assoc
        h += hyper
        z += zz
    rep = CensusReport(n, samples, a, h, z, seed, time.perf_counter() - t0, False, density)
    rep.check_invariants()
    return rep


def _tables_from_codes(codes: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n ** 3, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(bool).reshape(-1, n, n, n)


def _batch_classify(arr: np.ndarray):
    m = arr.astype(np.uint8)
    left = np.einsum("zbct,zatk->zabck", m, m) > 0
    right = np.einsum("zabs,zsck->zabck", m, m) > 0
    B = arr.shape[0]
    assoc = (left == right).reshape(B, -1).all(axis=1)
    hyper = assoc & arr.any(axis=1).reshape(B, -1).all(axis=1) & arr.any(axis=2).reshape(B, -1).all(axis=1)
    full = assoc & left.reshape(B, -1).all(axis=1) & right.reshape(B, -1).all(axis=1)
    return assoc, hyper, full


def exhaustive_census(n: int, allow_large: bool = False) -> CensusReport:
    """Exact counts over all 2^(n^3) tables; bit (a*n + b)*n + k of the code is k in a*b."""
    if n < 1:
        raise InputError("n must be positive")
    if n > 3 or (n == 3 and not allow_large):
        raise ResourceError(f"exhaustive census at n={n} needs 2^{n ** 3} tables")
    t0 = time.perf_counter()
    total = 1 << n ** 3
    a = h = z = 0
    for lo in range(0, total, EXHAUSTIVE_BATCH):
        codes = np.arange(lo, min(total, lo + EXHAUSTIVE_BATCH), dtype=np.int64)
        assoc, hyper, full = _batch_classify(_tables_from_codes(codes, n))
        a += int(assoc.sum())
        h += int(hyper.sum())
        z += int(full.sum())
    rep = CensusReport(n, total, a, h, z, None, time.perf_counter() - t0, True)
    rep.check_invariants()
    return rep


def single_valued_census(n: int):
    """(total, associative) over all n^(n^2) single-valued operations, n <= 3."""
    if n < 1:
        raise InputError("n must be positive")
    if n > 3:
        raise ResourceError(f"single-valued census at n={n} needs {n}^{n * n} tables")
    k = n * n
    total = n ** k
    codes = np.arange(total, dtype=np.int64)
    digits = (codes[:, None] // (n ** np.arange(k, dtype=np.int64))) % n
    tables = digits.reshape(total, n, n)
    rows = np.arange(total)[:, None, None, None]
    a = np.arange(n)[None, :, None, None]
    b = np.arange(n)[None, None, :, None]
    c = np.arange(n)[None, None, None, :]
    ab = tables[rows, a, b]
    bc = tables[rows, b, c]
    left = tables[rows, ab, c]
    right = tables[rows, a, bc]
    ok = (left == right).reshape(total, -1).all(axis=1)
    return total, int(ok.sum())
