"""Representations by binary relations (Boolean matrices).

Rows are outputs and columns inputs: entry [y, x] of tau_a is set iff
y lies in a*x.
"""

import numpy as np

from .core import MultiOp, Verdict, members, require_associative
from .errors import InputError
from . import green

LEFT, RIGHT = "left", "right"


def regular_rep(m: MultiOp, a, side: str = LEFT) -> np.ndarray:
    """tau_a (left: y in a*x) or rho_a (right: y in x*a)."""
    a = m.index(a)
    if side == LEFT:
        return m.array[a].T.copy()
    if side == RIGHT:
        return m.array[:, a, :].T.copy()
    raise InputError(f"unknown side {side!r}")


def tau(m: MultiOp, A: int, side: str = LEFT) -> np.ndarray:
    """Boolean sum of the representing matrices over a subset."""
    m.check_width(A)
    idx = members(A)
    if not idx:
        return np.zeros((m.n, m.n), dtype=bool)
    arr = m.array[idx] if side == LEFT else m.array[:, idx, :].transpose(1, 0, 2)
    return arr.any(axis=0).T


def bool_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return (x.astype(np.uint16) @ y.astype(np.uint16)) > 0


def verify_rep(m: MultiOp, side: str = LEFT) -> Verdict:
    """Check tau_a o tau_b = sum of tau_s over s in a*b for every pair.

    The right representation reverses order: rho_a o rho_b is the sum over
    s in b*a.  The witness is the first failing pair (a, b).
    """
    require_associative(m)
    mats = [regular_rep(m, a, side) for a in range(m.n)]
    for a in range(m.n):
        for b in range(m.n):
            lhs = bool_product(mats[a], mats[b])
            cell = m(a, b) if side == LEFT else m(b, a)
            rhs = tau(m, cell, side)
            if not np.array_equal(lhs, rhs):
                return Verdict(False, (a, b))
    return Verdict(True)


def _check_l_class(m: MultiOp, L: int):
    if L not in green.green_data(m).L:
        raise InputError("subset is not an L-class")
    return members(L)


def l_class_rep(m: MultiOp, L: int, a) -> np.ndarray:
    """lambda_a on an L-class: entry [y, x] set iff y in a*x, for x, y in L."""
    idx = _check_l_class(m, L)
    a = m.index(a)
    return m.array[a][np.ix_(idx, idx)].T.copy()


def verify_l_class_rep(m: MultiOp, L: int) -> Verdict:
    idx = _check_l_class(m, L)
    mats = [m.array[a][np.ix_(idx, idx)].T for a in range(m.n)]
    k = len(idx)
    for a in range(m.n):
        for b in range(m.n):
            rhs = np.zeros((k, k), dtype=bool)
            for s in members(m(a, b)):
                rhs |= mats[s]
            if not np.array_equal(bool_product(mats[a], mats[b]), rhs):
                return Verdict(False, (a, b))
    return Verdict(True)


def format_matrix(mat: np.ndarray) -> str:
    return "\n".join("".join("1" if v else "0" for v in row) for row in mat)
