"""Exhaustive decision procedures for the fixed identity set.

Every check evaluates the identity on the full tuple grid with numpy
gathers; nothing is inferred algebraically. The same kernels accept a
stack of tables of shape ``(B, n, n)`` so that whole enumeration corpora
can be swept at once. Witnesses are the lexicographically least failing
tuple, with variables ordered as in :data:`VARIABLES`.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from .qcore import CayleyTable


class IdentityName(str, Enum):
    FL = "Fl"  # x.yz = xy.alpha(x)z
    FR = "Fr"  # zy.x = z beta(x).yx
    A = "A"  # xy.alpha(u)v = x alpha(u).yv
    B = "B"  # xy.beta(u)v = x beta(u).yv
    MEDIAL = "medial"  # xa.by = xb.ay
    FASFG = "FasFG"  # x ab(w).yz = xy.ab(w)z

    @classmethod
    def parse(cls, name: str) -> "IdentityName":
        for member in cls:
            if member.value.lower() == name.lower():
                return member
        raise ValueError(f"unknown identity {name!r}")


VARIABLES = {
    IdentityName.FL: ("x", "y", "z"),
    IdentityName.FR: ("x", "y", "z"),
    IdentityName.A: ("x", "y", "u", "v"),
    IdentityName.B: ("x", "y", "u", "v"),
    IdentityName.MEDIAL: ("x", "y", "a", "b"),
    IdentityName.FASFG: ("x", "y", "z", "w"),
}


def as_stack(t) -> np.ndarray:
    if isinstance(t, CayleyTable):
        return t.cells[None]
    arr = np.asarray(t, dtype=np.intp)
    return arr[None] if arr.ndim == 2 else arr


def _var(k: int, nvars: int, n: int) -> np.ndarray:
    """Index array for variable ``k`` broadcastable over a (B, n, ..., n) grid."""
    shape = [1] * (nvars + 1)
    shape[k + 1] = n
    return np.arange(n).reshape(shape)


def _mul(T: np.ndarray, left, right) -> np.ndarray:
    # T: (B, n, n); left/right broadcast against (B, n, ..., n)
    B, n, _ = T.shape
    left, right = np.broadcast_arrays(left, right)
    if left.shape[0] != B:
        left = np.broadcast_to(left, (B,) + left.shape[1:])
        right = np.broadcast_to(right, (B,) + right.shape[1:])
    flat = (left * n + right).reshape(B, -1)
    return np.take_along_axis(T.reshape(B, n * n), flat, axis=1).reshape(left.shape)


def _apply(maps: np.ndarray, idx) -> np.ndarray:
    # maps: (B, n); idx broadcastable with leading batch axis
    B = maps.shape[0]
    idx = np.broadcast_to(idx, (B,) + np.shape(idx)[1:])
    return np.take_along_axis(maps, idx.reshape(B, -1), axis=1).reshape(idx.shape)


def alpha_beta_stack(T: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = T.shape[-1]
    idx = np.arange(n)
    alpha = np.argmax(T == idx[:, None], axis=2)
    beta = np.argmax(T == idx[None, :], axis=1)
    return alpha, beta


def left_div_stack(T: np.ndarray) -> np.ndarray:
    return np.argsort(T, axis=2, kind="stable")


def right_div_stack(T: np.ndarray) -> np.ndarray:
    return np.argsort(T, axis=1, kind="stable").transpose(0, 2, 1)


def identity_holds(T: np.ndarray, which: IdentityName) -> np.ndarray:
    """Boolean grid, shape ``(B, n, ..., n)``, of where ``which`` holds."""
    which = IdentityName(which)
    n = T.shape[-1]
    alpha, beta = alpha_beta_stack(T)
    if which in (IdentityName.FL, IdentityName.FR):
        x, y, z = (_var(k, 3, n) for k in range(3))
        if which is IdentityName.FL:
            lhs = _mul(T, x, _mul(T, y, z))
            rhs = _mul(T, _mul(T, x, y), _mul(T, _apply(alpha, x), z))
        else:
            lhs = _mul(T, _mul(T, z, y), x)
            rhs = _mul(T, _mul(T, z, _apply(beta, x)), _mul(T, y, x))
        return lhs == rhs
    v0, v1, v2, v3 = (_var(k, 4, n) for k in range(4))
    if which in (IdentityName.A, IdentityName.B):
        x, y, u, v = v0, v1, v2, v3
        m = alpha if which is IdentityName.A else beta
        mu = _apply(m, u)
        lhs = _mul(T, _mul(T, x, y), _mul(T, mu, v))
        rhs = _mul(T, _mul(T, x, mu), _mul(T, y, v))
    elif which is IdentityName.MEDIAL:
        x, y, a, b = v0, v1, v2, v3
        lhs = _mul(T, _mul(T, x, a), _mul(T, b, y))
        rhs = _mul(T, _mul(T, x, b), _mul(T, a, y))
    else:
        x, y, z, w = v0, v1, v2, v3
        ab = np.take_along_axis(alpha, beta, axis=1)
        abw = _apply(ab, w)
        lhs = _mul(T, _mul(T, x, abw), _mul(T, y, z))
        rhs = _mul(T, _mul(T, x, y), _mul(T, abw, z))
    return lhs == rhs


def _all(grid: np.ndarray) -> np.ndarray:
    return grid.reshape(grid.shape[0], -1).all(axis=1)


def _first_failure(grid: np.ndarray):
    bad = np.argwhere(~grid[0])
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def check_identity(t: CayleyTable, which) -> bool:
    return bool(_all(identity_holds(as_stack(t), which))[0])


def identity_witness(t: CayleyTable, which):
    """Lexicographically least failing tuple for ``which``, or None."""
    return _first_failure(identity_holds(as_stack(t), which))


def isotope_assoc_holds(T: np.ndarray, a: int, b: int) -> np.ndarray:
    """Grid of ``x * L_b^-1(R_a^-1(y) * z) == R_a^-1(x * L_b^-1(y)) * z`` over (x, y, z)."""
    n = T.shape[-1]
    ld = left_div_stack(T)[:, b, :]
    rd = right_div_stack(T)[:, a, :]
    x, y, z = (_var(k, 3, n) for k in range(3))
    lhs = _mul(T, x, _apply(ld, _mul(T, _apply(rd, y), z)))
    rhs = _mul(T, _apply(rd, _mul(T, x, _apply(ld, y))), z)
    return lhs == rhs


def check_isotope_assoc(t: CayleyTable, a: int = 0, b: int = 0) -> bool:
    return bool(_all(isotope_assoc_holds(as_stack(t), a, b))[0])


def isotope_assoc_witness(t: CayleyTable, a: int = 0, b: int = 0):
    return _first_failure(isotope_assoc_holds(as_stack(t), a, b))


def check_assoc2(t: CayleyTable, a: int = 0, b: int = 0) -> bool:
    """Operator form ``L_x L_b^-1 R_z R_a^-1 == R_z R_a^-1 L_x L_b^-1`` for all x, z.

    Evaluated by composing translation permutations, independently of the
    pointwise kernel in :func:`isotope_assoc_holds`.
    """
    c = t.cells
    n = t.n
    lb_inv = np.argsort(c[b])
    ra_inv = np.argsort(c[:, a])
    for x in range(n):
        lx = c[x]
        for z in range(n):
            rz = c[:, z]
            if not np.array_equal(lx[lb_inv[rz[ra_inv]]], rz[ra_inv[lx[lb_inv]]]):
                return False
    return True


def is_F(t) -> bool:
    return check_identity(t, IdentityName.FL) and check_identity(t, IdentityName.FR)


def is_FG(t) -> bool:
    return check_identity(t, IdentityName.A) and check_identity(t, IdentityName.B)


def fg_witness(t):
    """``(identity, tuple)`` for the first failing identity among A, B; None if FG."""
    for which in (IdentityName.A, IdentityName.B):
        w = identity_witness(t, which)
        if w is not None:
            return which, w
    return None


# Batched predicates over (B, n, n) stacks; ``chunk`` bounds memory of the 4-variable grids.
_GRID_BUDGET = 1 << 22


def batch_identity(T: np.ndarray, which, chunk: int = 4096) -> np.ndarray:
    T = np.asarray(T, dtype=np.intp)
    out = np.empty(T.shape[0], dtype=bool)
    chunk = max(1, min(chunk, _GRID_BUDGET // T.shape[-1] ** 4))
    for s in range(0, T.shape[0], chunk):
        out[s:s + chunk] = _all(identity_holds(T[s:s + chunk], which))
    return out


def batch_isotope_assoc(T: np.ndarray, a: int = 0, b: int = 0, chunk: int = 8192) -> np.ndarray:
    T = np.asarray(T, dtype=np.intp)
    out = np.empty(T.shape[0], dtype=bool)
    chunk = max(1, min(chunk, _GRID_BUDGET // T.shape[-1] ** 3))
    for s in range(0, T.shape[0], chunk):
        out[s:s + chunk] = _all(isotope_assoc_holds(T[s:s + chunk], a, b))
    return out


def batch_is_F(T: np.ndarray) -> np.ndarray:
    return batch_identity(T, IdentityName.FL) & batch_identity(T, IdentityName.FR)


def batch_is_FG(T: np.ndarray) -> np.ndarray:
    """A then B, with B evaluated only where A already holds."""
    T = np.asarray(T, dtype=np.intp)
    ok = batch_identity(T, IdentityName.A)
    idx = np.flatnonzero(ok)
    if idx.size:
        ok[idx] = batch_identity(T[idx], IdentityName.B)
    return ok


# Translation equations used by the verification battery.

def check_fg_char0(t: CayleyTable, a: int, b: int) -> bool:
    """``x beta(a) . (L_b^-1 R_a^-1 y . z) == (x . R_a^-1 L_b^-1 y) . alpha(b) z`` for all x, y, z."""
    T = as_stack(t)
    n = t.n
    alpha, beta = alpha_beta_stack(T)
    ld = left_div_stack(T)[:, b, :]
    rd = right_div_stack(T)[:, a, :]
    x, y, z = (_var(k, 3, n) for k in range(3))
    xb = _mul(T, x, beta[:, a].reshape(1, 1, 1, 1))
    lhs = _mul(T, xb, _mul(T, _apply(ld, _apply(rd, y)), z))
    rhs = _mul(T, _mul(T, x, _apply(rd, _apply(ld, y))), _mul(T, alpha[:, b].reshape(1, 1, 1, 1), z))
    return bool((lhs == rhs).all())


def check_fg_char(t: CayleyTable, a: int, b: int) -> bool:
    """``x beta(a) . yz == xy . alpha(b) z`` for all x, y, z."""
    T = as_stack(t)
    n = t.n
    alpha, beta = alpha_beta_stack(T)
    x, y, z = (_var(k, 3, n) for k in range(3))
    lhs = _mul(T, _mul(T, x, beta[:, a].reshape(1, 1, 1, 1)), _mul(T, y, z))
    rhs = _mul(T, _mul(T, x, y), _mul(T, alpha[:, b].reshape(1, 1, 1, 1), z))
    return bool((lhs == rhs).all())


def check_rearrange(t: CayleyTable) -> bool:
    """``L_x L_y^-1 R_v^-1 R_u == R_v^-1 R_u L_x L_y^-1`` pointwise for all x, y, u, v."""
    T = as_stack(t)
    n = t.n
    ld = left_div_stack(T)[0]
    rd = right_div_stack(T)[0]
    c = T[0]
    w = np.arange(n)
    x = w.reshape(n, 1, 1, 1, 1)
    y = w.reshape(1, n, 1, 1, 1)
    u = w.reshape(1, 1, n, 1, 1)
    v = w.reshape(1, 1, 1, n, 1)
    w = w.reshape(1, 1, 1, 1, n)
    lhs = c[x, ld[y, rd[v, c[w, u]]]]
    rhs = rd[v, c[c[x, ld[y, w]], u]]
    return bool((lhs == rhs).all())
