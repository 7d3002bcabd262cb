"""Principal loop isotopes and loop/group detection."""
from __future__ import annotations

from enum import Enum

import numpy as np

from .qcore import CayleyTable, left_division, right_division


class IsotopeConvention(str, Enum):
    #: x + y = R_b^-1(x) . L_a^-1(y), neutral a.b
    INTRO = "Intro"
    #: x + y = R_a^-1(x) . L_b^-1(y), neutral b.a (h = R_a, k = L_b)
    SEC4 = "Sec4"


def principal_isotope(t: CayleyTable, a: int, b: int,
                      convention: IsotopeConvention = IsotopeConvention.SEC4) -> CayleyTable:
    convention = IsotopeConvention(convention)
    ld, rd = left_division(t), right_division(t)
    if convention is IsotopeConvention.INTRO:
        left, right = rd[b], ld[a]
    else:
        left, right = rd[a], ld[b]
    return CayleyTable(t.cells[np.ix_(left, right)])


def isotope_neutral(t: CayleyTable, a: int, b: int,
                    convention: IsotopeConvention = IsotopeConvention.SEC4) -> int:
    if IsotopeConvention(convention) is IsotopeConvention.INTRO:
        return t.mul(a, b)
    return t.mul(b, a)


def loop_neutral(t: CayleyTable):
    """The two-sided identity of ``t``, or None."""
    idx = np.arange(t.n)
    for e in range(t.n):
        if np.array_equal(t.cells[e], idx) and np.array_equal(t.cells[:, e], idx):
            return e
    return None


def associativity_witness(t: CayleyTable):
    c = t.cells
    lhs = c[c[:, :, None], np.arange(t.n)[None, None, :]]
    rhs = c[np.arange(t.n)[:, None, None], c[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def is_associative(t: CayleyTable) -> bool:
    return associativity_witness(t) is None


def is_group(t: CayleyTable) -> bool:
    return loop_neutral(t) is not None and is_associative(t)
