"""The subquasigroup M(Q), its congruence, and simplicity classification."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InconsistencyError, NotFGError
from .identities import IdentityName, check_identity, identity_witness, is_FG
from .isotopes import is_group
from .linear import ArithmeticForm, canonical_strong_form, center
from .qcore import CayleyTable, Partition, alpha_beta, congruence_witness, is_simple, quotient, subtable, validate_table


def mq(t: CayleyTable) -> frozenset[int]:
    """``{a : xa.yx == xy.ax for all x, y}`` by direct scan."""
    c = t.cells
    n = t.n
    a = np.arange(n).reshape(n, 1, 1)
    x = np.arange(n).reshape(1, n, 1)
    y = np.arange(n).reshape(1, 1, n)
    lhs = c[c[x, a], c[y, x]]
    rhs = c[c[x, y], c[a, x]]
    return frozenset(int(v) for v in np.flatnonzero((lhs == rhs).reshape(n, -1).all(axis=1)))


def mq_three_variable(t: CayleyTable) -> frozenset[int]:
    """``{a : xa.yz == xy.az for all x, y, z}``."""
    c = t.cells
    n = t.n
    a = np.arange(n).reshape(n, 1, 1, 1)
    x = np.arange(n).reshape(1, n, 1, 1)
    y = np.arange(n).reshape(1, 1, n, 1)
    z = np.arange(n).reshape(1, 1, 1, n)
    lhs = c[c[x, a], c[y, z]]
    rhs = c[c[x, y], c[a, z]]
    return frozenset(int(v) for v in np.flatnonzero((lhs == rhs).reshape(n, -1).all(axis=1)))


def mq_via_form(form: ArithmeticForm) -> frozenset[int]:
    """``Z(group) - e``."""
    g = form.group
    return frozenset(int(g.sub(z, form.e)) for z in center(g))


def _require_fg(t: CayleyTable):
    if not is_FG(t):
        raise NotFGError("table does not satisfy identities (A) and (B)")


def center_coset_partition(form: ArithmeticForm) -> Partition:
    g = form.group
    Z = center(g)
    blocks: dict[int, list[int]] = {}
    for x in range(g.n):
        coset = sorted(int(g.add(x, z)) for z in Z)
        blocks.setdefault(coset[0], coset)
    return Partition.from_blocks(g.n, blocks.values())


def mq_congruence(t: CayleyTable) -> Partition:
    """Cosets of the centre of a strong form's group, certified as a congruence of ``t``."""
    _require_fg(t)
    p = center_coset_partition(canonical_strong_form(t))
    wit = congruence_witness(t, p)
    if wit is not None:
        raise InconsistencyError(f"centre cosets are not a congruence of the quasigroup: {wit}")
    return p


def is_medial_subquasigroup(t: CayleyTable, subset) -> bool:
    sub = subtable(t, subset)
    return sub is not None and validate_table(sub) and check_identity(sub, IdentityName.MEDIAL)


@dataclass(frozen=True)
class StructureReport:
    mq: frozenset[int]
    mq_is_medial_sub: bool
    quotient: CayleyTable
    quotient_is_group: bool
    alpha_beta_in_mq: bool

    @property
    def all_hold(self) -> bool:
        return self.mq_is_medial_sub and self.quotient_is_group and self.alpha_beta_in_mq


def structure_report(t: CayleyTable) -> StructureReport:
    _require_fg(t)
    m = mq(t)
    q = quotient(t, mq_congruence(t))
    alpha, beta = alpha_beta(t)
    return StructureReport(
        mq=m,
        mq_is_medial_sub=is_medial_subquasigroup(t, m),
        quotient=q,
        quotient_is_group=is_group(q),
        alpha_beta_in_mq=set(alpha) | set(beta) <= m,
    )


class Simplicity(str, Enum):
    NOT_SIMPLE = "not_simple"
    MEDIAL = "medial"
    GROUP = "group"
    VIOLATION = "violation_witness"


@dataclass(frozen=True)
class SimpleClassification:
    kind: Simplicity
    witness: tuple | None = None


def classify_simple(t: CayleyTable) -> SimpleClassification:
    """Medial takes priority over group when both hold.

    A ``VIOLATION`` result carries the first medial-law failure.
    """
    _require_fg(t)
    if not is_simple(t):
        return SimpleClassification(Simplicity.NOT_SIMPLE)
    if check_identity(t, IdentityName.MEDIAL):
        return SimpleClassification(Simplicity.MEDIAL)
    if is_group(t):
        return SimpleClassification(Simplicity.GROUP)
    return SimpleClassification(Simplicity.VIOLATION, identity_witness(t, IdentityName.MEDIAL))
