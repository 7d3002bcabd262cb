"""Central generalized modules over the ring of constant-free integer
polynomials in four commuting indeterminates, and the two constructions
``rho`` (pointed FG-quasigroup -> pointed module) and ``sigma`` (back).

A module stores only the actions of the generators ``x, y, u, v`` as the
maps ``phi, psi, mu, nu``; a polynomial acts by evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .errors import InconsistencyError, InvalidModuleError, NotFGError, StructureError
from .identities import is_FG
from .linear import ArithmeticForm, GroupTable, build_linear, center, form_at_neutral, is_endomorphism
from .qcore import CayleyTable, compose

GENERATORS = ("x", "y", "u", "v")


class RPoly:
    """Sparse integer polynomial with no constant term.

    ``terms`` maps exponent 4-tuples (powers of x, y, u, v) to non-zero
    coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int, int], int] | None = None):
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(k) for k in exps)
            if len(exps) != 4 or min(exps) < 0:
                raise StructureError(f"bad exponent vector {exps}")
            if coef == 0:
                continue
            if exps == (0, 0, 0, 0):
                raise StructureError("polynomials here have zero constant term")
            clean[exps] = clean.get(exps, 0) + int(coef)
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def gen(cls, name: str) -> "RPoly":
        exps = [0, 0, 0, 0]
        exps[GENERATORS.index(name)] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def zero(cls) -> "RPoly":
        return cls()

    def __add__(self, other: "RPoly") -> "RPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RPoly(out)

    def __neg__(self) -> "RPoly":
        return RPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "RPoly") -> "RPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RPoly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return RPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, RPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def monomials(self) -> list[tuple[tuple[int, int, int, int], int]]:
        """Terms in graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def __repr__(self):
        if not self.terms:
            return "RPoly(0)"
        parts = []
        for exps, coef in self.monomials():
            mono = "*".join(f"{g}^{e}" if e > 1 else g for g, e in zip(GENERATORS, exps) if e)
            parts.append(f"{coef}*{mono}")
        return "RPoly(" + " + ".join(parts) + ")"


X, Y, U, V = (RPoly.gen(g) for g in GENERATORS)


@dataclass(frozen=True)
class GenModule:
    group: GroupTable
    phi: tuple[int, ...]
    psi: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        for name in ("phi", "psi", "mu", "nu"):
            m = tuple(int(v) for v in getattr(self, name))
            if len(m) != self.group.n or any(not 0 <= v < self.group.n for v in m):
                raise StructureError(f"{name} must be a total map on the carrier")
            object.__setattr__(self, name, m)

    @property
    def maps(self) -> tuple[tuple[int, ...], ...]:
        return (self.phi, self.psi, self.mu, self.nu)


@dataclass(frozen=True)
class PointedModule:
    module: GenModule
    e: int

    def is_centrally_pointed(self) -> bool:
        return self.e in center(self.module.group)


@dataclass(frozen=True)
class PointedQuasigroup:
    table: CayleyTable
    point: int


def _scale(g: GroupTable, x: int, k: int) -> int:
    base = x if k >= 0 else int(g.neg(x))
    acc = g.neutral
    for _ in range(abs(k)):
        acc = int(g.add(acc, base))
    return acc


def poly_act(p: RPoly, m: GenModule, x: int) -> int:
    g = m.group
    acc = g.neutral
    for exps, coef in p.monomials():
        y = x
        # nu first, phi last: phi^a psi^b mu^c nu^d (x)
        for mp, power in reversed(list(zip(m.maps, exps))):
            for _ in range(power):
                y = mp[y]
        acc = int(g.add(acc, _scale(g, y, coef)))
    return acc


def annihilates(p: RPoly, m: GenModule) -> bool:
    return all(poly_act(p, m, x) == m.group.neutral for x in range(m.group.n))


@dataclass(frozen=True)
class ModuleCheck:
    ok: bool
    failure: str | None = None
    witness: tuple = field(default=())

    def __bool__(self):
        return self.ok


def check_module(m: GenModule) -> ModuleCheck:
    """Verify the generator-level axioms; the first failure is reported with a witness."""
    g = m.group
    Z = center(g)
    names = ("phi", "psi", "mu", "nu")
    for name, mp in zip(names, m.maps):
        if not is_endomorphism(mp, g):
            c = g.cells
            arr = np.asarray(mp)
            bad = np.argwhere(arr[c] != c[arr[:, None], arr[None, :]])[0]
            return ModuleCheck(False, f"{name} is not an endomorphism", tuple(int(v) for v in bad))
        for x in range(g.n):
            if mp[x] not in Z:
                return ModuleCheck(False, f"{name} image is not central", (x,))
    for (n1, m1), (n2, m2) in combinations(zip(names, m.maps), 2):
        if compose(m1, m2) != compose(m2, m1):
            x = next(i for i in range(g.n) if m1[m2[i]] != m2[m1[i]])
            return ModuleCheck(False, f"{n1} and {n2} do not commute", (x,))
    for label, p in (("x+u+xu", X + U + X * U), ("y+v+yv", Y + V + Y * V)):
        for x in range(g.n):
            if poly_act(p, m, x) != g.neutral:
                return ModuleCheck(False, f"{label} does not annihilate", (x,))
    return ModuleCheck(True)


def _defect(g: GroupTable, m: Sequence[int]) -> tuple[int, ...]:
    """``x -> -x + m(x)``."""
    x = np.arange(g.n)
    return tuple(int(v) for v in g.cells[g.inverse[x], np.asarray(m)])


def module_from_form(form: ArithmeticForm) -> PointedModule:
    g = form.group
    finv = np.argsort(form.f)
    ginv = np.argsort(form.g)
    mod = GenModule(g, _defect(g, form.f), _defect(g, form.g), _defect(g, finv), _defect(g, ginv))
    return PointedModule(mod, form.e)


def rho(pq: PointedQuasigroup) -> PointedModule:
    if not is_FG(pq.table):
        raise NotFGError("rho needs an FG-quasigroup")
    pm = module_from_form(form_at_neutral(pq.table, pq.point))
    chk = check_module(pm.module)
    if not chk:
        raise InconsistencyError(f"module built from the arithmetic form fails: {chk.failure} at {chk.witness}")
    return pm


def sigma(pm: PointedModule) -> PointedQuasigroup:
    m = pm.module
    chk = check_module(m)
    if not chk:
        raise InvalidModuleError(f"{chk.failure} at {chk.witness}")
    g = m.group
    x = np.arange(g.n)
    f, gg, k, l = (g.cells[x, np.asarray(mp)] for mp in (m.phi, m.psi, m.mu, m.nu))
    for name, fwd, back in (("f", f, k), ("g", gg, l)):
        if not (np.array_equal(fwd[back], x) and np.array_equal(back[fwd], x)):
            raise InvalidModuleError(f"{name} is not inverted by its partner map")
    return PointedQuasigroup(build_linear(g, f, gg, pm.e), g.neutral)


def is_module_homomorphism(m: Sequence[int], s: PointedModule, t: PointedModule) -> bool:
    """Group homomorphism commuting with all four generator maps and preserving ``e``."""
    mm = np.asarray(m, dtype=np.intp)
    gs, gt = s.module.group, t.module.group
    if not (mm[gs.cells] == gt.cells[mm[:, None], mm[None, :]]).all():
        return False
    for a, b in zip(s.module.maps, t.module.maps):
        if not np.array_equal(mm[list(a)], np.asarray(b)[mm]):
            return False
    return int(mm[s.e]) == t.e
