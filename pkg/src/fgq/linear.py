"""Groups, automorphisms, quasigroups linear over groups, and arithmetic forms.

An arithmetic form ``(group, f, g, e)`` presents a quasigroup as
``x*y = f(x) + e + g(y)``. Group subtraction ``a - b`` is ``a + (-b)``
and ``-x + f(x)`` keeps the inverse on the left; order matters for
noncommutative groups.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import CapacityError, InvalidFormError, NotAGroupError, NotFGError, PreconditionError
from .identities import is_FG
from .isotopes import IsotopeConvention, associativity_witness, isotope_neutral, loop_neutral, principal_isotope
from .qcore import CayleyTable, alpha_beta, compose, invert, is_permutation, right_division, validate_table

AUTOMORPHISM_BOUND = 16


@dataclass(frozen=True)
class GroupTable:
    table: CayleyTable
    neutral: int

    @classmethod
    def from_table(cls, t) -> "GroupTable":
        t = t if isinstance(t, CayleyTable) else CayleyTable(t)
        if not validate_table(t):
            raise NotAGroupError("table is not a Latin square")
        e = loop_neutral(t)
        if e is None:
            raise NotAGroupError("table has no two-sided neutral element")
        wit = associativity_witness(t)
        if wit is not None:
            raise NotAGroupError(f"not associative at (x, y, z) = {wit}")
        return cls(t, e)

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def cells(self) -> np.ndarray:
        return self.table.cells

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.cells == self.neutral, axis=1)

    def add(self, x, y):
        return self.cells[x, y]

    def neg(self, x):
        return self.inverse[x]

    def sub(self, x, y):
        return self.cells[x, self.inverse[y]]

    def is_abelian(self) -> bool:
        return bool((self.cells == self.cells.T).all())


# -- constructors -------------------------------------------------------------

def cyclic_group(n: int) -> GroupTable:
    idx = np.arange(n)
    return GroupTable(CayleyTable((idx[:, None] + idx[None, :]) % n), 0)


def direct_product(*factors: GroupTable) -> GroupTable:
    """Product with lexicographic element numbering (first factor most significant)."""
    sizes = [g.n for g in factors]
    coords = np.array(np.unravel_index(np.arange(int(np.prod(sizes))), sizes)).T
    cells = np.zeros((len(coords), len(coords)), dtype=np.intp)
    for i, ci in enumerate(coords):
        prod = [g.cells[ci[k], coords[:, k]] for k, g in enumerate(factors)]
        cells[i] = np.ravel_multi_index(prod, sizes)
    neutral = int(np.ravel_multi_index([g.neutral for g in factors], sizes))
    return GroupTable(CayleyTable(cells), neutral)


def group_from_generators(identity: Hashable, generators: Sequence[Hashable],
                          op: Callable[[Hashable, Hashable], Hashable]) -> GroupTable:
    """Close ``generators`` under ``op``; elements are numbered in BFS order from the identity."""
    elems = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elems):
        for g in generators:
            h = op(elems[i], g)
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
        i += 1
    cells = [[index[op(a, b)] for b in elems] for a in elems]
    return GroupTable.from_table(cells)


def _perm_compose(p, q):
    return tuple(p[i] for i in q)


def dihedral_group(m: int) -> GroupTable:
    """Symmetries of the m-gon (order 2m) as permutations of the vertices."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return group_from_generators(tuple(range(m)), [rot, ref], _perm_compose)


def quaternion_group() -> GroupTable:
    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    return group_from_generators((1, 0, 0, 0), [(0, 1, 0, 0), (0, 0, 1, 0)], qmul)


# -- centre and automorphisms --------------------------------------------------

def _as_group(g) -> GroupTable:
    if isinstance(g, GroupTable):
        return g
    return GroupTable.from_table(g)


def center(g: GroupTable) -> frozenset[int]:
    g = _as_group(g)
    return frozenset(int(z) for z in np.flatnonzero((g.cells == g.cells.T).all(axis=1)))


def is_endomorphism(m: Sequence[int], g: GroupTable) -> bool:
    mm = np.asarray(m, dtype=np.intp)
    return len(mm) == g.n and bool((mm[g.cells] == g.cells[mm[:, None], mm[None, :]]).all())


def is_automorphism(m: Sequence[int], g: GroupTable) -> bool:
    return is_permutation(m, g.n) and is_endomorphism(m, g)


def _generating_set(g: GroupTable) -> list[int]:
    gens: list[int] = []
    sub = {g.neutral}
    for x in range(g.n):
        if x in sub:
            continue
        gens.append(x)
        frontier = list(sub)
        sub = set(sub)
        while frontier:
            w = frontier.pop()
            for h in gens:
                v = int(g.cells[w, h])
                if v not in sub:
                    sub.add(v)
                    frontier.append(v)
    return gens


def _element_orders(g: GroupTable) -> list[int]:
    orders = []
    for x in range(g.n):
        k, y = 1, x
        while y != g.neutral:
            y = int(g.cells[y, x])
            k += 1
        orders.append(k)
    return orders


def _extend(g: GroupTable, gens, images):
    """Extend gens -> images along right multiplication; None on conflict or collision."""
    c = g.cells
    m = {g.neutral: g.neutral}
    used = {g.neutral}
    queue = [g.neutral]
    while queue:
        w = queue.pop()
        for s, t in zip(gens, images):
            v = int(c[w, s])
            img = int(c[m[w], t])
            if v in m:
                if m[v] != img:
                    return None
            else:
                if img in used:
                    return None
                m[v] = img
                used.add(img)
                queue.append(v)
    return m


@lru_cache(maxsize=256)
def _automorphisms_cached(g: GroupTable) -> tuple[tuple[int, ...], ...]:
    gens = _generating_set(g)
    orders = _element_orders(g)
    candidates = [[y for y in range(g.n) if orders[y] == orders[s]] for s in gens]
    found = []

    def search(k, images):
        if _extend(g, gens[:k], images) is None:
            return
        if k == len(gens):
            m = _extend(g, gens, images)
            perm = tuple(m[x] for x in range(g.n))
            if is_automorphism(perm, g):
                found.append(perm)
            return
        for y in candidates[k]:
            search(k + 1, images + [y])

    search(0, [])
    return tuple(sorted(found))


def automorphisms(g: GroupTable, bound: int = AUTOMORPHISM_BOUND) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` in lexicographic order of their image tuples."""
    g = _as_group(g)
    if g.n > bound:
        raise CapacityError(f"automorphism enumeration is capped at order {bound}, got {g.n}")
    return list(_automorphisms_cached(g))


def inner_automorphism(g: GroupTable, e: int) -> tuple[int, ...]:
    """``x -> -e + x + e``."""
    x = np.arange(g.n)
    return tuple(int(v) for v in g.cells[g.cells[g.inverse[e], x], e])


# -- linear quasigroups ----------------------------------------------------------

class Convention(str, Enum):
    STD = "Std"    # f(x) + e + g(y)
    DOT1 = "Dot1"  # f(x) + g(y) + e
    DOT2 = "Dot2"  # e + f(x) + g(y)


def build_linear(g: GroupTable, f: Sequence[int], gg: Sequence[int], e: int,
                 convention: Convention = Convention.STD) -> CayleyTable:
    g = _as_group(g)
    for name, m in (("f", f), ("g", gg)):
        if not is_automorphism(m, g):
            raise InvalidFormError(f"{name} is not an automorphism of the group")
    c = g.cells
    fx = np.asarray(f)[:, None]
    gy = np.asarray(gg)[None, :]
    convention = Convention(convention)
    if convention is Convention.STD:
        cells = c[c[fx, e], gy]
    elif convention is Convention.DOT1:
        cells = c[c[fx, gy], e]
    else:
        cells = c[c[e, fx], gy]
    return CayleyTable(cells)


@dataclass(frozen=True)
class ArithmeticForm:
    group: GroupTable
    f: tuple[int, ...]
    g: tuple[int, ...]
    e: int

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))
        object.__setattr__(self, "g", tuple(int(v) for v in self.g))
        object.__setattr__(self, "e", int(self.e))

    @property
    def neutral(self) -> int:
        return self.group.neutral

    @property
    def n(self) -> int:
        return self.group.n

    def table(self) -> CayleyTable:
        return build_linear(self.group, self.f, self.g, self.e)

    def is_strong(self) -> bool:
        return self.e in center(self.group)


def _central_defect(g: GroupTable, m: Sequence[int], Z) -> int | None:
    """First x with ``-x + m(x)`` outside ``Z``."""
    for x in range(g.n):
        if int(g.cells[g.inverse[x], m[x]]) not in Z:
            return x
    return None


def form_violation(form: ArithmeticForm, table: CayleyTable | None = None) -> str | None:
    """Name the first violated form axiom (automorphisms, commuting, centrality, product), or None."""
    g = form.group
    for name, m in (("f", form.f), ("g", form.g)):
        if not is_automorphism(m, g):
            return f"{name} is not an automorphism"
    if compose(form.f, form.g) != compose(form.g, form.f):
        return "f and g do not commute"
    Z = center(g)
    for name, m in (("f", form.f), ("g", form.g)):
        x = _central_defect(g, m, Z)
        if x is not None:
            return f"-x + {name}(x) is not central at x={x}"
    if table is not None:
        built = form.table()
        if built != table:
            x, y = (int(v) for v in np.argwhere(built.cells != table.cells)[0])
            return f"recomposition differs at (x, y) = ({x}, {y})"
    return None


def check_F_linear(form: ArithmeticForm, side: str = "both",
                   convention: Convention = Convention.STD) -> bool:
    """Closed-form test for the F laws of the linear quasigroup built from ``form``.

    Std: fg = gf with -x+f(x) central (left), -x+g(x) central (right).
    Dot1 rewrites to the Std pair (f, phi.g), Dot2 to (phi^-1.f, g). One
    sided checks need the rewritten pair to commute; for ``both`` the
    plain fg = gf suffices once the shifts are central.
    """
    g = form.group
    f, gg = form.f, form.g
    convention = Convention(convention)
    ph = phi(form)
    if convention is Convention.DOT1:
        gg = compose(ph, gg)
    elif convention is Convention.DOT2:
        f = compose(invert(ph), f)
    Z = center(g)
    left = _central_defect(g, f, Z) is None
    right = _central_defect(g, gg, Z) is None
    if side == "both":
        return compose(form.f, form.g) == compose(form.g, form.f) and left and right
    commute = compose(f, gg) == compose(gg, f)
    return commute and {"left": left, "right": right}[side]


def phi(form: ArithmeticForm) -> tuple[int, ...]:
    """Inner automorphism ``x -> -e + x + e``."""
    return inner_automorphism(form.group, form.e)


def extract_form(t: CayleyTable, a: int, b: int) -> ArithmeticForm:
    """Linearize ``t`` over its principal isotope with ``h = R_a``, ``k = L_b``.

    The group is ``x + y = R_a^-1(x) . L_b^-1(y)`` with neutral ``b.a``;
    ``f = h(.) - h(0)``, ``g = -k(0) + k(.)``, ``e = h(0) + k(0)``. Every
    form axiom and the recomposition ``t == f(x) + e + g(y)`` is checked
    before returning; failures raise :class:`NotFGError`.
    """
    iso = principal_isotope(t, a, b, IsotopeConvention.SEC4)
    wit = associativity_witness(iso)
    if wit is not None:
        raise NotFGError(f"principal isotope at (a, b) = ({a}, {b}) is not associative at {wit}", wit)
    grp = GroupTable(iso, isotope_neutral(t, a, b))
    zero = grp.neutral
    h = t.cells[:, a]
    k = t.cells[b, :]
    f = grp.sub(h, h[zero])
    gg = grp.add(grp.neg(k[zero]), k)
    e = int(grp.add(h[zero], k[zero]))
    form = ArithmeticForm(grp, f, gg, e)
    problem = form_violation(form, t)
    if problem is not None:
        raise NotFGError(f"no arithmetic form at (a, b) = ({a}, {b}): {problem}")
    return form


def basepoint_for_neutral(t: CayleyTable, q: int) -> tuple[int, int]:
    """The witness ``(a, b) = (0, R_0^-1(q))`` with ``b.a == q``."""
    return 0, int(right_division(t)[0, q])


def form_at_neutral(t: CayleyTable, q: int) -> ArithmeticForm:
    a, b = basepoint_for_neutral(t, q)
    return extract_form(t, a, b)


def _require_fg(t: CayleyTable):
    if not is_FG(t):
        raise NotFGError("table does not satisfy identities (A) and (B)")


def enumerate_forms(t: CayleyTable) -> list[ArithmeticForm]:
    """One arithmetic form per element taken as the group neutral, ordered by neutral."""
    _require_fg(t)
    return [form_at_neutral(t, q) for q in range(t.n)]


def strong_forms(t: CayleyTable) -> list[ArithmeticForm]:
    return [form for form in enumerate_forms(t) if form.is_strong()]


def canonical_strong_form(t: CayleyTable) -> ArithmeticForm:
    """Form at ``a = b = alpha(beta(0))``; strong whenever ``t`` is FG."""
    _require_fg(t)
    alpha, beta = alpha_beta(t)
    c = alpha[beta[0]]
    form = extract_form(t, c, c)
    if not form.is_strong():
        raise NotFGError("basepoint alpha(beta(0)) did not give a strong form")
    return form


def is_form_homomorphism(m: Sequence[int], s: ArithmeticForm, t: ArithmeticForm) -> bool:
    if len(m) != s.n:
        raise PreconditionError("map length differs from the source order")
    if m[s.neutral] != t.neutral:
        raise PreconditionError("map must send the source neutral to the target neutral")
    mm = np.asarray(m, dtype=np.intp)
    if not (mm[s.group.cells] == t.group.cells[mm[:, None], mm[None, :]]).all():
        return False
    if not np.array_equal(mm[list(s.f)], np.asarray(t.f)[mm]):
        return False
    if not np.array_equal(mm[list(s.g)], np.asarray(t.g)[mm]):
        return False
    return int(mm[s.e]) == t.e
