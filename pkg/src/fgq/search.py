"""Latin-square enumeration, predicate census, and random linear quasigroups.

Exhaustive enumeration grows all partial squares one row at a time; rows
are drawn from the lexicographically sorted permutation list, so the
output stack is in lexicographic order of the flattened tables.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, ConfigError
from .identities import IdentityName, batch_identity, batch_is_F, batch_is_FG, batch_isotope_assoc
from .linear import (GroupTable, automorphisms, center, cyclic_group, dihedral_group, direct_product,
                     quaternion_group)
from .qcore import CayleyTable, compose, is_simple

EXHAUSTIVE_MAX_ORDER = 5
REDUCED_MAX_ORDER = 6
PREDICATES = ("latin", "F", "FG", "medial", "group", "simple", "isogroup")
MODES = ("exhaustive", "reduced", "random")


@dataclass(frozen=True)
class SearchSpec:
    order: int
    mode: str = "exhaustive"
    count: int = 0
    seed: int | None = None
    filters: tuple[str, ...] = ("latin",)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.order < 1:
            raise ConfigError("order must be positive")
        if self.mode == "random" and self.seed is None:
            raise ConfigError("random mode needs an explicit seed")
        object.__setattr__(self, "filters", tuple(canonical_predicate(f) for f in self.filters))


def canonical_predicate(name: str) -> str:
    for p in PREDICATES:
        if p.lower() == name.lower():
            return p
    raise ConfigError(f"unknown predicate {name!r}; expected one of {PREDICATES}")


def threads_from_env(default: int = 1) -> int:
    raw = os.environ.get("FGQ_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"FGQ_THREADS must be an integer, got {raw!r}") from None


# -- exhaustive enumeration -----------------------------------------------------

@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8)


def _extend_rows(partial: np.ndarray, n: int, reduced: bool, chunk: int = 2048) -> np.ndarray:
    """Append every compatible next row to each partial square of shape (M, k, n)."""
    P = _perms(n).astype(np.intp)
    k = partial.shape[1]
    if reduced:
        P = P[P[:, 0] == k]
    out = []
    cols = np.arange(n)
    for s in range(0, partial.shape[0], chunk):
        part = partial[s:s + chunk].astype(np.intp)
        used = np.zeros((part.shape[0], n, n), dtype=bool)  # [square, column, value]
        for r in range(k):
            used[np.arange(part.shape[0])[:, None], cols[None, :], part[:, r, :]] = True
        clash = used[:, cols[None, :], P].any(axis=2)  # (M, |P|)
        mi, pi = np.nonzero(~clash)
        out.append(np.concatenate([part[mi], P[pi][:, None, :]], axis=1).astype(np.int8))
    if not out:
        return np.zeros((0, k + 1, n), dtype=np.int8)
    return np.concatenate(out, axis=0)


def _first_rows(n: int, reduced: bool) -> np.ndarray:
    if reduced:
        return np.arange(n, dtype=np.int8)[None, None, :]
    return _perms(n)[:, None, :]


def _complete(prefixes: np.ndarray, n: int, reduced: bool) -> np.ndarray:
    stack = prefixes
    while stack.shape[1] < n:
        stack = _extend_rows(stack, n, reduced)
    return stack


def _complete_worker(args):
    prefixes, n, reduced = args
    return _complete(prefixes, n, reduced)


def latin_stack(order: int, mode: str = "exhaustive", workers: int = 1) -> np.ndarray:
    """All Latin squares (or all reduced ones) of ``order`` as an int8 array (B, n, n).

    Reduced squares have first row and first column equal to ``0..n-1``.
    With ``workers > 1`` the completed two-row prefixes are split across
    processes and the results concatenated in prefix order.
    """
    reduced = mode == "reduced"
    if mode not in ("exhaustive", "reduced"):
        raise ConfigError(f"latin_stack handles exhaustive/reduced, not {mode!r}")
    limit = REDUCED_MAX_ORDER if reduced else EXHAUSTIVE_MAX_ORDER
    if order > limit:
        raise CapacityError(f"{mode} enumeration is capped at order {limit}, got {order}")
    n = order
    stack = _first_rows(n, reduced)
    if n == 1:
        return stack
    stack = _extend_rows(stack, n, reduced)
    if workers <= 1 or stack.shape[0] < 2:
        return _complete(stack, n, reduced)
    parts = np.array_split(stack, min(workers * 4, stack.shape[0]))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        done = list(pool.map(_complete_worker, [(p, n, reduced) for p in parts]))
    return np.concatenate(done, axis=0)


def random_latin(order: int, rng: np.random.Generator) -> np.ndarray:
    """One Latin square by row-by-row, cell-by-cell randomized backtracking."""
    n = order
    grid = -np.ones((n, n), dtype=np.intp)
    row_used = np.zeros((n, n), dtype=bool)
    col_used = np.zeros((n, n), dtype=bool)
    choices: list[list[int]] = []
    pos = 0
    while pos < n * n:
        r, c = divmod(pos, n)
        if len(choices) <= pos:
            cand = [v for v in range(n) if not row_used[r, v] and not col_used[c, v]]
            rng.shuffle(cand)
            choices.append(cand)
        if grid[r, c] >= 0:
            v = grid[r, c]
            row_used[r, v] = col_used[c, v] = False
            grid[r, c] = -1
        if choices[pos]:
            v = choices[pos].pop()
            grid[r, c] = v
            row_used[r, v] = col_used[c, v] = True
            pos += 1
        else:
            choices.pop()
            pos -= 1
    return grid


def random_latin_stack(order: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.array([random_latin(order, rng) for _ in range(count)], dtype=np.int8).reshape(count, order, order)


def search_stack(spec: SearchSpec, workers: int = 1) -> np.ndarray:
    if spec.mode == "random":
        return random_latin_stack(spec.order, spec.count, spec.seed)
    return latin_stack(spec.order, spec.mode, workers=workers)


def enumerate_latin(spec: SearchSpec, workers: int = 1) -> Iterator[CayleyTable]:
    for cells in search_stack(spec, workers=workers):
        yield CayleyTable(cells)


# -- census ------------------------------------------------------------------------

def _group_mask(T: np.ndarray) -> np.ndarray:
    n = T.shape[-1]
    idx = np.arange(n)
    row_id = (T == idx).all(axis=2)
    col_id = (T == idx[:, None]).all(axis=1)
    has_neutral = (row_id & col_id).any(axis=1)
    B = T.shape[0]
    bi = np.arange(B)[:, None, None, None]
    x = idx[None, :, None, None]
    y = idx[None, None, :, None]
    z = idx[None, None, None, :]
    assoc = (T[bi, T[bi, x, y], z] == T[bi, x, T[bi, y, z]]).reshape(B, -1).all(axis=1)
    return has_neutral & assoc


def predicate_masks(T: np.ndarray, names: Sequence[str]) -> dict[str, np.ndarray]:
    T = np.asarray(T, dtype=np.intp)
    out = {}
    for name in names:
        name = canonical_predicate(name)
        if name == "latin":
            out[name] = np.ones(T.shape[0], dtype=bool)
        elif name == "F":
            out[name] = batch_is_F(T)
        elif name == "FG":
            out[name] = batch_is_FG(T)
        elif name == "medial":
            out[name] = batch_identity(T, IdentityName.MEDIAL)
        elif name == "group":
            out[name] = np.concatenate([_group_mask(T[s:s + 8192]) for s in range(0, len(T), 8192)]
                                       or [np.zeros(0, dtype=bool)])
        elif name == "isogroup":
            out[name] = batch_isotope_assoc(T, 0, 0)
        elif name == "simple":
            out[name] = np.array([T.shape[-1] >= 2 and is_simple(CayleyTable(t)) for t in T], dtype=bool)
    return out


def _census_counts(T: np.ndarray, filters: tuple[str, ...]) -> dict[tuple[str, ...], int]:
    masks = predicate_masks(T, filters)
    counts = {}
    for r in range(1, len(filters) + 1):
        for combo in combinations(filters, r):
            m = np.ones(T.shape[0], dtype=bool)
            for name in combo:
                m &= masks[name]
            counts[combo] = int(m.sum())
    return counts


def _census_worker(args):
    return _census_counts(*args)


def census(spec: SearchSpec, workers: int = 1) -> dict[tuple[str, ...], int]:
    """Counts of tables satisfying each non-empty conjunction of ``spec.filters``."""
    T = search_stack(spec, workers=workers)
    if workers <= 1 or T.shape[0] < 2:
        return _census_counts(T, spec.filters)
    parts = np.array_split(T, min(workers * 4, T.shape[0]))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        partial = list(pool.map(_census_worker, [(p, spec.filters) for p in parts]))
    total: dict[tuple[str, ...], int] = {}
    for d in partial:
        for k, v in d.items():
            total[k] = total.get(k, 0) + v
    return total


def filter_stack(T: np.ndarray, filters: Sequence[str]) -> np.ndarray:
    masks = predicate_masks(T, filters)
    keep = np.ones(len(T), dtype=bool)
    for m in masks.values():
        keep &= m
    return np.asarray(T)[keep]


# -- group catalog and random linear quasigroups ---------------------------------------

@lru_cache(maxsize=None)
def group_catalog() -> dict[str, GroupTable]:
    """Cyclic groups Z1..Z16 plus Z2xZ2, Z2xZ4, Z2^3, D3 (= S3), D4 and Q8."""
    cat = {f"Z{n}": cyclic_group(n) for n in range(1, 17)}
    z2, z4 = cyclic_group(2), cyclic_group(4)
    cat["Z2xZ2"] = direct_product(z2, z2)
    cat["Z2xZ4"] = direct_product(z2, z4)
    cat["Z2^3"] = direct_product(z2, z2, z2)
    cat["D3"] = dihedral_group(3)
    cat["D4"] = dihedral_group(4)
    cat["Q8"] = quaternion_group()
    return cat


@dataclass(frozen=True)
class LinearDraw:
    name: str
    group: GroupTable
    f: tuple[int, ...]
    g: tuple[int, ...]
    e: int
    meta: dict = field(default_factory=dict, compare=False)


def _central_shift(g: GroupTable, m, Z) -> bool:
    return all(int(g.cells[g.inverse[x], m[x]]) in Z for x in range(g.n))


def random_linear(catalog: dict[str, GroupTable] | None, seed: int, count: int,
                  constrained: bool = True) -> list[LinearDraw]:
    """Seeded draws of (group, f, g, e) with f, g commuting automorphisms.

    ``constrained`` additionally requires ``-x + f(x)`` and ``-x + g(x)``
    central, so the linear quasigroup is an FG-quasigroup.
    """
    catalog = group_catalog() if catalog is None else catalog
    names = sorted(catalog)
    rng = np.random.default_rng(seed)
    draws = []
    for _ in range(count):
        name = names[rng.integers(len(names))]
        grp = catalog[name]
        auts = automorphisms(grp)
        if constrained:
            Z = center(grp)
            auts = [a for a in auts if _central_shift(grp, a, Z)]
        f = auts[rng.integers(len(auts))]
        partners = [a for a in auts if compose(a, f) == compose(f, a)]
        gg = partners[rng.integers(len(partners))]
        e = int(rng.integers(grp.n))
        draws.append(LinearDraw(name, grp, f, gg, e))
    return draws
