"""Cayley tables, translations, homomorphisms, congruences and quotients.

Elements are the integers ``0..n-1`` and ``t[x][y]`` is the product ``x*y``
(row index is the left factor). Maps between carriers are stored as tuples
of images; arrays are used only inside computations.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CongruenceError, DegenerateInputError, StructureError


class CayleyTable:
    """An immutable ``n x n`` multiplication table over ``0..n-1``.

    Construction checks shape and range only; Latin-ness is a property
    queried with :func:`validate_table`.
    """

    __slots__ = ("cells", "_key")

    def __init__(self, rows):
        if isinstance(rows, CayleyTable):
            rows = rows.cells
        try:
            arr = np.array(rows, dtype=np.intp)
        except (TypeError, ValueError) as exc:
            raise StructureError(f"table is not a rectangular integer array: {exc}") from None
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise StructureError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise StructureError(f"entries must lie in [0, {n})")
        arr.setflags(write=False)
        self.cells = arr
        self._key = arr.tobytes()

    @property
    def n(self) -> int:
        return self.cells.shape[0]

    def __len__(self):
        return self.n

    def mul(self, x: int, y: int) -> int:
        return int(self.cells[x, y])

    def __getitem__(self, idx):
        return self.cells[idx]

    def rows(self) -> list[list[int]]:
        return self.cells.tolist()

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.n == other.n and self._key == other._key

    def __hash__(self):
        return hash((self.n, self._key))

    def __repr__(self):
        body = "/".join("".join(map(str, r)) if self.n <= 10 else ",".join(map(str, r)) for r in self.rows())
        return f"CayleyTable({body})"


def table_from_function(n: int, op) -> CayleyTable:
    return CayleyTable([[op(x, y) for y in range(n)] for x in range(n)])


def is_permutation(images: Sequence[int], n: int | None = None) -> bool:
    n = len(images) if n is None else n
    return len(images) == n and sorted(int(i) for i in images) == list(range(n))


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def compose(*maps: Sequence[int]) -> tuple[int, ...]:
    """Right-to-left composition: ``compose(f, g)[x] == f[g[x]]``."""
    out = np.arange(len(maps[-1]))
    for m in reversed(maps):
        out = np.asarray(m)[out]
    return tuple(int(v) for v in out)


def left_translation(t: CayleyTable, a: int) -> tuple[int, ...]:
    return tuple(int(v) for v in t.cells[a])


def right_translation(t: CayleyTable, a: int) -> tuple[int, ...]:
    return tuple(int(v) for v in t.cells[:, a])


def left_division(t: CayleyTable) -> np.ndarray:
    """``ld[a, w]`` is the unique ``y`` with ``a*y == w`` (``L_a^{-1}``)."""
    return np.argsort(t.cells, axis=1, kind="stable")


def right_division(t: CayleyTable) -> np.ndarray:
    """``rd[a, w]`` is the unique ``x`` with ``x*a == w`` (``R_a^{-1}``)."""
    return np.argsort(t.cells, axis=0, kind="stable").T


def _latin_mask(cells: np.ndarray) -> np.ndarray:
    # works on (..., n, n) stacks
    n = cells.shape[-1]
    srt_rows = np.sort(cells, axis=-1)
    srt_cols = np.sort(cells, axis=-2)
    ref = np.arange(n)
    rows_ok = (srt_rows == ref).all(axis=(-1, -2))
    cols_ok = (srt_cols == ref[:, None]).all(axis=(-1, -2))
    return rows_ok & cols_ok


def validate_table(t) -> bool:
    """True iff ``t`` is a Latin square, i.e. the Cayley table of a quasigroup.

    Raises :class:`StructureError` when ``t`` is not a square array over
    ``0..n-1``.
    """
    t = CayleyTable(t)
    return bool(_latin_mask(t.cells))


def alpha_beta(t: CayleyTable) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(alpha, beta)`` with ``x*alpha(x) == x == beta(x)*x``."""
    c = t.cells
    idx = np.arange(t.n)
    alpha = np.argmax(c == idx[:, None], axis=1)
    beta = np.argmax(c == idx[None, :], axis=0)
    return tuple(int(v) for v in alpha), tuple(int(v) for v in beta)


def is_homomorphism(m: Sequence[int], s: CayleyTable, t: CayleyTable) -> bool:
    if len(m) != s.n:
        raise StructureError(f"map has {len(m)} images but the source has order {s.n}")
    mm = np.asarray(m, dtype=np.intp)
    if mm.size and (mm.min() < 0 or mm.max() >= t.n):
        raise StructureError("map images fall outside the target carrier")
    return bool((mm[s.cells] == t.cells[mm[:, None], mm[None, :]]).all())


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on ``0..n-1``; ``labels[i]`` is the least element of i's block."""

    labels: tuple[int, ...]

    def __post_init__(self):
        for i, r in enumerate(self.labels):
            if self.labels[r] != r or r > i:
                raise StructureError("partition labels must point at the block minimum")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = list(range(n))
        seen = set()
        for blk in blocks:
            blk = sorted(blk)
            if not blk or seen & set(blk):
                raise StructureError("blocks must be non-empty and disjoint")
            seen |= set(blk)
            for x in blk:
                labels[x] = blk[0]
        if seen != set(range(n)):
            raise StructureError("blocks must cover the carrier")
        return cls(tuple(labels))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.labels)))

    @property
    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.labels):
            out.setdefault(r, []).append(x)
        return [out[r] for r in sorted(out)]

    def is_full(self) -> bool:
        return all(r == 0 for r in self.labels)

    def is_discrete(self) -> bool:
        return all(r == i for i, r in enumerate(self.labels))

    def projection(self) -> tuple[int, ...]:
        """Map each element to the index of its block in representative order."""
        index = {r: i for i, r in enumerate(self.representatives)}
        return tuple(index[r] for r in self.labels)

    def refines(self, other: "Partition") -> bool:
        return all(other.labels[x] == other.labels[self.labels[x]] for x in range(self.n))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def partition(self) -> Partition:
        roots = [self.find(x) for x in range(len(self.parent))]
        least: dict[int, int] = {}
        for x, r in enumerate(roots):
            least.setdefault(r, x)
        return Partition(tuple(least[r] for r in roots))


def congruence_closure(t: CayleyTable, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Smallest congruence of ``t`` containing every pair in ``pairs``.

    Pairs are processed FIFO; each newly merged pair is pushed through all
    left/right multiplications and divisions.
    """
    c = t.cells
    ld, rd = left_division(t), right_division(t)
    uf = _UnionFind(t.n)
    work = deque()
    for p, q in pairs:
        if uf.union(p, q):
            work.append((p, q))
    while work:
        p, q = work.popleft()
        images = (
            zip(c[:, p], c[:, q]),
            zip(c[p, :], c[q, :]),
            zip(ld[:, p], ld[:, q]),
            zip(rd[:, p], rd[:, q]),
        )
        for gen in images:
            for u, v in gen:
                u, v = int(u), int(v)
                if uf.union(u, v):
                    work.append((u, v))
    return uf.partition()


def principal_congruence(t: CayleyTable, a: int, b: int) -> Partition:
    return congruence_closure(t, [(a, b)])


def congruence_witness(t: CayleyTable, p: Partition):
    """First ``(x, y, z)`` with ``x ~ y`` but ``z*x !~ z*y`` or ``x*z !~ y*z``; None if compatible."""
    lab = np.asarray(p.labels)
    c = t.cells
    n = t.n
    for x in range(n):
        for y in range(x + 1, n):
            if lab[x] != lab[y]:
                continue
            for z in range(n):
                if lab[c[z, x]] != lab[c[z, y]] or lab[c[x, z]] != lab[c[y, z]]:
                    return (x, y, z)
    return None


def is_congruence(t: CayleyTable, p: Partition) -> bool:
    return congruence_witness(t, p) is None


def is_simple(t: CayleyTable) -> bool:
    if t.n < 2:
        raise DegenerateInputError("simplicity is only defined here for order >= 2")
    for a in range(t.n):
        for b in range(a + 1, t.n):
            if not principal_congruence(t, a, b).is_full():
                return False
    return True


def quotient(t: CayleyTable, p: Partition) -> CayleyTable:
    if p.n != t.n:
        raise StructureError("partition and table have different orders")
    wit = congruence_witness(t, p)
    if wit is not None:
        x, y, z = wit
        raise CongruenceError(f"not a congruence: {x} ~ {y} but products with {z} separate", wit)
    proj = np.asarray(p.projection())
    reps = np.asarray(p.representatives)
    return CayleyTable(proj[t.cells[np.ix_(reps, reps)]])


def subtable(t: CayleyTable, subset: Sequence[int]) -> CayleyTable | None:
    """Restriction of ``t`` to ``subset`` (renumbered in ascending order), or None if not closed."""
    elems = sorted(set(int(s) for s in subset))
    index = {e: i for i, e in enumerate(elems)}
    rows = []
    for x in elems:
        row = []
        for y in elems:
            v = int(t.cells[x, y])
            if v not in index:
                return None
            row.append(index[v])
        rows.append(row)
    return CayleyTable(rows)
