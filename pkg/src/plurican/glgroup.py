"""The group GL(k, F2) = PGL(k, F2) for k <= 4, acting on PG(k-1, F2).

The whole group is materialized (at most 20160 matrices, each a tuple of
k packed rows); orbit partitioning, canonical forms and stabilizer orders
are computed by applying every group element, which at these sizes is the
most auditable approach.  Canonical forms are lexicographic minima of
orbits under the integer encoding of point-set bit masks, so they are
independent of traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial

import numpy as np

from ._pool import check_workers, filter_deterministic
from .errors import ValidationError
from .f2geom import F2Point, PointSet, _check_dim, num_points, pointset_to_json


def _rows_invertible(rows: tuple[int, ...]) -> bool:
    """Gaussian elimination on packed rows over F2."""
    basis: list[int] = []
    for row in rows:
        cur = row
        for b in basis:
            cur = min(cur, cur ^ b)
        if cur == 0:
            return False
        basis.append(cur)
        basis.sort(reverse=True)
    return True


@dataclass(frozen=True)
class F2Matrix:
    """An invertible k x k matrix over F2; row i is packed like a point code."""

    k: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_dim(self.k)
        if len(self.rows) != self.k:
            raise ValidationError(f"expected {self.k} rows, got {len(self.rows)}")
        top = 1 << self.k
        if any(not 0 <= r < top for r in self.rows):
            raise ValidationError(f"row out of range for k={self.k}", rows=self.rows)
        if not _rows_invertible(self.rows):
            raise ValidationError("matrix is singular over F2", rows=self.rows)

    @classmethod
    def identity(cls, k: int) -> "F2Matrix":
        return cls(k, tuple(1 << (k - 1 - i) for i in range(k)))

    def apply_code(self, code: int) -> int:
        out = 0
        for i, row in enumerate(self.rows):
            if (row & code).bit_count() & 1:
                out |= 1 << (self.k - 1 - i)
        return out

    def apply(self, p: F2Point) -> F2Point:
        if p.k != self.k:
            raise ValidationError(f"dimension mismatch: matrix k={self.k}, point k={p.k}")
        return F2Point(self.k, self.apply_code(p.code))

    def point_permutation(self) -> tuple[int, ...]:
        """Image of every code 0 .. 2^k - 1 (index 0 maps to 0)."""
        return tuple(self.apply_code(c) for c in range(num_points(self.k) + 1))


@dataclass(frozen=True)
class Orbit:
    representative: PointSet
    size: int
    stabilizer_order: int


@dataclass(frozen=True)
class OrbitCensus:
    """Orbit partition of a family of point sets under a full matrix group."""

    orbits: tuple[Orbit, ...]
    group_order: int

    def __post_init__(self):
        reps = [o.representative.mask for o in self.orbits]
        if len(set(reps)) != len(reps):
            raise ValidationError("orbit representatives are not pairwise distinct")
        for o in self.orbits:
            if o.size * o.stabilizer_order != self.group_order:
                raise ValidationError(
                    "orbit-stabilizer identity violated",
                    orbit_size=o.size,
                    stabilizer_order=o.stabilizer_order,
                    group_order=self.group_order,
                )

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def as_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "orbit_count": self.orbit_count,
            "orbits": [
                {
                    "representative": pointset_to_json(o.representative),
                    "size": o.size,
                    "stabilizer_order": o.stabilizer_order,
                }
                for o in self.orbits
            ],
        }


def _decode_candidate(packed: int, k: int) -> tuple[int, ...]:
    mask = (1 << k) - 1
    return tuple((packed >> (k * (k - 1 - i))) & mask for i in range(k))


def _candidate_invertible(packed: int, k: int) -> bool:
    return _rows_invertible(_decode_candidate(packed, k))


def enumerate_gl(k: int, workers: int = 1) -> list[F2Matrix]:
    """All invertible k x k matrices over F2.

    Every one of the 2^(k*k) candidate matrices is tested for invertibility;
    the order is ascending in the packed row encoding (row 0 most
    significant), hence deterministic.
    """
    _check_dim(k)
    check_workers(workers)
    candidates = range(1 << (k * k))
    keep = filter_deterministic(candidates, partial(_candidate_invertible, k=k), workers)
    return [F2Matrix(k, _decode_candidate(p, k)) for p in keep]


def act(m: F2Matrix, s: PointSet) -> PointSet:
    """Image point set {m * p : p in s}; cardinality is preserved."""
    if m.k != s.k:
        raise ValidationError(f"dimension mismatch: matrix k={m.k}, set k={s.k}")
    out = 0
    mask = s.mask
    while mask:
        low = mask & -mask
        out |= 1 << m.apply_code(low.bit_length() - 1)
        mask ^= low
    return PointSet(s.k, out)


def _act_mask(perm: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _group_permutations(group: list[F2Matrix]) -> list[tuple[int, ...]]:
    if not group:
        raise ValidationError("empty matrix group")
    k = group[0].k
    if any(m.k != k for m in group):
        raise ValidationError("matrices of mixed dimensions in group")
    return [m.point_permutation() for m in group]


def canonical_form(s: PointSet, group: list[F2Matrix]) -> PointSet:
    """Minimum bit-set encoding over the orbit of s; constant on orbits."""
    perms = _group_permutations(group)
    if group[0].k != s.k:
        raise ValidationError("dimension mismatch between set and group")
    return PointSet(s.k, min(_act_mask(p, s.mask) for p in perms))


def orbit_census(sets: list[PointSet], group: list[F2Matrix]) -> OrbitCensus:
    """Partition ``sets`` into orbits under ``group``.

    The caller guarantees that ``sets`` is closed under the action; a
    computed orbit element outside ``sets`` raises a closure violation.
    """
    perms = _group_permutations(group)
    k = group[0].k
    if any(s.k != k for s in sets):
        raise ValidationError("dimension mismatch between sets and group")
    codes = sorted({s.mask for s in sets})
    code_set = set(codes)
    orbits: list[Orbit] = []
    assigned: set[int] = set()
    for code in codes:
        if code in assigned:
            continue
        orbit_masks = set()
        stab = 0
        for perm in perms:
            img = _act_mask(perm, code)
            orbit_masks.add(img)
            if img == code:
                stab += 1
        stray = orbit_masks - code_set
        if stray:
            raise ValidationError(
                "input family is not closed under the group action",
                missing_mask=min(stray),
            )
        assigned |= orbit_masks
        if len(orbit_masks) * stab != len(group):
            raise ValidationError(
                "orbit-stabilizer identity violated; is the group a full group "
                "without duplicates?",
                orbit_size=len(orbit_masks),
                stabilizer_order=stab,
            )
        orbits.append(Orbit(PointSet(k, min(orbit_masks)), len(orbit_masks), stab))
    orbits.sort(key=lambda o: o.representative.mask)
    return OrbitCensus(tuple(orbits), len(group))


def _image_code_matrix(codes: list[int], perms: list[tuple[int, ...]], k: int) -> np.ndarray:
    """Image masks of every set under every permutation, shape (sets, group)."""
    n = num_points(k)
    inv = np.zeros((len(perms), n + 1), dtype=np.int64)
    for j, perm in enumerate(perms):
        for x in range(1, n + 1):
            inv[j, perm[x]] = x
    arr = np.asarray(codes, dtype=np.int64)[:, None]
    img = np.zeros((len(codes), len(perms)), dtype=np.int64)
    for y in range(1, n + 1):
        img |= ((arr >> inv[None, :, y]) & 1) << y
    return img


def burnside_orbit_count(sets: list[PointSet], group: list[F2Matrix]) -> int:
    """Orbit count as the average number of fixed sets per group element.

    Independent recount for cross-checking :func:`orbit_census`; requires the
    family to be closed under the action.
    """
    perms = _group_permutations(group)
    k = group[0].k
    if any(s.k != k for s in sets):
        raise ValidationError("dimension mismatch between sets and group")
    codes = sorted({s.mask for s in sets})
    if not codes:
        return 0
    img = _image_code_matrix(codes, perms, k)
    total_fixed = int((img == np.asarray(codes, dtype=np.int64)[:, None]).sum())
    count, rem = divmod(total_fixed, len(group))
    if rem:
        raise ValidationError(
            "total fixed-set count is not a multiple of the group order; "
            "the family is not closed under the action",
            total_fixed=total_fixed, group_order=len(group),
        )
    return count
