"""Exhaustive enumeration and classification of totally even subsets of PG(3, F2).

A subset is totally even when it meets every hyperplane in an even number of
points.  Among the 8-point totally even subsets there are exactly two
GL(4, 2)-orbits: the complements of hyperplanes (type I) and one exceptional
configuration (type II).  The enumeration here iterates over all C(15, 8)
subsets and filters; the equivalent linear-algebra route (null space of the
point-hyperplane incidence matrix) is reserved for the test suite as an
independent oracle, so the two cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from ._pool import check_workers, filter_deterministic
from .errors import ValidationError
from .f2geom import (
    Hyperplane,
    PointSet,
    _hyperplane_masks,
    hyperplane_profile,
    is_totally_even,
    num_points,
    pointset_to_json,
)
from .glgroup import OrbitCensus, act, burnside_orbit_count, enumerate_gl, orbit_census

K = 4


class EvenSetTag(str, Enum):
    TYPE_I = "type-I"
    TYPE_II = "type-II"
    NOT_TOTALLY_EVEN = "not-totally-even"


@dataclass(frozen=True)
class EvenSetType:
    """Classification of an 8-point set, with the witnessing hyperplane.

    For type I the witness is the hyperplane disjoint from the set, for
    type II the unique hyperplane meeting the set in 6 points.
    """

    tag: EvenSetTag
    witness: Hyperplane | None


# the two orbit representatives among totally even 8-point sets:
# the affine chart (last coordinate = 1) and the exceptional configuration
TYPE_I_REPRESENTATIVE = PointSet.from_codes(K, [c for c in range(1, 16) if c & 1])
TYPE_II_REPRESENTATIVE = PointSet.from_codes(K, [1, 2, 4, 6, 8, 10, 12, 15])


def _mask_totally_even(mask: int) -> bool:
    masks = _hyperplane_masks(K)
    return all((mask & m).bit_count() % 2 == 0 for m in masks[1:])


def enumerate_totally_even(size: int, workers: int = 1) -> list[PointSet]:
    """All totally even subsets of PG(3, F2) of the given cardinality.

    Brute force over all point subsets of that size; the result is sorted by
    ascending bit-set encoding.
    """
    n = num_points(K)
    if not isinstance(size, int) or not 0 <= size <= n:
        raise ValidationError(f"size must be an integer in 0..{n}, got {size!r}")
    check_workers(workers)
    candidates = [
        sum(1 << c for c in comb) for comb in combinations(range(1, n + 1), size)
    ]
    keep = filter_deterministic(candidates, _mask_totally_even, workers)
    return [PointSet(K, mask) for mask in sorted(keep)]


def classify_type(s: PointSet) -> EvenSetType:
    """Classify an 8-point subset of PG(3, F2).

    Type I sets avoid some hyperplane entirely; type II sets meet every
    hyperplane, exactly one of them in 6 points.  The type is constant on
    GL(4, 2)-orbits.
    """
    if s.k != K:
        raise ValidationError(f"classification lives in PG(3, F2); got k={s.k}")
    if s.size != 8:
        raise ValidationError(f"expected a set of size 8, got size {s.size}", size=s.size)
    if not is_totally_even(s):
        return EvenSetType(EvenSetTag.NOT_TOTALLY_EVEN, None)
    masks = _hyperplane_masks(K)
    six = []
    for normal in range(1, num_points(K) + 1):
        inter = (s.mask & masks[normal]).bit_count()
        if inter == 0:
            return EvenSetType(EvenSetTag.TYPE_I, Hyperplane(K, normal))
        if inter == 6:
            six.append(normal)
    if len(six) != 1:
        raise ValidationError(
            "classification dichotomy failed: no disjoint hyperplane and no "
            "unique 6-point section",
            set=pointset_to_json(s), six_point_normals=six,
        )
    return EvenSetType(EvenSetTag.TYPE_II, Hyperplane(K, six[0]))


@dataclass
class LemmaEvReport:
    """Outcome of the full census of totally even 8-point sets."""

    total_count: int
    census: OrbitCensus
    orbit_types: tuple[EvenSetTag, ...]
    burnside_orbit_count: int
    profile_separates_orbits: bool

    @property
    def orbit_count(self) -> int:
        return self.census.orbit_count

    def as_json(self) -> dict:
        orbits = []
        for orbit, tag in zip(self.census.orbits, self.orbit_types):
            orbits.append(
                {
                    "type": tag.value,
                    "size": orbit.size,
                    "stabilizer_order": orbit.stabilizer_order,
                    "representative": pointset_to_json(orbit.representative),
                }
            )
        return {
            "total_count": self.total_count,
            "orbit_count": self.orbit_count,
            "group_order": self.census.group_order,
            "burnside_orbit_count": self.burnside_orbit_count,
            "profile_separates_orbits": self.profile_separates_orbits,
            "orbits": orbits,
        }


def _fail(message: str, **details):
    raise ValidationError("totally even census check failed: " + message, **details)


def verify_lemma_ev(workers: int = 1) -> LemmaEvReport:
    """Run the census of totally even 8-point sets and check its shape.

    Asserts that there are exactly two orbits, that the type I orbit has
    size 15, that the classification is constant on orbits, and that the
    independent Burnside recount agrees with the partition.
    """
    sets = enumerate_totally_even(8, workers=workers)
    group = enumerate_gl(K, workers=workers)
    census = orbit_census(sets, group)
    burnside = burnside_orbit_count(sets, group)

    if census.orbit_count != 2:
        _fail(f"expected 2 orbits, found {census.orbit_count}")
    if burnside != census.orbit_count:
        _fail(
            f"Burnside recount {burnside} disagrees with census {census.orbit_count}"
        )

    group_of = {}
    for idx, orbit in enumerate(census.orbits):
        rep_tag = classify_type(orbit.representative).tag
        group_of[idx] = rep_tag
        if rep_tag is EvenSetTag.NOT_TOTALLY_EVEN:
            _fail(
                "orbit representative is not totally even",
                representative=pointset_to_json(orbit.representative),
            )

    # assign each set to its orbit by membership and re-classify it
    rep_by_mask = {}
    perclass_ok = True
    for s in sets:
        tag = classify_type(s).tag
        profile = hyperplane_profile(s)
        expected = EvenSetTag.TYPE_I if 0 in profile else (
            EvenSetTag.TYPE_II if 6 in profile else None
        )
        if expected is not tag:
            perclass_ok = False
        rep_by_mask[s.mask] = tag

    for idx, orbit in enumerate(census.orbits):
        # regenerate the orbit and check the classification is constant on it
        tags = {rep_by_mask[act(m, orbit.representative).mask] for m in group}
        if tags != {group_of[idx]}:
            _fail(
                "classification is not constant on an orbit",
                representative=pointset_to_json(orbit.representative),
                tags=sorted(t.value for t in tags),
            )

    type_i = [o for idx, o in enumerate(census.orbits) if group_of[idx] is EvenSetTag.TYPE_I]
    if len(type_i) != 1 or type_i[0].size != 15:
        _fail(
            "expected a single type I orbit of size 15",
            sizes=[o.size for o in type_i],
        )

    orbit_types = tuple(group_of[idx] for idx in range(census.orbit_count))
    return LemmaEvReport(
        total_count=len(sets),
        census=census,
        orbit_types=orbit_types,
        burnside_orbit_count=burnside,
        profile_separates_orbits=perclass_ok,
    )
