import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import null_space_count_by_weight
from plurican.errors import ValidationError
from plurican.evenclass import (
    TYPE_I_REPRESENTATIVE,
    TYPE_II_REPRESENTATIVE,
    EvenSetTag,
    classify_type,
    enumerate_totally_even,
)
from plurican.f2geom import (
    F2Point,
    PointSet,
    all_hyperplanes,
    all_points,
    hyperplane_profile,
    incident,
    is_totally_even,
)
from plurican.glgroup import act

# golden value: totally even 8-point subsets of PG(3, F2), pinned from the
# null-space oracle (see test_count_matches_oracle)
N8 = 435


def test_enumerate_size_zero_and_one():
    assert enumerate_totally_even(0) == [PointSet.empty(4)]
    assert enumerate_totally_even(1) == []


def test_enumerate_size_eight_golden():
    sets = enumerate_totally_even(8)
    assert len(sets) == N8
    masks = [s.mask for s in sets]
    assert masks == sorted(masks)
    assert TYPE_I_REPRESENTATIVE in sets
    assert TYPE_II_REPRESENTATIVE in sets
    comps = {
        PointSet.from_codes(4, [p.code for p in all_points(4) if not incident(p, h)]).mask
        for h in all_hyperplanes(4)
    }
    assert comps <= set(masks)


def test_count_matches_oracle_for_every_size():
    oracle = null_space_count_by_weight(4)
    for size in range(16):
        assert len(enumerate_totally_even(size)) == oracle.get(size, 0)


def test_enumerate_size_validation():
    with pytest.raises(ValidationError):
        enumerate_totally_even(-1)
    with pytest.raises(ValidationError):
        enumerate_totally_even(16)


def test_classify_affine_chart():
    res = classify_type(TYPE_I_REPRESENTATIVE)
    assert res.tag is EvenSetTag.TYPE_I
    assert res.witness.coords == (0, 0, 0, 1)


def test_classify_type_ii_list():
    res = classify_type(TYPE_II_REPRESENTATIVE)
    assert res.tag is EvenSetTag.TYPE_II
    assert res.witness is not None
    inter = TYPE_II_REPRESENTATIVE.mask & res.witness.point_mask()
    assert bin(inter).count("1") == 6


def test_classify_not_totally_even():
    # first 8 points by encoding form no totally even set
    s = PointSet.from_codes(4, range(1, 9))
    assert not is_totally_even(s)
    assert classify_type(s).tag is EvenSetTag.NOT_TOTALLY_EVEN


def test_classify_wrong_size():
    with pytest.raises(ValidationError):
        classify_type(PointSet.from_codes(4, [1, 2, 3]))
    with pytest.raises(ValidationError):
        classify_type(PointSet.from_codes(3, [1, 2, 4, 7]))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_classification_is_projective_invariant(te8, gl4, data):
    s = data.draw(st.sampled_from(te8))
    m = data.draw(st.sampled_from(gl4))
    assert classify_type(act(m, s)).tag is classify_type(s).tag


def test_verify_report_shape(lemma_report):
    assert lemma_report.total_count == N8
    assert lemma_report.orbit_count == 2
    assert lemma_report.burnside_orbit_count == 2
    assert lemma_report.profile_separates_orbits
    sizes = sorted(o.size for o in lemma_report.census.orbits)
    assert sizes == [15, N8 - 15]


def test_verify_report_types(lemma_report):
    by_type = {
        tag: orbit
        for orbit, tag in zip(lemma_report.census.orbits, lemma_report.orbit_types)
    }
    assert set(by_type) == {EvenSetTag.TYPE_I, EvenSetTag.TYPE_II}
    assert by_type[EvenSetTag.TYPE_I].size == 15
    assert by_type[EvenSetTag.TYPE_II].size == 420
    assert by_type[EvenSetTag.TYPE_I].stabilizer_order == 1344
    assert by_type[EvenSetTag.TYPE_II].stabilizer_order == 48


def test_every_member_classified(te8):
    tags = {classify_type(s).tag for s in te8}
    assert tags == {EvenSetTag.TYPE_I, EvenSetTag.TYPE_II}


def test_profile_separates_types(te8):
    for s in te8:
        profile = hyperplane_profile(s)
        tag = classify_type(s).tag
        if tag is EvenSetTag.TYPE_I:
            assert 0 in profile and 6 not in profile
        else:
            assert 6 in profile and 0 not in profile


def test_excluded_profiles_never_occur(te8):
    # the case analysis rules these out: all sections of size 4, and
    # maximal section 4 together with some section of size 2
    for s in te8:
        profile = hyperplane_profile(s)
        assert profile != (4,) * 15
        assert not (max(profile) == 4 and 2 in profile)


def test_type_witnesses_are_unique(te8):
    for s in te8:
        profile = hyperplane_profile(s)
        res = classify_type(s)
        if res.tag is EvenSetTag.TYPE_I:
            assert profile.count(0) == 1
        else:
            assert profile.count(6) == 1


def test_type_ii_membership_matches_oracle_list():
    expected = {
        F2Point.from_coords(c).code
        for c in [
            (1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0),
            (0, 0, 1, 0), (0, 1, 1, 0), (1, 1, 1, 1), (0, 0, 0, 1),
        ]
    }
    assert set(TYPE_II_REPRESENTATIVE.codes()) == expected
