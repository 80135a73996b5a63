import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plurican.errors import ValidationError
from plurican.evenclass import TYPE_II_REPRESENTATIVE
from plurican.f2geom import F2Point, PointSet, all_hyperplanes, all_points, incident, is_totally_even
from plurican.glgroup import (
    F2Matrix,
    burnside_orbit_count,
    act,
    canonical_form,
    enumerate_gl,
    orbit_census,
)


def hyperplane_complements():
    return [
        PointSet.from_codes(4, [p.code for p in all_points(4) if not incident(p, h)])
        for h in all_hyperplanes(4)
    ]


@pytest.mark.parametrize("k,order", [(2, 6), (3, 168), (4, 20160)])
def test_group_orders(k, order, gl4):
    group = gl4 if k == 4 else enumerate_gl(k)
    assert len(group) == order
    assert len(set(group)) == order


def test_unsupported_dimension():
    with pytest.raises(ValidationError):
        enumerate_gl(5)


def test_enumeration_order_is_ascending_packed():
    for k in (2, 3):
        group = enumerate_gl(k)
        packed = [
            sum(m.rows[i] << (k * (k - 1 - i)) for i in range(k)) for m in group
        ]
        assert packed == sorted(packed)


def test_singular_matrix_rejected():
    with pytest.raises(ValidationError):
        F2Matrix(2, (1, 1))
    with pytest.raises(ValidationError):
        F2Matrix(4, (0, 1, 2, 4))


def test_identity_action():
    ident = F2Matrix.identity(4)
    s = TYPE_II_REPRESENTATIVE
    assert act(ident, s) == s
    for p in all_points(4):
        assert ident.apply(p) == p


def test_swap_matrix_action():
    # swap the first two coordinates of PG(3, F2)
    swap = F2Matrix(4, (0b0100, 0b1000, 0b0010, 0b0001))
    src = PointSet.from_points([F2Point.from_coords((1, 0, 0, 0))])
    dst = PointSet.from_points([F2Point.from_coords((0, 1, 0, 0))])
    assert act(swap, src) == dst


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_action_preserves_size_and_evenness(gl3, data):
    m = data.draw(st.sampled_from(gl3))
    mask = data.draw(st.integers(0, (1 << 8) - 1).map(lambda x: x & ~1))
    s = PointSet(3, mask)
    image = act(m, s)
    assert image.size == s.size
    assert is_totally_even(image) == is_totally_even(s)


def test_canonical_form_orbit_invariance(gl3):
    s = PointSet.from_codes(3, [1, 2, 4])
    base = canonical_form(s, gl3)
    for m in gl3[::17]:
        assert canonical_form(act(m, s), gl3) == base
    assert canonical_form(base, gl3) == base  # idempotent


def test_canonical_form_of_empty_set(gl3):
    assert canonical_form(PointSet.empty(3), gl3) == PointSet.empty(3)


def test_complements_share_one_canonical_form(gl4):
    comps = hyperplane_complements()
    forms = {canonical_form(s, gl4).mask for s in comps}
    assert len(forms) == 1


def test_census_of_hyperplane_complements(gl4):
    census = orbit_census(hyperplane_complements(), gl4)
    assert census.orbit_count == 1
    orbit = census.orbits[0]
    assert orbit.size == 15
    assert orbit.stabilizer_order == 1344
    assert orbit.size * orbit.stabilizer_order == census.group_order


def test_census_closure_violation(gl4):
    with pytest.raises(ValidationError):
        orbit_census([TYPE_II_REPRESENTATIVE], gl4)


def test_burnside_matches_census_on_complements(gl4):
    assert burnside_orbit_count(hyperplane_complements(), gl4) == 1


def test_burnside_matches_census_on_totally_even_family(te8, gl4, lemma_report):
    assert burnside_orbit_count(te8, gl4) == lemma_report.census.orbit_count


def test_orbit_sizes_divide_group_order(lemma_report):
    census = lemma_report.census
    for orbit in census.orbits:
        assert census.group_order % orbit.size == 0
        assert orbit.size * orbit.stabilizer_order == census.group_order


def test_census_representatives_are_minima(te8, gl4, lemma_report):
    for orbit in lemma_report.census.orbits:
        assert canonical_form(orbit.representative, gl4) == orbit.representative


def test_census_json_shape(lemma_report):
    data = lemma_report.census.as_json()
    assert data["group_order"] == 20160
    assert data["orbit_count"] == len(data["orbits"])
    for orbit in data["orbits"]:
        assert set(orbit) == {"representative", "size", "stabilizer_order"}
