"""Law deciders, witnesses, and the model container."""

from itertools import product as iproduct

import pytest
from conftest import models
from hypothesis import given, settings

from gag import (
    GammaGroupoid,
    all_models,
    axiom_profile,
    is_ag_star_star,
    is_left_invertive,
    is_medial,
    is_paramedial,
    left_identities,
)

# Left projection x*y = x breaks the left invertive law at n >= 2;
# a constant table satisfies every law here.
LEFT_PROJ = GammaGroupoid.from_tables([[[0, 0], [1, 1]]])
CONSTANT = GammaGroupoid.from_tables([[[0, 0], [0, 0]]])


def test_m5_axiom_profile(m5):
    p = axiom_profile(m5)
    assert p.left_invertive and p.medial and p.ag_star_star and p.paramedial
    assert p.left_identities == (1,)
    assert left_identities(m5) == [1]


def test_m5_profile_json_obj(m5):
    obj = axiom_profile(m5).to_json_obj()
    assert obj == {
        "left-invertive": True,
        "medial": True,
        "ag-star-star": True,
        "paramedial": True,
        "left-identities": [1],
    }


def test_left_projection_fails_left_invertive():
    chk = is_left_invertive(LEFT_PROJ)
    assert not chk
    # (x y) z = x but (z y) x = z, first violation at x=0, z=1
    assert chk.witness == (0, 0, 1, 0, 0)


def test_constant_table_satisfies_all_laws():
    p = axiom_profile(CONSTANT)
    assert p.left_invertive and p.medial and p.ag_star_star and p.paramedial
    assert p.left_identities == ()


def _brute_left_invertive(g):
    # Independent of the decider: collect every violating tuple.
    bad = []
    for x, y, z, a, b in iproduct(
        range(g.n), range(g.n), range(g.n), range(g.m), range(g.m)
    ):
        lhs = g.product(g.product(x, a, y), b, z)
        rhs = g.product(g.product(z, a, y), b, x)
        if lhs != rhs:
            bad.append((x, y, z, a, b))
    return bad


@settings(max_examples=150)
@given(models())
def test_left_invertive_witness_is_least_violation(g):
    chk = is_left_invertive(g)
    bad = _brute_left_invertive(g)
    if chk:
        assert bad == []
    else:
        assert chk.witness == min(bad)


@settings(max_examples=150)
@given(models())
def test_ag_star_star_witness_violates_law(g):
    chk = is_ag_star_star(g)
    if chk:
        for x, y, z, a, b in iproduct(
            range(g.n), range(g.n), range(g.n), range(g.m), range(g.m)
        ):
            assert g.product(x, a, g.product(y, b, z)) == g.product(
                y, a, g.product(x, b, z)
            )
    else:
        x, y, z, a, b = chk.witness
        assert g.product(x, a, g.product(y, b, z)) != g.product(
            y, a, g.product(x, b, z)
        )


@settings(max_examples=150)
@given(models())
def test_paramedial_witness_violates_law(g):
    chk = is_paramedial(g)
    if not chk:
        x, y, l, w, a, b, c = chk.witness
        lhs = g.product(g.product(x, a, y), b, g.product(l, c, w))
        rhs = g.product(g.product(w, a, l), b, g.product(y, c, x))
        assert lhs != rhs


@settings(max_examples=150)
@given(models())
def test_left_invertive_implies_medial(g):
    if is_left_invertive(g):
        assert is_medial(g)


@settings(max_examples=100)
@given(models())
def test_medial_witness_violates_law(g):
    chk = is_medial(g)
    if not chk:
        x, y, l, w, a, b, c = chk.witness
        lhs = g.product(g.product(x, a, y), b, g.product(l, c, w))
        rhs = g.product(g.product(x, a, l), b, g.product(y, c, w))
        assert lhs != rhs


def test_from_tables_product_tables_round_trip(m5):
    nested = m5.tables()
    again = GammaGroupoid.from_tables(
        nested, element_labels=m5.element_labels, gamma_labels=m5.gamma_labels
    )
    assert again == m5
    for x in range(m5.n):
        for y in range(m5.n):
            assert m5.product(x, 0, y) == nested[0][x][y]


def test_flat_layout_matches_product():
    g = GammaGroupoid(2, 2, (0, 1, 1, 0, 1, 0, 0, 1))
    for x in range(2):
        for k in range(2):
            for y in range(2):
                assert g.product(x, k, y) == g.table[(x * 2 + k) * 2 + y]


def test_validation_errors():
    with pytest.raises(ValueError):
        GammaGroupoid(0, 1, ())
    with pytest.raises(ValueError):
        GammaGroupoid(2, 0, ())
    with pytest.raises(ValueError):
        GammaGroupoid(2, 1, (0, 0, 0))
    with pytest.raises(ValueError):
        GammaGroupoid(2, 1, (0, 0, 0, 2))
    with pytest.raises(ValueError):
        GammaGroupoid(2, 1, (0,) * 4, element_labels=("a",))
    with pytest.raises(ValueError):
        GammaGroupoid.from_tables([])
    with pytest.raises(ValueError):
        GammaGroupoid.from_tables([[[0, 0], [0]]])


def test_product_index_errors(m5):
    with pytest.raises(ValueError):
        m5.product(5, 0, 0)
    with pytest.raises(ValueError):
        m5.product(0, 1, 0)
    with pytest.raises(ValueError):
        m5.product(0, 0, -1)


def test_all_models_order_and_count():
    seen = list(all_models(2, 1))
    assert len(seen) == 16
    assert seen[0].table == (0, 0, 0, 0)
    assert seen[-1].table == (1, 1, 1, 1)
    assert len(set(m.table for m in seen)) == 16


def test_default_labels():
    g = GammaGroupoid(3, 2, (0,) * 18)
    assert g.element_labels == ("a", "b", "c")
    assert g.gamma_labels == ("g0", "g1")
