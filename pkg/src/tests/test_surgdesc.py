import random

import pytest

from src.checks.published_tables import TABLE_1, TABLE_2
from src.topology import surgdesc
from src.topology.contfrac import Slope
from src.topology.surgdesc import (
    AbelianGroup,
    RationalSurgeryDiagram,
    Variant,
    a_coefficient,
    closed_form_order,
    h1_group,
    h1_order,
    h1_presentation,
    lashing_slope,
    lashing_matrix,
    verify_transcription,
)
from src.topology.traintrack import LashingParams, lambda_alt


def test_transcription_self_test_passes():
    verify_transcription()


def test_a_coefficient_closed_form():
    assert a_coefficient(1, 1, 1) == Slope(3, 2)
    assert a_coefficient(0, 1, 0, Variant.S1XS2) == Slope(1, 2)


def test_diagram_validation():
    with pytest.raises(ValueError):
        RationalSurgeryDiagram((Slope(1, 1), Slope(1, 1)), ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        RationalSurgeryDiagram((Slope(1, 1),), ((1,),))
    with pytest.raises(ValueError):
        RationalSurgeryDiagram((Slope(1, 1),), ((0, 0), (0, 0)))


def test_abelian_group_rendering():
    assert str(AbelianGroup(0, (23, 23))) == "Z/23 + Z/23"
    assert str(AbelianGroup(1, ())) == "Z"
    assert str(AbelianGroup(0, ())) == "0"
    assert AbelianGroup(1, (2,)).order is None
    with pytest.raises(ValueError):
        AbelianGroup(0, (3, 2))


def test_lens_space_and_hopf_link():
    lens = RationalSurgeryDiagram((Slope(5, 2),), ((0,),))
    assert str(h1_group(lens)) == "Z/5"
    hopf = RationalSurgeryDiagram((Slope(0, 1), Slope(0, 1)), ((0, 1), (1, 0)))
    assert h1_order(hopf) == 1
    assert str(h1_group(hopf)) == "0"
    unknot_zero = RationalSurgeryDiagram((Slope(0, 1),), ((0,),))
    assert h1_order(unknot_zero) is None
    assert h1_group(unknot_zero).free_rank == 1


def test_infinite_coefficient_gives_unit_row():
    d = RationalSurgeryDiagram((Slope.infinity(), Slope(2, 1)), ((0, 1), (1, 0)))
    assert h1_presentation(d) == ((1, 0), (1, 2))
    assert str(h1_group(d)) == "Z/2"


def test_basic_family_orders():
    assert h1_order(lashing_matrix(1, 1, 1, 1, 1, 0, Slope(0, 1))) == 1156
    assert h1_order(lashing_matrix(1, 1, 1, 1, 2, 0, 0)) == 2331


def test_vanishing_order_is_infinite():
    assert h1_order(lashing_matrix(1, 1, 1, 1, 1, 0, -1156)) is None


def test_closed_form_values():
    assert closed_form_order(1, 0, 0) == 1156
    assert closed_form_order(2, 0, 0) == 2331
    assert closed_form_order(0, 0, 0) == 389


def test_negative_parameters_rejected():
    with pytest.raises(ValueError):
        lashing_matrix(-1, 1, 1, 1, 1, 0, 0)


def test_lashing_slope():
    assert lashing_slope(1) == Slope(1, 1)
    assert lashing_slope(3) == Slope(1, 3)
    assert lashing_slope(2, 3) == Slope(7, 2)


def test_closed_form_grid():
    for b1 in range(6):
        for b2 in range(6):
            for r in range(-10, 11):
                order = h1_order(lashing_matrix(1, 1, 1, 1, b1, b2, r))
                assert order == closed_form_order(b1, b2, r), (b1, b2, r)


@pytest.mark.parametrize("key", sorted(TABLE_1))
def test_dual_route_on_table_rows(key):
    a3, a2, a1, m, b1 = key
    expected = TABLE_1[key].order
    assert lambda_alt(LashingParams((a1, a2, a3), m, 1, b1)) == expected
    assert h1_order(lashing_matrix(a1, a2, a3, m, b1, 0, 0)) == expected


def test_dual_route_along_b1():
    for n in range(1, 51):
        assert h1_order(lashing_matrix(1, 1, 1, 1, n, 0, 0)) == 389 + 563 * n + 204 * n ** 2


@pytest.mark.parametrize("key", sorted(TABLE_2))
def test_s1xs2_groups(key):
    a3, a2, a1, m, b1 = key
    group = h1_group(lashing_matrix(a1, a2, a3, m, b1, 0, 0, Variant.S1XS2))
    entry = TABLE_2[key]
    assert group.torsion == entry.torsion
    assert group.order == entry.braid_index ** 2


def test_h1_group_is_permutation_invariant():
    rng = random.Random(5)
    d = lashing_matrix(1, 1, 0, 1, 2, 0, 0, Variant.S1XS2)
    reference = h1_group(d)
    for _ in range(5):
        order = list(range(d.size))
        rng.shuffle(order)
        assert h1_group(d.permuted(order)) == reference


def test_group_order_agrees_with_determinant():
    for key in TABLE_1:
        a3, a2, a1, m, b1 = key
        d = lashing_matrix(a1, a2, a3, m, b1, 0, 0)
        assert h1_group(d).order == h1_order(d)


def test_export_and_load(tmp_path):
    d = lashing_matrix(1, 1, 1, 1, 1, 0, 0)
    path = tmp_path / "k11111.diag"
    surgdesc.export(d, str(path), ["essai"])
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[0] == "# essai"
    assert lines[1] == "16"
    assert lines[2].startswith("1 3/2 lk: 0 0 0 -1")
    assert surgdesc.load(str(path)) == d


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        surgdesc.load(str(tmp_path / "absent.diag"))
