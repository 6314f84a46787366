import random

import pytest

from svcert.contact import (
    INCONCLUSIVE,
    NOT_TWD,
    contact_kernel_dims,
    hs_twd_check,
    local_contact,
    osculating_hypothesis_check,
    random_containing_space,
    tangent_span,
    twd_check,
    wd_check,
)
from svcert.embedding import ambient_dim, coordinate_point, osculating_cone_basis
from svcert.errors import InvalidDimension, NotTangent, SpanFillsSpace
from svcert.exactla import contains
from svcert.multiindex import Format
from svcert.terracini import sample_config

P1xP2_21 = Format((1, 2), (2, 1))


def test_tangent_span_examples():
    fmt = Format((1, 2), (2, 2))
    cfg = sample_config(fmt, 1, 3)
    T = tangent_span(fmt, cfg)
    S = osculating_cone_basis(fmt, cfg.points[0], 1)
    assert contains(T, S) and contains(S, T)
    cubic = Format((1,), (3,))
    assert tangent_span(cubic, sample_config(cubic, 2, 0)).rank == 4


@pytest.mark.slow
def test_tangent_span_plane_sextics():
    fmt = Format((2,), (6,))
    assert tangent_span(fmt, sample_config(fmt, 9, 0)).rank == 27


def test_random_containing_space_edges():
    fmt = Format((2,), (3,))
    T = tangent_span(fmt, sample_config(fmt, 2, 1))
    N = ambient_dim(fmt)
    assert random_containing_space(T, N, 0).annihilator == []
    same = random_containing_space(T, T.rank - 1, 0)
    assert contains(same, T) and contains(T, same)
    H = random_containing_space(T, N - 1, 0)
    assert len(H.annihilator) == 1 and contains(H, T)
    Pi = random_containing_space(T, T.rank + 1, 5)
    assert Pi.rank == T.rank + 2 and contains(Pi, T)
    for s in (T.rank - 2, N + 1):
        with pytest.raises(InvalidDimension):
            random_containing_space(T, s, 0)


def test_random_containing_space_deterministic():
    fmt = Format((1, 1), (2, 2))
    T = tangent_span(fmt, sample_config(fmt, 1, 0))
    a = random_containing_space(T, 5, 12).annihilator
    b = random_containing_space(T, 5, random.Random(12)).annihilator
    assert a == b


def test_contact_kernel_dims_threshold_pair():
    cfg = sample_config(P1xP2_21, 1, 0)
    T = tangent_span(P1xP2_21, cfg)
    assert contact_kernel_dims(P1xP2_21, cfg, random_containing_space(T, 6, 0).annihilator) == [0]
    assert contact_kernel_dims(P1xP2_21, cfg, random_containing_space(T, 7, 0).annihilator) == [1]


def test_local_contact_rejects_non_tangent_form():
    fmt = Format((1,), (2,))
    with pytest.raises(NotTangent):
        local_contact(fmt, coordinate_point(fmt, 0), [[1, 0, 0]])
    with pytest.raises(NotTangent):
        local_contact(fmt, coordinate_point(fmt, 0), [[0, 1, 0]])
    c = local_contact(fmt, coordinate_point(fmt, 0), [[0, 0, 1]])
    assert c.isolated and c.bound == 0


def test_hs_twd_examples():
    assert hs_twd_check(P1xP2_21, 1, 6).status == NOT_TWD
    r = hs_twd_check(Format((1, 2), (1, 1)), 1, 4)
    assert r.status == INCONCLUSIVE and r.kernel_dims == [1] and r.attempts == 3
    for fmt in (Format((2,), (3,)), Format((1, 1), (2, 1))):
        assert hs_twd_check(fmt, 1, fmt.dim).status == NOT_TWD


def test_hs_twd_rejects_invalid_s():
    N = ambient_dim(P1xP2_21)
    for s in (N, N + 1, 2):
        with pytest.raises(InvalidDimension):
            hs_twd_check(P1xP2_21, 1, s)


def test_wd_examples():
    assert wd_check(Format((2,), (2,)), 1).status == NOT_TWD
    r = wd_check(Format((1, 2), (1, 1)), 1)
    assert r.status == INCONCLUSIVE and r.kernel_dims == [1]
    assert all(a.kernel_dims == [1] for a in r.history)


def test_wd_rejects_filling_span():
    with pytest.raises(SpanFillsSpace):
        wd_check(Format((1,), (3,)), 2)


@pytest.mark.slow
def test_wd_quartic_threefolds():
    r = wd_check(Format((3,), (4,)), 8)
    assert r.status == INCONCLUSIVE
    assert all(k >= 1 for a in r.history for k in a.kernel_dims)


def test_twd_examples():
    assert twd_check(Format((1, 2), (1, 7)), 3).status == NOT_TWD
    for fmt in (Format((2,), (2,)), Format((1, 1), (1, 2)), Format((2, 1), (3, 2))):
        assert twd_check(fmt, 1).status == NOT_TWD
    r = twd_check(Format((2,), (2,)), 2)
    assert r.status == INCONCLUSIVE and min(r.kernel_dims) >= 1


def test_osc_examples():
    r = osculating_hypothesis_check(Format((2, 2), (3, 3)), [2, 2, 2])
    assert r.status == NOT_TWD and r.kernel_dims == [0, 0, 0] and r.certified_h == 3
    r = osculating_hypothesis_check(Format((1, 1), (2, 4)), [2, 2])
    assert r.status == NOT_TWD and r.kernel_dims == [0, 0] and r.certified_h == 2


def test_osc_order_one_matches_twd():
    fmt = Format((1, 2), (2, 2))
    r = osculating_hypothesis_check(fmt, [1], fmt.dim, max_order=0)
    assert r.status == twd_check(fmt, 1).status == NOT_TWD
    assert r.certified_h == 1


def test_osc_coordinate_placement():
    r = osculating_hypothesis_check(Format((1, 1), (2, 4)), [2, 2], placement="coordinate")
    assert r.status == NOT_TWD
    with pytest.raises(ValueError):
        osculating_hypothesis_check(Format((1, 1), (2, 4)), [2, 2, 2], placement="coordinate")


def test_osc_needs_higher_order_test():
    fmt = Format((2, 2), (3, 3))
    r = osculating_hypothesis_check(fmt, [2, 2, 2], max_order=0)
    assert r.status == INCONCLUSIVE
    assert r.hessian_kernel_dims == [4, 4, 4]


def test_osc_rejects_bad_input():
    fmt = Format((1, 1), (2, 4))
    with pytest.raises(ValueError):
        osculating_hypothesis_check(fmt, [])
    with pytest.raises(ValueError):
        osculating_hypothesis_check(fmt, [2, 0])
    with pytest.raises(InvalidDimension):
        osculating_hypothesis_check(fmt, [2, 2], s=ambient_dim(fmt))


def test_reports_are_seed_deterministic():
    a = hs_twd_check(P1xP2_21, 1, 7, seed=3)
    b = hs_twd_check(P1xP2_21, 1, 7, seed=3)
    assert a == b
