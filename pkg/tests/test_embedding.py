import pytest

from svcert.embedding import (
    AffinePoint,
    ambient_dim,
    coordinate_osculating_span,
    coordinate_point,
    embed,
    hessian_of_form,
    jet_rows,
    osculating_cone_basis,
    tangent_cone_basis,
)
from svcert.errors import ShapeMismatch
from svcert.exactla import Span, contains
from svcert.multiindex import Format, MultiIndex, coordinate_position, diagonal_index


def test_ambient_dim():
    assert ambient_dim(Format((2,), (2,))) == 5
    assert ambient_dim(Format((1, 2), (1, 1))) == 5
    assert ambient_dim(Format((2,), (6,))) == 27
    assert ambient_dim(Format((5,), (3,))) == 55


def test_embed_examples():
    assert embed(Format((1,), (2,)), AffinePoint.from_coords([(1, 2)])) == [1, 2, 4]
    fmt = Format((1, 1), (1, 1))
    assert embed(fmt, AffinePoint.from_coords([(1, 2), (1, 3)])) == [1, 3, 2, 6]


def test_embed_coordinate_point():
    fmt = Format((2, 1), (2, 3))
    p = coordinate_point(fmt, 1)
    v = embed(fmt, p)
    pos = coordinate_position(fmt)[diagonal_index(fmt, 1)]
    assert v == [int(j == pos) for j in range(ambient_dim(fmt) + 1)]


def test_point_validation():
    with pytest.raises(ValueError):
        AffinePoint(((0, 1),), (0,))
    with pytest.raises(ShapeMismatch):
        embed(Format((2,), (2,)), AffinePoint.from_coords([(1, 2)]))
    assert AffinePoint.from_coords([(1, -7, 3)]).chart == (1,)


def test_osculating_basis_examples():
    fmt = Format((2,), (2,))
    p = AffinePoint.from_coords([(3, -2, 5)])
    T0 = osculating_cone_basis(fmt, p, 0)
    assert T0.rank == 1
    assert contains(T0, Span.from_rows([embed(fmt, p)]))
    assert jet_rows(fmt, p, 0) == [embed(fmt, p)]
    assert tangent_cone_basis(fmt, p).rank == 3
    fmt3 = Format((1,), (3,))
    assert osculating_cone_basis(fmt3, coordinate_point(fmt3, 0), 2).rank == 3


def test_osculating_filtration():
    fmt = Format((1, 2), (2, 2))
    p = AffinePoint.from_coords([(2, -3), (1, 4, -2)])
    spans = [osculating_cone_basis(fmt, p, s) for s in range(5)]
    for lo, hi in zip(spans, spans[1:]):
        assert contains(hi, lo)
    assert spans[-1].rank == ambient_dim(fmt) + 1


def test_coordinate_osculating_span_examples():
    fmt = Format((1,), (2,))
    center = (MultiIndex((0, 0), 1, 2),)
    assert coordinate_osculating_span(fmt, center, 0).rank == 1
    S = coordinate_osculating_span(fmt, center, 1)
    assert S.rank == 2
    assert all(row[2] == 0 for row in S.rows)
    big = Format((2, 1), (2, 2))
    assert coordinate_osculating_span(big, diagonal_index(big, 0), 4).rank == ambient_dim(big) + 1
    with pytest.raises(ValueError):
        coordinate_osculating_span(fmt, (MultiIndex((0, 1), 1, 2),), 1)


def test_hessian_examples():
    fmt = Format((1,), (2,))
    p = coordinate_point(fmt, 0)
    assert hessian_of_form(fmt, p, [1, 0, 0]) == [[0]]
    assert hessian_of_form(fmt, p, [0, 0, 1]) == [[2]]
    fmt2 = Format((1, 1), (1, 1))
    p2 = AffinePoint(((1, 0), (1, 0)), (0, 0))
    assert hessian_of_form(fmt2, p2, [0, 0, 0, 1]) == [[0, 1], [1, 0]]


def test_hessian_is_symmetric_and_chart_aware():
    fmt = Format((2,), (3,))
    p = AffinePoint.from_coords([(2, 5, -1)])
    form = [((7 * j) % 5) - 2 for j in range(ambient_dim(fmt) + 1)]
    H = hessian_of_form(fmt, p, form)
    assert H == [list(r) for r in zip(*H)]
    with pytest.raises(ShapeMismatch):
        hessian_of_form(fmt, p, [1, 2])
