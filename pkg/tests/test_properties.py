from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from svcert.bounds import h_m, one_s_threshold, one_wd_classify
from svcert.contact import INCONCLUSIVE, NOT_TWD, hs_twd_check, twd_check, wd_check
from svcert.embedding import AffinePoint, ambient_dim, embed, osculating_cone_basis
from svcert.exactla import Span, contains, kernel_basis, mat_vec, rank, transpose
from svcert.multiindex import Format, MultiIndex, distance
from svcert.terracini import NON_DEFECTIVE, secant_defect_check

small = settings(max_examples=40, deadline=None,
                 suppress_health_check=[HealthCheck.too_slow])


@st.composite
def indices(draw, count=3):
    n = draw(st.integers(1, 4))
    d = draw(st.integers(1, 5))
    entry = st.lists(st.integers(0, n), min_size=d, max_size=d)
    return [MultiIndex.of(draw(entry), n) for _ in range(count)]


@st.composite
def matrices(draw, max_rows=6, max_cols=7):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    row = st.lists(st.integers(-4, 4), min_size=cols, max_size=cols)
    return draw(st.lists(row, min_size=rows, max_size=rows)), cols


@st.composite
def formats(draw, max_r=2, max_n=2, max_d=3):
    r = draw(st.integers(1, max_r))
    return Format(tuple(draw(st.integers(1, max_n)) for _ in range(r)),
                  tuple(draw(st.integers(1, max_d)) for _ in range(r)))


@st.composite
def points(draw, fmt):
    coords = []
    for n in fmt.n:
        v = draw(st.lists(st.integers(-9, 9), min_size=n + 1, max_size=n + 1))
        if not any(v):
            v[0] = 1
        coords.append(v)
    return AffinePoint.from_coords(coords)


@given(indices())
def test_distance_is_a_metric(triple):
    I, J, K = triple
    assert (distance(I, J) == 0) == (I == J)
    assert distance(I, J) == distance(J, I)
    assert 0 <= distance(I, J) <= I.d
    assert distance(I, K) <= distance(I, J) + distance(J, K)


# m = n_1 + 1 >= 2 always; for m = 1 the value is a bit count and not monotone
@given(st.integers(2, 6), st.integers(0, 300))
def test_h_m_monotone_in_k(m, k):
    assert h_m(m, k) <= h_m(m, k + 1)


@given(st.integers(0, 300))
def test_h_1_counts_bits(k):
    assert h_m(1, k) == bin((k + 1) >> 1).count("1")


@given(st.integers(1, 6), st.integers(0, 300))
def test_h_m_monotone_in_m(m, k):
    assert h_m(m, k) <= h_m(m + 1, k)


@given(st.integers(1, 6), st.integers(1, 10))
def test_h_m_on_powers_of_two(m, t):
    assert h_m(m, 2 ** t - 1) == m ** (t - 1)
    assert h_m(m, 2 ** t) == m ** (t - 1)


@given(matrices())
def test_rank_of_transpose(mc):
    M, cols = mc
    assert rank(M, cols) == rank(transpose(M, cols), len(M))


@given(matrices(), st.integers(-5, 5).filter(bool), st.randoms(use_true_random=False))
def test_rank_invariant_under_scaling_and_permutation(mc, c, rnd):
    M, cols = mc
    r = rank(M, cols)
    scaled = [[c * x for x in row] for row in M]
    perm = list(range(cols))
    rnd.shuffle(perm)
    shuffled = [[row[j] for j in perm] for row in M[::-1]]
    assert rank(scaled, cols) == r == rank(shuffled, cols)


@given(matrices())
def test_kernel_and_annihilator_round_trip(mc):
    M, cols = mc
    r = rank(M, cols)
    K = kernel_basis(M, cols)
    assert len(K) == cols - r
    assert all(not any(mat_vec(M, v)) for v in K)
    S = Span.from_rows(M, cols)
    back = Span.from_annihilator(S.annihilator, cols)
    assert contains(S, back) and contains(back, S)


@small
@given(st.data())
def test_embedding_is_multihomogeneous(data):
    fmt = data.draw(formats(max_r=3, max_n=3))
    p = data.draw(points(fmt))
    i = data.draw(st.integers(0, fmt.r - 1))
    lam = data.draw(st.integers(-4, 4).filter(bool))
    coords = [list(v) for v in p.coords]
    coords[i] = [lam * x for x in coords[i]]
    assert embed(fmt, AffinePoint.from_coords(coords)) == \
        [lam ** fmt.d[i] * x for x in embed(fmt, p)]


@small
@given(st.data())
def test_osculating_span_independent_of_chart(data):
    fmt = data.draw(formats())
    p = data.draw(points(fmt))
    s = data.draw(st.integers(0, 3))
    charts = [data.draw(st.sampled_from([a for a, x in enumerate(v) if x])) for v in p.coords]
    q = AffinePoint.from_coords(p.coords, charts)
    A, B = osculating_cone_basis(fmt, p, s), osculating_cone_basis(fmt, q, s)
    assert contains(A, B) and contains(B, A)


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 2), st.integers(1, 3), st.integers(0, 2 ** 16))
def test_threshold_pair_sharp(n, d, seed):
    fmt = Format((1, n), (d, 1))
    thr = one_s_threshold(fmt).bound
    N = ambient_dim(fmt)
    if fmt.dim <= thr < N:
        assert hs_twd_check(fmt, 1, thr, seed=seed).status == NOT_TWD
    if thr + 1 < N:
        r = hs_twd_check(fmt, 1, thr + 1, seed=seed)
        assert r.status == INCONCLUSIVE
        assert all(k == 1 for a in r.history for k in a.kernel_dims)


@settings(max_examples=15, deadline=None)
@given(formats(max_n=2, max_d=2), st.integers(1, 3), st.integers(0, 2 ** 16))
def test_certified_twd_implies_certified_secant(fmt, h, seed):
    if h * (fmt.dim + 1) > ambient_dim(fmt):
        return
    if twd_check(fmt, h, seed=seed).status == NOT_TWD:
        assert secant_defect_check(fmt, h, seed=seed).status == NON_DEFECTIVE


@settings(max_examples=25, deadline=None)
@given(formats(max_n=3, max_d=3), st.integers(0, 2 ** 16))
def test_one_wd_classification_matches_contact(fmt, seed):
    if fmt.r == 1 and fmt.d[0] == 1:
        return
    r = wd_check(fmt, 1, seed=seed)
    if one_wd_classify(fmt):
        assert r.status == INCONCLUSIVE and min(r.kernel_dims) >= 1
    else:
        assert r.status == NOT_TWD
