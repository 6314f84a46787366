"""Reproduction suite for the published Segre-Veronese statements.

Each row recomputes one claim with the certification engine and compares the
verdict with the published one.  Rows are grouped; ``verify-paper --only``
selects groups or single rows by id.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bounds, contact, terracini
from .certificate import contact_certificate, secant_certificate
from .embedding import (
    AffinePoint,
    ambient_dim,
    coordinate_osculating_span,
    coordinate_point,
    embed,
    osculating_cone_basis,
)
from .exactla import Span, contains, kernel_basis, mat_vec, rank, transpose
from .multiindex import Format, MultiIndex, diagonal_index, distance


@dataclass
class RowResult:
    row_id: str
    group: str
    expected: str
    observed: str
    passed: bool
    certificates: list = field(default_factory=list)


def _params(retries, box):
    return {"retries": retries, "box": box}


def _every_kernel_positive(report) -> bool:
    return all(k >= 1 for a in report.history for k in a.kernel_dims)


def veronese_wd(n, d, h, seed, retries, box):
    fmt = Format((n,), (d,))
    v = terracini.secant_defect_check(fmt, h, seed, retries, box)
    r = contact.wd_check(fmt, h, seed, retries, box)
    ok = (v.status == terracini.NON_DEFECTIVE and r.status == contact.INCONCLUSIVE
          and r.attempts == retries and _every_kernel_positive(r))
    observed = (f"{v.status}; wd kernels per attempt "
                f"{[a.kernel_dims for a in r.history]}")
    certs = [secant_certificate(fmt, h, seed, v, _params(retries, box)),
             contact_certificate(fmt, h, seed, r, _params(retries, box))]
    return ok, f"NonDefectiveCertified; every wd kernel >= 1", observed, certs


def one_wd_class(n, d, seed, retries, box):
    fmt = Format(n, d)
    predicted = bounds.one_wd_classify(fmt)
    r = contact.wd_check(fmt, 1, seed, retries, box)
    if predicted:
        ok = r.status == contact.INCONCLUSIVE and _every_kernel_positive(r)
    else:
        ok = r.status == contact.NOT_TWD
    expected = "1-wd (kernel >= 1 always)" if predicted else "not 1-wd (certified)"
    observed = f"{r.status} kernels {[a.kernel_dims for a in r.history]}"
    return ok, expected, observed, [contact_certificate(fmt, 1, seed, r, _params(retries, box))]


def one_s_threshold(n, d, seed, retries, box):
    fmt = Format((1, n), (d, 1))
    threshold = d * (n + 1)
    report = bounds.one_s_threshold(fmt)
    ok = report.bound == threshold and report.semantics == "iff"
    N = ambient_dim(fmt)
    bad, certs = [], []
    for s in range(fmt.dim, N):
        r = contact.hs_twd_check(fmt, 1, s, seed, retries, box)
        certs.append(contact_certificate(fmt, 1, seed, r, _params(retries, box)))
        if s <= threshold:
            good = r.status == contact.NOT_TWD
        else:
            good = (r.status == contact.INCONCLUSIVE and all(
                1 <= k <= s - threshold for a in r.history for k in a.kernel_dims))
        if not good:
            bad.append(s)
    ok = ok and not bad
    expected = f"certified for s <= {threshold}, 1 <= kernel <= s-{threshold} above, s < {N}"
    observed = f"threshold {report.bound}; mismatching s: {bad or 'none'}"
    return ok, expected, observed, certs


def bound_pipeline(n, d, expected_h, seed, retries, box):
    fmt = Format(n, d)
    sf, _ = bounds.sorted_format(fmt)
    dmin = min(sf.d)
    branch2 = sf.d[0] == dmin and all(x >= dmin + 2 for x in sf.d[1:])
    order = dmin if branch2 else dmin - 1
    orders = [order] * (sf.n[0] + 1)
    r = contact.osculating_hypothesis_check(fmt, orders, None, seed, retries, box)
    wd = bounds.wd_bound(fmt)
    ok = (r.status == contact.NOT_TWD and all(k == 0 for k in r.kernel_dims)
          and r.certified_h == expected_h == wd.bound)
    observed = (f"orders {orders}; {r.status}; kernels {r.kernel_dims}; "
                f"certified_h {r.certified_h}; bounds {wd.bound} ({wd.branch})")
    return ok, f"zero kernels; certified_h = bounds = {expected_h}", observed, [
        contact_certificate(fmt, None, seed, r, {**_params(retries, box), "orders": orders})]


def linear_factor_twd(seed, retries, box):
    fmt = Format((1, 2), (1, 7))
    r = contact.twd_check(fmt, 3, seed, retries, box)
    b = bounds.twd_bound_linear_factor(fmt)
    ok = r.status == contact.NOT_TWD and b.bound == 3
    return ok, "NotTWDCertified at h=3; bound 3", f"{r.status}; bound {b.bound}", [
        contact_certificate(fmt, 3, seed, r, _params(retries, box))]


def defect_sanity(n, d, h, status, defect, seed, retries, box):
    fmt = Format(n, d)
    v = terracini.secant_defect_check(fmt, h, seed, retries, box)
    ok = v.status == status and v.defect == defect
    return ok, f"{status} defect {defect}", f"{v.status} defect {v.defect}", [
        secant_certificate(fmt, h, seed, v, _params(retries, box))]


def small_formats():
    for r in (1, 2):
        for n in itertools.product((1, 2), repeat=r):
            for d in itertools.product((1, 2, 3), repeat=r):
                yield Format(n, d)


def osc_oracle(seed, retries, box):
    checked, failures = 0, []
    for fmt in small_formats():
        for i in range(min(fmt.n) + 1):
            p = coordinate_point(fmt, i)
            center = diagonal_index(fmt, i)
            for s in range(fmt.total_degree + 1):
                A = osculating_cone_basis(fmt, p, s)
                B = coordinate_osculating_span(fmt, center, s)
                checked += 1
                if not (contains(A, B) and contains(B, A)):
                    failures.append(f"{fmt} i={i} s={s}")
    return not failures, "0 failures", f"{checked} spans compared, {len(failures)} failures", []


def _random_index(rng, n, d):
    return MultiIndex.of([rng.randint(0, n) for _ in range(d)], n)


def prop_metric(seed, retries, box, triples=10_000):
    rng = random.Random(seed)
    bad = 0
    for _ in range(triples):
        n, d = rng.randint(1, 4), rng.randint(1, 4)
        I, J, K = (_random_index(rng, n, d) for _ in range(3))
        dij, dji = distance(I, J), distance(J, I)
        if (dij == 0) != (I == J) or dij != dji or not 0 <= dij <= d:
            bad += 1
        elif distance(I, K) > dij + distance(J, K):
            bad += 1
    return bad == 0, "0 failures", f"{triples} triples, {bad} failures", []


def prop_h_m(seed, retries, box):
    bad = [(m, t) for m in range(1, 7) for t in range(1, 9)
           if bounds.h_m(m, 2 ** t - 1) != m ** (t - 1)]
    return not bad, "h_m(m, 2^t-1) = m^(t-1)", f"{48 - len(bad)}/48 identities hold", []


def random_matrix(rng, max_rows=8, max_cols=12, entry=5):
    rows, cols = rng.randint(1, max_rows), rng.randint(1, max_cols)
    if rng.random() < 0.5:
        k = rng.randint(0, min(rows, cols))
        A = [[rng.randint(-entry, entry) for _ in range(k)] for _ in range(rows)]
        B = [[rng.randint(-entry, entry) for _ in range(cols)] for _ in range(k)]
        M = [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(cols)] for i in range(rows)]
    else:
        M = [[rng.randint(-entry, entry) for _ in range(cols)] for _ in range(rows)]
    return M, cols


def linalg_round_trip(M, cols) -> bool:
    r = rank(M, cols)
    if r != rank(transpose(M, cols), len(M)):
        return False
    K = kernel_basis(M, cols)
    if len(K) != cols - r or any(any(mat_vec(M, v)) for v in K):
        return False
    if K and rank(K, cols) != len(K):
        return False
    S = Span.from_rows(M, cols)
    back = Span.from_annihilator(S.annihilator, cols)
    return back.rank == r and contains(S, back) and contains(back, S)


def prop_linalg(seed, retries, box, count=1000):
    rng = random.Random(seed)
    bad = sum(not linalg_round_trip(*random_matrix(rng)) for _ in range(count))
    return bad == 0, "0 failures", f"{count} matrices, {bad} failures", []


def prop_multihomogeneous(seed, retries, box, count=200):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        r = rng.randint(1, 3)
        fmt = Format(tuple(rng.randint(1, 3) for _ in range(r)),
                     tuple(rng.randint(1, 3) for _ in range(r)))
        p = terracini.random_point(fmt, rng, 9)
        i = rng.randrange(r)
        lam = rng.choice([x for x in range(-3, 4) if x])
        coords = [list(v) for v in p.coords]
        coords[i] = [lam * x for x in coords[i]]
        scaled = embed(fmt, AffinePoint.from_coords(coords))
        if scaled != [lam ** fmt.d[i] * x for x in embed(fmt, p)]:
            bad += 1
    return bad == 0, "0 failures", f"{count} scalings, {bad} failures", []


def suite_rows():
    """``(row_id, group, function, args)`` for every row, in output order."""
    rows = []
    for n, d, h in ((2, 6, 9), (3, 4, 8), (5, 3, 9)):
        rows.append((f"veronese-wd-n{n}-d{d}-h{h}", "veronese-wd", veronese_wd, (n, d, h)))
    for n in itertools.product((1, 2, 3), repeat=2):
        for d in itertools.product((1, 2, 3), repeat=2):
            rows.append((f"one-wd-n{n[0]},{n[1]}-d{d[0]},{d[1]}", "one-wd-class",
                         one_wd_class, (n, d)))
    for n, d in ((2, 2), (3, 2), (2, 3)):
        rows.append((f"one-s-threshold-n{n}-d{d}", "one-s-threshold", one_s_threshold, (n, d)))
    rows.append(("bound-pipeline-n2,2-d3,3", "bound-pipeline", bound_pipeline,
                 ((2, 2), (3, 3), 3)))
    rows.append(("bound-pipeline-n1,1-d2,4", "bound-pipeline", bound_pipeline,
                 ((1, 1), (2, 4), 2)))
    rows.append(("linear-factor-twd-n1,2-d1,7", "linear-factor-twd", linear_factor_twd, ()))
    rows.append(("defect-sanity-veronese-surface", "defect-sanity", defect_sanity,
                 ((2,), (2,), 2, terracini.DEFECT_SUGGESTED, 1)))
    rows.append(("defect-sanity-segre-p1xp1", "defect-sanity", defect_sanity,
                 ((1, 1), (1, 1), 2, terracini.NON_DEFECTIVE, 0)))
    rows.append(("osc-oracle", "osc-oracle", osc_oracle, ()))
    rows.append(("prop-metric", "properties", prop_metric, ()))
    rows.append(("prop-h_m", "properties", prop_h_m, ()))
    rows.append(("prop-linalg", "properties", prop_linalg, ()))
    rows.append(("prop-multihomogeneous", "properties", prop_multihomogeneous, ()))
    return rows


GROUPS = tuple(dict.fromkeys(g for _, g, _, _ in suite_rows()))


def select_rows(only=None):
    rows = suite_rows()
    if not only:
        return rows
    wanted = [w.strip() for w in only.split(",") if w.strip()]
    unknown = [w for w in wanted if w not in GROUPS and not any(r[0] == w for r in rows)]
    if unknown:
        raise ValueError(f"unknown group or row id: {', '.join(unknown)}")
    return [r for r in rows if r[1] in wanted or r[0] in wanted]


def run_row(row, seed, retries, box) -> RowResult:
    row_id, group, func, args = row
    ok, expected, observed, certs = func(*args, seed=seed, retries=retries, box=box)
    return RowResult(row_id, group, expected, observed, ok, certs)


def run_suite(seed=0, retries=terracini.DEFAULT_RETRIES, box=terracini.DEFAULT_BOX,
              only=None, jobs=1, out_dir=None) -> list[RowResult]:
    rows = select_rows(only)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(run_row, rows, *zip(*[(seed, retries, box)] * len(rows))))
    else:
        results = [run_row(r, seed, retries, box) for r in rows]
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        for res in results:
            for k, cert in enumerate(res.certificates):
                path = os.path.join(out_dir, f"{res.row_id}-{k}.json")
                with open(path, "w") as fh:
                    fh.write(cert.to_json())
    return results


def format_table(results) -> str:
    width = max(len(r.row_id) for r in results)
    lines = [f"{'row'.ljust(width)}  result  expected | observed"]
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.row_id.ljust(width)}  {flag}    {r.expected} | {r.observed}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} rows passed")
    return "\n".join(lines)
