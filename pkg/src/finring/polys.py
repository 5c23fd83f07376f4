"""Polynomials over finite rings: content ideals and Gaussian certification.

A polynomial is Gaussian when c(fg) = c(f)·c(g) for every g, where c(·) is
the ideal generated by the coefficients.  Exact certification uses three
sound structural rules; everything else is settled by bounded exhaustive
search whose verdicts carry their bound.  Searches run vectorised over the
ring's ideal lattice: each coefficient tuple maps to the lattice id of its
content, so comparing millions of candidate products stays cheap.

Polynomial enumeration order (pinned; witnesses in reports depend on it):
by degree ascending, then lexicographically on the coefficient tuple read
from the leading coefficient down to the constant, leading coefficient
nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError, ConsistencyError, RingBuildError
from .ideals import (Ideal, content_calculus, element_units_guarded,
                     ideal_generated_by, ideal_product, is_local)
from .rings import FiniteRing

_PAIR_CHUNK = 1 << 18


@dataclass(frozen=True)
class RingPoly:
    """Polynomial as a trimmed low-degree-first coefficient tuple."""

    ring: FiniteRing
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def literals(self) -> list:
        return [self.ring.decode_literal(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"<RingPoly {self.literals()} over {self.ring.name}>"


def make_poly(ring: FiniteRing, coeffs) -> RingPoly:
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == ring.zero:
        cs.pop()
    return RingPoly(ring, tuple(cs))


def poly_from_literals(ring: FiniteRing, literals) -> RingPoly:
    return make_poly(ring, [ring.encode_literal(l) for l in literals])


def poly_mul(f: RingPoly, g: RingPoly) -> RingPoly:
    if f.ring is not g.ring:
        raise RingBuildError("polynomial operands belong to different rings")
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return RingPoly(ring, ())
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return make_poly(ring, out)


def content(f: RingPoly) -> Ideal:
    return ideal_generated_by(f.ring, f.coeffs)


def poly_count(n: int, degree: int) -> int:
    """Number of polynomials of exact degree `degree` over an order-n ring."""
    return (n - 1) * n**degree


def cumulative_poly_count(n: int, max_degree: int) -> int:
    return sum(poly_count(n, d) for d in range(max_degree + 1))


def decode_poly_block(n: int, degree: int, start: int, stop: int) -> list[np.ndarray]:
    """Coefficient columns (low-first) for enumeration indices [start, stop).

    The enumeration index of a degree-d polynomial is the base-n value of its
    coefficient tuple read leading-first, offset by n^d, which realises the
    pinned order.
    """
    vals = np.arange(start, stop, dtype=np.int64) + n**degree
    return [(vals // n**j) % n for j in range(degree + 1)]


def poly_at_index(ring: FiniteRing, degree: int, index: int) -> RingPoly:
    cols = decode_poly_block(ring.order, degree, index, index + 1)
    return make_poly(ring, [int(c[0]) for c in cols])


def _convolve_columns(ring: FiniteRing, f_cols, g_cols):
    """Columns of f·g where f_cols / g_cols broadcast against each other."""
    df, dg = len(f_cols) - 1, len(g_cols) - 1
    shape = np.broadcast(f_cols[0], g_cols[0]).shape
    out = []
    for k in range(df + dg + 1):
        acc = None
        for i in range(max(0, k - dg), min(df, k) + 1):
            term = ring.mul_arr(f_cols[i], g_cols[k - i])
            acc = term if acc is None else ring.add_arr(acc, term)
        out.append(np.broadcast_to(acc, shape) if np.ndim(acc) == 0 else acc)
    return out


def gaussian_witness_search(f: RingPoly, degree_bound: int,
                            cap: int = 2_000_000) -> RingPoly | None:
    """First g (pinned order, degree ≤ bound) with c(fg) ≠ c(f)c(g), or None.

    Raises BoundExceededError when the full candidate count exceeds `cap`
    rather than silently truncating; callers wanting a clamped search use
    certify_gaussian.
    """
    ring = f.ring
    n = ring.order
    if degree_bound < 0:
        raise RingBuildError("degree bound must be >= 0")
    total = cumulative_poly_count(n, degree_bound)
    if total > cap:
        raise BoundExceededError(
            f"witness search over {ring.name} needs {total} candidates; cap {cap}")
    if f.is_zero():
        return None
    calc = content_calculus(ring)
    f_cols = [np.int64(c) for c in f.coeffs]
    cf = int(calc.content_ids([np.array([c]) for c in f.coeffs])[0])
    cf_row = calc.prod_row(cf)
    for d in range(degree_bound + 1):
        count = poly_count(n, d)
        for start in range(0, count, _PAIR_CHUNK):
            stop = min(start + _PAIR_CHUNK, count)
            g_cols = decode_poly_block(n, d, start, stop)
            cg = calc.content_ids(g_cols)
            expected = cf_row[cg]
            fg_cols = _convolve_columns(ring, f_cols, g_cols)
            actual = calc.content_ids(fg_cols)
            bad = np.nonzero(actual != expected)[0]
            if bad.size:
                g = poly_at_index(ring, d, start + int(bad[0]))
                _verify_violation(f, g)
                return g
    return None


def _verify_violation(f: RingPoly, g: RingPoly) -> None:
    """Independent bitmask-level re-check of a claimed content violation."""
    lhs = content(poly_mul(f, g))
    rhs = ideal_product(content(f), content(g))
    if lhs.mask == rhs.mask:
        raise ConsistencyError(
            f"claimed Gaussian violation over {f.ring.name} fails re-verification")


@dataclass(frozen=True)
class GaussianVerdict:
    """Outcome of certify_gaussian.

    status: 'certified' | 'refuted' | 'bounded'
    reason (certified only): 'unit_content' | 'zero_polynomial' |
        'local_square_zero_maximal' | 'ring_certified_gaussian'
    witness (refuted only): the violating g
    bound (bounded only): the degree actually exhausted
    """

    status: str
    reason: str | None = None
    witness: RingPoly | None = None
    bound: int | None = None


def has_square_zero_maximal(ring: FiniteRing) -> bool:
    """Local with N² = 0; every polynomial over such a ring is Gaussian.

    Soundness: any polynomial has content R or content inside N (the ring is
    local).  Unit-content polynomials are Gaussian because Dedekind–Mertens
    collapses to c(fg) = c(g).  For f with coefficients in N, a g with unit
    content reduces to the previous case applied to g, while a g with
    coefficients in N gives fg coefficients inside N² = 0, so both sides of
    c(fg) = c(f)c(g) vanish.
    """
    cached = ring._cache.get("sqz_maximal")
    if cached is not None:
        return cached
    maximal = is_local(ring)
    result = False
    if maximal is not None:
        idx = maximal.indices
        prods = ring.mul_arr(idx[:, None], idx[None, :])
        result = bool(np.all(prods == ring.zero))
    ring._cache["sqz_maximal"] = result
    return result


def affordable_degree(n: int, degree_bound: int, cap: int) -> int:
    """Largest d ≤ degree_bound whose cumulative candidate count fits the cap."""
    best = -1
    for d in range(degree_bound + 1):
        if cumulative_poly_count(n, d) <= cap:
            best = d
    return best


def certify_gaussian(f: RingPoly, degree_bound: int = 3, cap: int = 2_000_000,
                     ring_gaussian_certified: bool = False) -> GaussianVerdict:
    """Certify or refute a single polynomial's Gaussian property.

    Sound rules in order: unit content (Dedekind–Mertens gives c(fg) = c(g)),
    zero polynomial, local ring with square-zero maximal ideal, or a
    ring-level Gaussian certificate supplied by the caller.  Otherwise a
    bounded witness search runs at the largest degree affordable under `cap`
    and the verdict carries that bound.
    """
    ring = f.ring
    if f.is_zero():
        return GaussianVerdict("certified", reason="zero_polynomial")
    if content(f).is_unit_ideal():
        return GaussianVerdict("certified", reason="unit_content")
    if has_square_zero_maximal(ring):
        return GaussianVerdict("certified", reason="local_square_zero_maximal")
    if ring_gaussian_certified:
        return GaussianVerdict("certified", reason="ring_certified_gaussian")
    d_eff = affordable_degree(ring.order, degree_bound, cap)
    if d_eff < 0:
        raise BoundExceededError(
            f"cap {cap} does not even cover constant candidates over {ring.name}")
    witness = gaussian_witness_search(f, d_eff, cap)
    if witness is not None:
        return GaussianVerdict("refuted", witness=witness)
    return GaussianVerdict("bounded", bound=d_eff)


def dedekind_mertens_check(f: RingPoly, g: RingPoly) -> bool:
    """c(f)^m · c(fg) = c(f)^(m+1) · c(g) with m = deg g (0 for constants).

    An unconditional content identity; failure indicates a bug in polynomial
    multiplication, content, or ideal products, so the test suites use it as
    an oracle.
    """
    if f.ring is not g.ring:
        raise RingBuildError("polynomial operands belong to different rings")
    m = max(g.degree, 0)
    cf = content(f)
    lhs = content(poly_mul(f, g))
    for _ in range(m):
        lhs = ideal_product(lhs, cf)
    rhs = content(g)
    for _ in range(m + 1):
        rhs = ideal_product(rhs, cf)
    return lhs.mask == rhs.mask


def dedekind_mertens_random_audit(ring: FiniteRing, pairs: int, seed: int,
                                  max_degree: int = 2) -> int:
    """Number of Dedekind–Mertens failures over `pairs` seeded random (f, g).

    Coefficients are drawn uniformly (so actual degrees vary); pairs are
    grouped by the degree of g and checked vectorised over ideal ids.
    """
    rng = np.random.default_rng(seed)
    calc = content_calculus(ring)
    n = ring.order
    width = max_degree + 1
    f_raw = rng.integers(0, n, size=(pairs, width), dtype=np.int64)
    g_raw = rng.integers(0, n, size=(pairs, width), dtype=np.int64)

    def degrees(mat):
        nz = mat != 0
        deg = np.full(pairs, -1, dtype=np.int64)
        for j in range(width):
            deg[nz[:, j]] = j
        return deg

    f_deg, g_deg = degrees(f_raw), degrees(g_raw)
    failures = 0
    for df in range(-1, width):
        for dg in range(-1, width):
            sel = np.nonzero((f_deg == df) & (g_deg == dg))[0]
            if sel.size == 0:
                continue
            m = max(dg, 0)
            f_cols = [f_raw[sel, j] for j in range(max(df, 0) + 1)]
            g_cols = [g_raw[sel, j] for j in range(max(dg, 0) + 1)]
            if df < 0:
                cf = np.full(sel.size, calc.zero_id, dtype=np.int64)
                cfg = cf.copy()
            else:
                cf = calc.content_ids(f_cols)
                if dg < 0:
                    cfg = np.full(sel.size, calc.zero_id, dtype=np.int64)
                else:
                    cfg = calc.content_ids(_convolve_columns(ring, f_cols, g_cols))
            cg = (np.full(sel.size, calc.zero_id, dtype=np.int64) if dg < 0
                  else calc.content_ids(g_cols))
            lhs = cfg
            for _ in range(m):
                lhs = calc.prod_ids(lhs, cf)
            rhs = cg
            for _ in range(m + 1):
                rhs = calc.prod_ids(rhs, cf)
            failures += int(np.count_nonzero(lhs != rhs))
    return failures


def ring_gaussian_refutation_search(ring: FiniteRing, degree_bound: int,
                                    pair_cap: int = 30_000_000):
    """Search all (f, g) pairs up to degree_bound for a content violation.

    Returns (witness_pair_or_None, exhausted_symmetric_degree, pairs_checked).
    Pairs are ordered by total degree, then deg f, then f, then g in the
    pinned polynomial order.  Candidates whose content is the unit ideal are
    skipped: Dedekind–Mertens shows a unit-content factor can never violate
    multiplicativity, so the first violation found equals the unpruned one.
    Raises BoundExceededError if the budget is exhausted before any total
    degree completes.
    """
    n = ring.order
    calc = content_calculus(ring)
    budget = pair_cap

    # candidate tuples per degree, coefficients restricted to non-units
    # (a unit coefficient forces unit content), then filtered to proper content
    nonunits = np.nonzero(~element_units_guarded(ring))[0].astype(np.int64)
    u = nonunits.size
    cands: list[tuple[list[np.ndarray], np.ndarray]] = []
    for d in range(degree_bound + 1):
        total = (u - 1) * u**d if u > 1 else 0
        if total > budget:
            cands.append(None)
            continue
        budget -= total
        cols, cids = [], []
        for start in range(0, total, _PAIR_CHUNK):
            stop = min(start + _PAIR_CHUNK, total)
            vals = np.arange(start, stop, dtype=np.int64) + u**d
            block = [nonunits[(vals // u**j) % u] for j in range(d + 1)]
            ids = calc.content_ids(block)
            keep = ids != calc.unit_id
            cols.append([c[keep] for c in block])
            cids.append(ids[keep])
        if cols:
            merged = [np.concatenate([c[j] for c in cols]) for j in range(d + 1)]
            cands.append((merged, np.concatenate(cids)))
        else:
            cands.append(([np.array([], dtype=np.int64)] * (d + 1),
                          np.array([], dtype=np.int64)))

    pairs_checked = 0
    exhausted_t = -1
    for t in range(2 * degree_bound + 1):
        for df in range(max(0, t - degree_bound), min(degree_bound, t) + 1):
            dg = t - df
            if cands[df] is None or cands[dg] is None:
                return None, _sym_degree(exhausted_t, degree_bound), pairs_checked
            f_cols, f_ids = cands[df]
            g_cols, g_ids = cands[dg]
            nf, ng = f_ids.size, g_ids.size
            if nf == 0 or ng == 0:
                continue
            if nf * ng > budget:
                if exhausted_t < 0:
                    raise BoundExceededError(
                        f"pair search over {ring.name} exceeds cap {pair_cap}")
                return None, _sym_degree(exhausted_t, degree_bound), pairs_checked
            budget -= nf * ng
            block = max(1, _PAIR_CHUNK // max(1, ng))
            for fs in range(0, nf, block):
                fe = min(fs + block, nf)
                fc = [c[fs:fe, None] for c in f_cols]
                gc = [c[None, :] for c in g_cols]
                expected = calc.prod_ids(f_ids[fs:fe, None], g_ids[None, :])
                actual = calc.content_ids(_convolve_columns(ring, fc, gc))
                bad = np.nonzero(actual != expected)
                pairs_checked += (fe - fs) * ng
                if bad[0].size:
                    fi = int(bad[0][0]) + fs  # nonzero is row-major: first pair
                    gi = int(bad[1][0])
                    f = make_poly(ring, [int(c[fi]) for c in f_cols])
                    g = make_poly(ring, [int(c[gi]) for c in g_cols])
                    _verify_violation(f, g)
                    return (f, g), None, pairs_checked
        exhausted_t = t
    return None, _sym_degree(exhausted_t, degree_bound), pairs_checked


def _sym_degree(exhausted_t: int, degree_bound: int) -> int:
    return max(-1, min(degree_bound, exhausted_t // 2))


def gaussian_violation_table(ring: FiniteRing, f_degree: int, g_degree: int):
    """For every nonzero f of degree ≤ f_degree, the first violating g of
    degree ≤ g_degree, reported as (f_degree, f_index, hit) with hit either
    None or (g_degree, g_index).  This is the unpruned exhaustive oracle the
    certificate audits compare against."""
    n = ring.order
    calc = content_calculus(ring)
    results: list[tuple[int, int, tuple[int, int] | None]] = []
    f_block = max(1, 4096 // n)
    for df in range(f_degree + 1):
        f_count = poly_count(n, df)
        for fs in range(0, f_count, f_block):
            fe = min(fs + f_block, f_count)
            rows = fe - fs
            f_cols = decode_poly_block(n, df, fs, fe)
            cf = calc.content_ids(f_cols)
            first: list[tuple[int, int] | None] = [None] * rows
            g_block = max(1, _PAIR_CHUNK // rows)
            for dg in range(g_degree + 1):
                g_count = poly_count(n, dg)
                for gs in range(0, g_count, g_block):
                    ge = min(gs + g_block, g_count)
                    g_cols = decode_poly_block(n, dg, gs, ge)
                    expected = calc.prod_ids(cf[:, None],
                                             calc.content_ids(g_cols)[None, :])
                    actual = calc.content_ids(_convolve_columns(
                        ring, [c[:, None] for c in f_cols],
                        [c[None, :] for c in g_cols]))
                    bad = actual != expected
                    for r in np.nonzero(bad.any(axis=1))[0]:
                        if first[int(r)] is None:
                            col = int(np.argmax(bad[int(r)]))
                            first[int(r)] = (dg, gs + col)
            for k, hit in enumerate(first):
                results.append((df, fs + k, hit))
    return results
