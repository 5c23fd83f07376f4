"""Polynomial content calculus: multiplication, Dedekind–Mertens, Gaussian
certification, and the exhaustive violation oracle they are audited against."""

import numpy as np
import pytest

from finring.errors import RingBuildError
from finring.ideals import (ideal_generated_by, is_local, is_principal,
                            principal_ideal, residue_vector_space)
from finring.polys import (RingPoly, certify_gaussian, content,
                           cumulative_poly_count, dedekind_mertens_check,
                           dedekind_mertens_random_audit,
                           gaussian_violation_table, gaussian_witness_search,
                           has_square_zero_maximal, make_poly, poly_at_index,
                           poly_count, poly_from_literals, poly_mul,
                           ring_gaussian_refutation_search)
from finring.rings import ZmodRing, free_module, make_trivial_extension, standard_gf


def _residue_idealization(order: int, dim: int = 1):
    base = ZmodRing(order)
    module = residue_vector_space(base, is_local(base), dim)
    return make_trivial_extension(base, module)[0]


def _self_idealization(order: int):
    base = ZmodRing(order)
    return make_trivial_extension(base, free_module(base, 1))[0]


# ---------------------------------------------------------------- arithmetic


def test_poly_mul_frozen():
    z4 = ZmodRing(4)
    f = poly_from_literals(z4, [1, 2, 3])
    g = poly_from_literals(z4, [2, 1])
    # (1 + 2x + 3x^2)(2 + x) = 2 + 5x + 8x^2 + 3x^3 = 2 + x + 3x^3 mod 4
    assert poly_mul(f, g).coeffs == (2, 1, 0, 3)
    assert poly_mul(f, g).degree == 3


def test_poly_mul_requires_same_ring():
    f = poly_from_literals(ZmodRing(4), [1])
    g = poly_from_literals(ZmodRing(8), [1])
    with pytest.raises(RingBuildError):
        poly_mul(f, g)


def test_content_frozen():
    z12 = ZmodRing(12)
    f = poly_from_literals(z12, [4, 6])
    assert sorted(content(f).indices.tolist()) == [0, 2, 4, 6, 8, 10]
    zero = make_poly(z12, [])
    assert content(zero).size == 1


# ---------------------------------------------------------------- enumeration order


def test_poly_enumeration_pinned():
    z4 = ZmodRing(4)
    assert poly_count(4, 0) == 3            # nonzero constants
    assert poly_count(4, 1) == 12           # leading in {1,2,3}, constant free
    assert cumulative_poly_count(4, 1) == 15
    # constant coefficient varies fastest, leading coefficient slowest
    assert poly_at_index(z4, 1, 0).coeffs == (0, 1)
    assert poly_at_index(z4, 1, 1).coeffs == (1, 1)
    assert poly_at_index(z4, 1, 4).coeffs == (0, 2)
    assert poly_at_index(z4, 0, 2).coeffs == (3,)


# ---------------------------------------------------------------- Dedekind–Mertens


def test_dedekind_mertens_frozen_pair():
    z4 = ZmodRing(4)
    f = poly_from_literals(z4, [2, 2])
    g = poly_from_literals(z4, [2, 0, 2])
    assert dedekind_mertens_check(f, g)


@pytest.mark.parametrize("build", [
    lambda: ZmodRing(8),
    lambda: standard_gf(2, 3),
    lambda: _residue_idealization(4),
    lambda: _self_idealization(4),
])
def test_dedekind_mertens_random_audit_zero_failures(build):
    assert dedekind_mertens_random_audit(build(), 2000, seed=7) == 0


# ---------------------------------------------------------------- certification


def test_square_zero_maximal_rule_scope():
    assert has_square_zero_maximal(_residue_idealization(4))
    assert not has_square_zero_maximal(_self_idealization(4))
    assert not has_square_zero_maximal(ZmodRing(6))      # not local
    assert not has_square_zero_maximal(ZmodRing(8))      # M^2 != 0


def test_certify_unit_content_and_zero():
    z8 = ZmodRing(8)
    unit = certify_gaussian(poly_from_literals(z8, [3, 2]))
    assert unit.status == "certified" and unit.reason == "unit_content"
    zero = certify_gaussian(make_poly(z8, []))
    assert zero.status == "certified" and zero.reason == "zero_polynomial"


def test_certify_gaussian_on_residue_idealization():
    # f = (2,0) + (0,1)x has proper, non-principal content yet is Gaussian:
    # the ring is local with square-zero maximal ideal.
    ext = _residue_idealization(4)
    f = poly_from_literals(ext, [(2, 0), (0, 1)])
    assert sorted(content(f).indices.tolist()) != [0]
    assert content(f).size == 4
    assert not is_principal(content(f))[0]
    verdict = certify_gaussian(f, degree_bound=3)
    assert verdict.status == "certified"
    assert verdict.reason == "local_square_zero_maximal"
    assert gaussian_witness_search(f, 3) is None


def test_certify_gaussian_refutation_frozen():
    # Over Z/4 idealized by itself the same coefficient pattern fails:
    # g = f itself gives c(fg) strictly inside c(f)c(g).
    ext = _self_idealization(4)
    f = poly_from_literals(ext, [(2, 0), (0, 1)])
    verdict = certify_gaussian(f, degree_bound=3)
    assert verdict.status == "refuted"
    g = verdict.witness
    assert isinstance(g, RingPoly)
    lhs = content(poly_mul(f, g))
    rhs_gens = [int(ext.mul_arr(a, b))
                for a in f.coeffs for b in g.coeffs]
    rhs = ideal_generated_by(ext, rhs_gens)
    assert lhs.mask != rhs.mask and lhs.mask & rhs.mask == lhs.mask


def test_certify_accepts_ring_level_certificate():
    ext = _residue_idealization(4)
    f = poly_from_literals(ext, [(2, 0), (0, 1)])
    verdict = certify_gaussian(f, degree_bound=0, ring_gaussian_certified=True)
    assert verdict.status == "certified"


def test_certify_bounded_when_search_exhausts():
    # Proper-content polynomial over a non-Gaussian ring with no violating g
    # at low degree: the verdict must stay bounded, not flip to certified.
    ext = _self_idealization(4)
    f = poly_from_literals(ext, [(0, 1)])
    verdict = certify_gaussian(f, degree_bound=1)
    assert verdict.status in ("bounded", "refuted")
    if verdict.status == "bounded":
        assert verdict.bound is not None and verdict.bound >= 0


# ---------------------------------------------------------------- ring-level search


def test_ring_refutation_search_frozen():
    hit, exhausted, checked = ring_gaussian_refutation_search(
        _self_idealization(4), 3)
    assert hit is not None
    f, g = hit
    lhs = content(poly_mul(f, g))
    ext = f.ring
    rhs = ideal_generated_by(
        ext, [int(ext.mul_arr(a, b)) for a in f.coeffs for b in g.coeffs])
    assert lhs.mask != rhs.mask
    assert checked > 0


def test_ring_refutation_search_clean_on_gaussian_ring():
    hit, exhausted, checked = ring_gaussian_refutation_search(ZmodRing(8), 2)
    assert hit is None
    assert exhausted >= 2


# ---------------------------------------------------------------- exhaustive oracle


def test_violation_table_matches_witness_search():
    ext = _self_idealization(4)
    table = gaussian_violation_table(ext, 1, 1)
    assert len(table) == ext.order ** 2 - 1  # all nonzero f of degree <= 1
    dirty = 0
    for df, fi, hit in table:
        f = poly_at_index(ext, df, fi)
        direct = gaussian_witness_search(f, 1)
        assert (direct is None) == (hit is None)
        if hit is not None:
            dirty += 1
            dg, gi = hit
            g = poly_at_index(ext, dg, gi)
            assert not dedekind_mertens_violation_free(f, g)
    assert dirty > 0


def dedekind_mertens_violation_free(f, g):
    """True iff c(fg) = c(f)c(g) for this specific pair."""
    ring = f.ring
    lhs = content(poly_mul(f, g))
    rhs = ideal_generated_by(
        ring, [int(ring.mul_arr(a, b)) for a in f.coeffs for b in g.coeffs])
    return lhs.mask == rhs.mask


def test_violation_table_all_clean_on_gaussian_ring():
    table = gaussian_violation_table(ZmodRing(9), 2, 2)
    assert all(hit is None for _, _, hit in table)
