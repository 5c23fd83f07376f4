"""Ideal lattice, localization, and content-calculus oracles.

Expected values were computed by exhaustive enumeration over the element
tables and then frozen here.
"""

import numpy as np
import pytest

from finring.errors import RingBuildError
from finring.ideals import (annihilator, content_calculus, enumerate_ideals,
                            ideal_generated_by, ideal_intersection,
                            ideal_product, ideal_quotient, ideal_sum,
                            is_invertible, is_local, is_locally_principal,
                            is_principal, is_regular_ideal, localize_at,
                            make_quotient, maximal_ideals,
                            minimal_nonzero_ideals, principal_ideal,
                            residue_vector_space,
                            zero_ideal_locally_irreducible)
from finring.rings import (ZmodRing, free_module, make_trivial_extension,
                           standard_gf)


def _indices(ideal):
    return sorted(ideal.indices.tolist())


def _trivext(base_order: int, residue_dim: int | None):
    """Z/base_order idealized by its residue field power (or by itself)."""
    base = ZmodRing(base_order)
    if residue_dim is None:
        module = free_module(base, 1)
    else:
        module = residue_vector_space(base, is_local(base), residue_dim)
    return make_trivial_extension(base, module)[0]


# ---------------------------------------------------------------- lattice shape


def test_zmod12_lattice_frozen():
    z12 = ZmodRing(12)
    lattice = enumerate_ideals(z12)
    # one ideal per divisor of 12
    assert sorted(i.size for i in lattice.ideals) == [1, 2, 3, 4, 6, 12]
    assert sorted(_indices(m) for m in maximal_ideals(z12)) == [
        [0, 2, 4, 6, 8, 10], [0, 3, 6, 9]]
    assert sorted(_indices(a) for a in minimal_nonzero_ideals(z12)) == [
        [0, 4, 8], [0, 6]]


def test_idealization_by_residue_field_lattice_frozen():
    ext = _trivext(4, 1)  # order 8, local, non-arithmetical candidate source
    lattice = enumerate_ideals(ext)
    assert sorted(i.size for i in lattice.ideals) == [1, 2, 2, 2, 4, 8]
    dec = ext.decode_literal
    atoms = sorted(sorted(dec(x) for x in a.indices.tolist())
                   for a in minimal_nonzero_ideals(ext))
    assert atoms == [[(0, 0), (0, 1)], [(0, 0), (2, 0)], [(0, 0), (2, 1)]]


def test_self_idealization_lattice_frozen():
    ext = _trivext(4, None)  # Z/4 idealized by itself, order 16
    lattice = enumerate_ideals(ext)
    assert sorted(i.size for i in lattice.ideals) == [1, 2, 4, 4, 4, 8, 16]
    atoms = minimal_nonzero_ideals(ext)
    assert len(atoms) == 1
    dec = ext.decode_literal
    assert sorted(dec(x) for x in atoms[0].indices.tolist()) == [(0, 0), (0, 2)]


def test_field_idealization_lattice_frozen():
    base = standard_gf(2, 1)
    ext, _, _ = make_trivial_extension(base, free_module(base, 2))
    assert sorted(i.size for i in enumerate_ideals(ext).ideals) == [1, 2, 2, 2, 4, 8]
    assert len(minimal_nonzero_ideals(ext)) == 3


# ---------------------------------------------------------------- ideal algebra


def test_ideal_algebra_zmod12_frozen():
    z12 = ZmodRing(12)
    i4, i6 = principal_ideal(z12, 4), principal_ideal(z12, 6)
    assert _indices(ideal_sum(i4, i6)) == [0, 2, 4, 6, 8, 10]
    assert _indices(ideal_product(i4, i6)) == [0]
    assert _indices(ideal_intersection(i4, i6)) == [0]
    assert _indices(ideal_quotient(i4, i6)) == [0, 2, 4, 6, 8, 10]
    assert _indices(annihilator(i6)) == [0, 2, 4, 6, 8, 10]


def test_generated_ideal_closure():
    z12 = ZmodRing(12)
    ideal = ideal_generated_by(z12, [4, 6])
    assert _indices(ideal) == [0, 2, 4, 6, 8, 10]
    ok, gen = is_principal(ideal)
    assert ok and gen in {2, 10}


def test_regular_and_invertible():
    z12 = ZmodRing(12)
    assert is_regular_ideal(principal_ideal(z12, 1))
    assert not is_regular_ideal(principal_ideal(z12, 6))
    assert is_invertible(principal_ideal(z12, 1))


# ---------------------------------------------------------------- localization


def test_localize_zmod6_frozen():
    z6 = ZmodRing(6)
    local, hom = localize_at(z6, principal_ideal(z6, 2))
    assert local.order == 2
    assert hom.map.tolist() == [0, 1, 0, 1, 0, 1]
    assert hom.kernel_indices().tolist() == [0, 2, 4]
    assert hom.verify()


def test_localize_requires_maximal():
    z12 = ZmodRing(12)
    with pytest.raises(RingBuildError):
        localize_at(z12, principal_ideal(z12, 4))  # (4) is not maximal


def test_is_local_frozen():
    assert is_local(ZmodRing(6)) is None
    m = is_local(ZmodRing(8))
    assert m is not None and _indices(m) == [0, 2, 4, 6]
    assert is_local(standard_gf(3, 2)).size == 1


def test_locally_principal_on_non_principal_ideal():
    ext = _trivext(4, 1)
    dec_ok = ideal_generated_by(
        ext, [ext.encode_literal((2, 0)), ext.encode_literal((0, 1))])
    ok, gen = is_principal(dec_ok)
    assert not ok
    locally, row = is_locally_principal(dec_ok)
    # the ring is local, so locally principal would mean principal
    assert not locally
    assert row is not None


def test_zero_ideal_locally_irreducible_frozen():
    verdict, rows = zero_ideal_locally_irreducible(ZmodRing(4))
    assert verdict and rows[0]["atom_count"] == 1
    verdict, rows = zero_ideal_locally_irreducible(_trivext(4, 1))
    assert not verdict and rows[0]["atom_count"] == 3
    verdict, rows = zero_ideal_locally_irreducible(ZmodRing(6))
    assert verdict  # both localizations are fields


# ---------------------------------------------------------------- quotients & modules


def test_make_quotient_and_residue_space():
    z12 = ZmodRing(12)
    quot, proj = make_quotient(z12, principal_ideal(z12, 3))
    assert quot.order == 3 and proj.verify()

    z4 = ZmodRing(4)
    space = residue_vector_space(z4, is_local(z4), 2)
    assert space.order == 4
    # M annihilates the residue space
    m_idx = is_local(z4).indices
    for a in m_idx.tolist():
        assert np.all(space.act_arr(np.int64(a), np.arange(4)) == 0)


# ---------------------------------------------------------------- content calculus


def test_content_calculus_tables():
    z12 = ZmodRing(12)
    calc = content_calculus(z12)
    lattice = calc.lattice
    zero_id = lattice.ideal_id(principal_ideal(z12, 0))
    unit_id = lattice.ideal_id(principal_ideal(z12, 1))
    two_id = lattice.ideal_id(principal_ideal(z12, 2))
    three_id = lattice.ideal_id(principal_ideal(z12, 3))
    six_id = lattice.ideal_id(principal_ideal(z12, 6))
    assert calc.prod_ids(np.int64(unit_id), np.int64(two_id)) == two_id
    assert calc.prod_ids(np.int64(two_id), np.int64(three_id)) == six_id
    assert calc.prod_ids(np.int64(zero_id), np.int64(two_id)) == zero_id
    # content of the coefficient column [4, 6] is (2)
    cols = [np.array([4]), np.array([6])]
    assert calc.content_ids(cols)[0] == two_id
