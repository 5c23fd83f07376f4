"""Element-table constructors: arithmetic, literals, axioms, homomorphisms."""

import numpy as np
import pytest

from finring.errors import RingBuildError
from finring.rings import (GFRing, ProductRing, ZmodRing, element_kind,
                           element_units, free_module, is_irreducible_mod_p,
                           is_prime, make_trivial_extension, module_sum,
                           standard_gf, verify_module_axioms,
                           verify_ring_axioms, zero_module)
from finring.ideals import (is_local, make_quotient, principal_ideal,
                            residue_vector_space)


# ---------------------------------------------------------------- zmod


def test_zmod_tables():
    z12 = ZmodRing(12)
    assert z12.order == 12
    assert z12.zero == 0 and z12.one == 1
    assert int(z12.add_arr(np.int64(7), np.int64(8))) == 3
    assert int(z12.mul_arr(np.int64(7), np.int64(8))) == 8
    assert int(z12.neg_arr(np.int64(5))) == 7


def test_zmod_units_frozen():
    # Units of Z/12 are exactly the residues coprime to 12.
    mask = element_units(ZmodRing(12))
    assert np.nonzero(mask)[0].tolist() == [1, 5, 7, 11]


def test_element_kind_partition():
    ring = ZmodRing(12)
    kinds = {a: element_kind(ring, a) for a in range(12)}
    assert kinds[1] == "unit" and kinds[11] == "unit"
    assert kinds[0] == "zerodivisor" and kinds[6] == "zerodivisor"
    assert all(k in ("unit", "zerodivisor") for k in kinds.values())


def test_zmod_rejects_bad_order():
    with pytest.raises(RingBuildError):
        ZmodRing(1)
    with pytest.raises(RingBuildError):
        ZmodRing(0)


def test_zmod_literals():
    z7 = ZmodRing(7)
    assert z7.encode_literal(9) == 2
    assert z7.decode_literal(3) == 3
    with pytest.raises(RingBuildError):
        z7.encode_literal((1, 2))


# ---------------------------------------------------------------- gf


def test_primality_and_irreducibility_helpers():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_irreducible_mod_p((1, 1, 1), 2)       # x^2+x+1 over F2
    assert not is_irreducible_mod_p((1, 0, 1), 2)   # x^2+1 = (x+1)^2 over F2
    assert is_irreducible_mod_p((1, 0, 1), 3)       # x^2+1 over F3


def test_gf4_arithmetic_frozen():
    g4 = standard_gf(2, 2)  # F2[x]/(x^2+x+1), literal n encodes base-2 digits
    assert g4.name == "gf(2,2)"
    x = g4.encode_literal(2)
    # x * x = x + 1
    assert g4.decode_literal(int(g4.mul_arr(np.int64(x), np.int64(x)))) == 3
    # every nonzero element is a unit
    assert int(np.count_nonzero(element_units(g4))) == 3


def test_gf_prime_field_degenerate_unit_group():
    # q = 2 has a trivial multiplicative group; exp/log tables must still work.
    g2 = standard_gf(2, 1)
    assert g2.order == 2
    assert verify_ring_axioms(g2)


def test_gf_rejects_reducible_modulus():
    with pytest.raises(RingBuildError):
        GFRing(2, 2, (1, 0, 1))  # x^2+1 reducible mod 2


def test_standard_gf_table_covers_spec_sizes():
    for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2)]:
        ring = standard_gf(p, k)
        assert ring.order == p ** k
        assert verify_ring_axioms(ring)


# ---------------------------------------------------------------- product


def test_product_componentwise():
    pr = ProductRing(ZmodRing(4), ZmodRing(3))
    assert pr.order == 12
    a = pr.encode_literal((3, 2))
    b = pr.encode_literal((2, 2))
    assert pr.decode_literal(int(pr.mul_arr(np.int64(a), np.int64(b)))) == (2, 1)
    assert pr.decode_literal(int(pr.add_arr(np.int64(a), np.int64(b)))) == (1, 1)
    assert pr.decode_literal(pr.one) == (1, 1)


# ---------------------------------------------------------------- quotient


def test_quotient_of_zmod_is_zmod():
    z12 = ZmodRing(12)
    quot, proj = make_quotient(z12, principal_ideal(z12, 4))
    assert quot.order == 4
    assert proj.verify()
    z4 = ZmodRing(4)
    # same multiplication table as Z/4 under the representative relabeling
    iso = {quot.decode_literal(i): i for i in range(quot.order)}
    for a in range(4):
        for b in range(4):
            lhs = quot.decode_literal(
                int(quot.mul_arr(np.int64(iso[a]), np.int64(iso[b]))))
            assert lhs == int(z4.mul_arr(np.int64(a), np.int64(b)))


# ---------------------------------------------------------------- trivial extension


def test_trivial_extension_multiplication_law():
    z4 = ZmodRing(4)
    ext, embed, project = make_trivial_extension(
        z4, residue_vector_space(z4, is_local(z4), 1))
    assert ext.order == 8
    enc, dec = ext.encode_literal, ext.decode_literal
    # (a,e)(a',e') = (aa', ae' + a'e): (1,1)*(2,1) = (2, 1*1 + 2*1) = (2,1)
    prod = int(ext.mul_arr(np.int64(enc((1, 1))), np.int64(enc((2, 1)))))
    assert dec(prod) == (2, 1)
    s = int(ext.add_arr(np.int64(enc((1, 1))), np.int64(enc((2, 1)))))
    assert dec(s) == (3, 0)
    assert dec(enc((3, 0))) == (3, 0)
    assert embed.verify() and project.verify()
    assert project.map[embed.map].tolist() == list(range(4))


def test_trivial_extension_square_zero_part():
    z4 = ZmodRing(4)
    ext, _, _ = make_trivial_extension(z4, free_module(z4, 1))
    m = 4  # module order; indices 0..3 are the (0, e) slice
    idx = np.arange(m, dtype=np.int64)
    assert np.all(ext.mul_arr(idx[:, None], idx[None, :]) == ext.zero)


def test_free_module_and_sum_axioms():
    z4 = ZmodRing(4)
    free2 = free_module(z4, 2)
    assert free2.order == 16
    assert verify_module_axioms(free2)
    summed = module_sum(free_module(z4, 1), free_module(z4, 1))
    assert summed.order == 16
    assert verify_module_axioms(summed)
    assert zero_module(z4).order == 1


# ---------------------------------------------------------------- axioms & homs


def _trivext_z4():
    z4 = ZmodRing(4)
    return make_trivial_extension(z4, free_module(z4, 1))[0]


@pytest.mark.parametrize("build", [
    lambda: ZmodRing(6),
    lambda: standard_gf(3, 2),
    lambda: ProductRing(ZmodRing(2), ZmodRing(8)),
    _trivext_z4,
])
def test_ring_axioms_exhaustive(build):
    ring = build()
    assert ring.order <= 64
    assert verify_ring_axioms(ring)


def test_trivial_extension_requires_module_over_same_ring_object():
    with pytest.raises(RingBuildError):
        make_trivial_extension(ZmodRing(4), free_module(ZmodRing(4), 1))


def test_hom_verify_rejects_non_hom():
    from finring.rings import RingHom
    z4 = ZmodRing(4)
    bad = RingHom(z4, z4, np.array([0, 1, 3, 2], dtype=np.int64))
    assert not bad.verify()
    good = RingHom(z4, z4, np.arange(4, dtype=np.int64))
    assert good.verify()


def test_hom_requires_total_map():
    from finring.rings import RingHom
    z4 = ZmodRing(4)
    with pytest.raises(RingBuildError):
        RingHom(z4, z4, np.array([0, 1], dtype=np.int64))
