import pytest

from hk4verify.quotient import (
    ExceptionalFiber,
    FixedLocusProfile,
    exceptional_betti,
    is_prime,
    lefschetz_euler_fixed,
    mk_elimination_equation,
    orbifold_salamon_defect,
    solve_mk,
    transport_betti,
)
from hk4verify.topology import (
    BettiTable,
    K3_SURFACE,
    TORUS_SURFACE,
    betti_from_pair,
    euler_characteristic,
    salamon_defect,
)

PRIMES = (2, 3, 5, 7, 11)
PAIRS = [(23, 0), (7, 8), (6, 4), (5, 0), (4, 32), (0, 0)]


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_exceptional_betti_k3_order2():
    bt = exceptional_betti(K3_SURFACE, 2)
    assert bt.b == (1, 0, 23, 0, 23, 0, 1, 0, 0)
    assert euler_characteristic(bt) == 48  # 2 * chi(K3)


def test_exceptional_betti_torus_order3():
    bt = exceptional_betti(TORUS_SURFACE, 3)
    assert bt.b == (1, 4, 8, 12, 13, 8, 2, 0, 0)
    assert euler_characteristic(bt) == 0


def test_exceptional_betti_requires_prime():
    with pytest.raises(ValueError):
        exceptional_betti(K3_SURFACE, 4)
    with pytest.raises(ValueError):
        exceptional_betti(TORUS_SURFACE, 1)


def test_exceptional_fiber_chain():
    fiber = ExceptionalFiber(K3_SURFACE, 4)  # p = 5
    assert fiber.chain_betti() == (1, 0, 4)
    with pytest.raises(ValueError):
        ExceptionalFiber(K3_SURFACE, 0)


def test_exceptional_difference_identity():
    # b_j(S x C_p) - b_j(S) == (p - 1) * b_{j-2}(S) in every degree
    for p in PRIMES:
        for surface in (K3_SURFACE, TORUS_SURFACE):
            product = exceptional_betti(surface, p).b
            s = BettiTable(surface.full_betti()).b
            shifted = (0, 0) + surface.full_betti() + (0, 0)
            for j in range(9):
                assert product[j] - s[j] == (p - 1) * shifted[j]


def test_transport_k3_component_order2():
    bY = betti_from_pair(23, 0)
    bW = transport_betti(bY, FixedLocusProfile(p=2, m=0, k=1, t=0))
    assert tuple(w - y for w, y in zip(bW.b, bY.b)) == (0, 0, 1, 0, 22, 0, 1, 0, 0)


def test_transport_torus_component_order3():
    bY = betti_from_pair(7, 8)
    bW = transport_betti(bY, FixedLocusProfile(p=3, m=0, k=0, t=1))
    assert tuple(w - y for w, y in zip(bW.b, bY.b)) == (0, 0, 2, 8, 12, 8, 2, 0, 0)


def test_transport_empty_fixed_surface_locus_is_identity():
    bY = betti_from_pair(5, 0)
    bW = transport_betti(bY, FixedLocusProfile(p=5, m=0, k=0, t=0))
    assert bW.b == bY.b


def test_transport_degrees_2_3_4_closed_forms():
    for b2, b3 in PAIRS:
        bY = betti_from_pair(b2, b3)
        for p in PRIMES:
            for k in range(11):
                for t in range(11):
                    bW = transport_betti(bY, FixedLocusProfile(p=p, m=0, k=k, t=t))
                    assert bW[2] == bY[2] + (p - 1) * (k + t)
                    assert bW[3] == bY[3] + 4 * (p - 1) * t
                    assert bW[4] == bY[4] + (p - 1) * (22 * k + 6 * t)


def test_transport_preserves_duality_and_flag():
    bY = betti_from_pair(23, 0)
    bW = transport_betti(bY, FixedLocusProfile(p=3, m=0, k=2, t=5))
    assert bW.strict_hk
    assert bW.b == tuple(reversed(bW.b))


def test_transport_salamon_and_euler_shifts():
    for b2, b3 in PAIRS:
        bY = betti_from_pair(b2, b3)
        for p in PRIMES:
            for k in range(11):
                for t in range(11):
                    profile = FixedLocusProfile(p=p, m=0, k=k, t=t)
                    bW = transport_betti(bY, profile)
                    assert salamon_defect(bW) == 12 * k * (p - 1)
                    assert (
                        euler_characteristic(bW)
                        == euler_characteristic(bY) + 24 * k * (p - 1)
                    )


def test_orbifold_defect_counts_isolated_points():
    for m in range(5):
        for p in (2, 3, 5):
            for k in range(4):
                bY = betti_from_pair(23, 0)
                profile = FixedLocusProfile(p=p, m=m, k=k, t=3)
                bW = transport_betti(bY, profile)
                assert orbifold_salamon_defect(bW, profile) == (m + 12 * k) * (p - 1)


def test_orbifold_defect_zero_for_torus_only_profiles():
    for t in range(8):
        profile = FixedLocusProfile(p=3, m=0, k=0, t=t)
        bW = transport_betti(betti_from_pair(7, 8), profile)
        assert orbifold_salamon_defect(bW, profile) == 0


def test_orbifold_defect_on_relation_satisfying_table():
    # a table obeying the orbifold relation with s = -2: b4 + b3 - 10*b2 = 44
    bW = BettiTable((1, 0, 23, 0, 274, 0, 23, 0, 1))
    profile = FixedLocusProfile(p=2, m=2, k=0, t=0)
    assert salamon_defect(bW) == -2
    assert orbifold_salamon_defect(bW, profile) == 0


def test_orbifold_defect_all_zero_table():
    profile = FixedLocusProfile(p=2, m=0, k=0, t=0)
    assert orbifold_salamon_defect(BettiTable(()), profile) == -46


def test_lefschetz_euler_fixed():
    assert lefschetz_euler_fixed(FixedLocusProfile(p=2, m=0, k=0, t=5)) == 0
    assert lefschetz_euler_fixed(FixedLocusProfile(p=3, m=1, k=0, t=0)) == 1
    assert lefschetz_euler_fixed(FixedLocusProfile(p=2, m=0, k=2, t=3)) == 48


def test_profile_validation():
    with pytest.raises(ValueError):
        FixedLocusProfile(p=4, m=0, k=0, t=0)
    with pytest.raises(ValueError):
        FixedLocusProfile(p=2, m=-1, k=0, t=0)


def test_solve_mk():
    assert solve_mk(2) == (0, 0)
    assert solve_mk(7) == (0, 0)
    with pytest.raises(ValueError):
        solve_mk(4)
    with pytest.raises(ValueError):
        solve_mk(1)


def test_solve_mk_small_oracle():
    for p in (2, 3, 97):
        solutions = {
            (m, k)
            for m in range(101)
            for k in range(101)
            if (m + 12 * k) * (p - 1) == 0
        }
        assert solutions == {solve_mk(p)}


def test_mk_elimination_equation_mentions_balance():
    text = mk_elimination_equation(5)
    assert "(m + 12k)*(p-1) = 0" in text
    assert "p = 5" in text
    with pytest.raises(ValueError):
        mk_elimination_equation(6)
