"""Number theory and field arithmetic tests.

Expected values here were frozen from independent computations: square roots
by exhaustive scan, cyclotomic polynomials by hand for small index, factor
degrees from the order of p in (Z/n)^*.
"""

import math

from platocover.gf import (
    ExtField,
    coset_orbits,
    cyclotomic_polynomial,
    factor_xn_minus_1,
    frobenius_orbits,
    is_prime,
    multiplicative_order,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_str,
    poly_trim,
    sqrt_mod_p,
)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_multiplicative_order():
    # ord_95(7): 7^k mod 95 scan gives 12
    assert multiplicative_order(7, 95) == 12
    assert multiplicative_order(3, 13) == 3
    assert multiplicative_order(2, 13) == 12
    assert multiplicative_order(1, 7) == 1


class TestPolynomials:
    def test_mul_int(self):
        # (1 + x)(1 - x) = 1 - x^2
        assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]

    def test_divmod_exact_int(self):
        # (x^2 - 1) / (x - 1) = x + 1
        q, r = poly_divmod([-1, 0, 1], [-1, 1])
        assert q == [1, 1] and r == []

    def test_divmod_mod_p(self):
        # x^4 + 1 = (x^2 + 3x + 1)(x^2 + 4x + 1) mod 7, found by scan
        prod = poly_mul([1, 3, 1], [1, 4, 1], 7)
        assert prod == [1, 0, 0, 0, 1]
        q, r = poly_divmod([1, 0, 0, 0, 1], [1, 3, 1], 7)
        assert r == [] and q == [1, 4, 1]

    def test_gcd(self):
        # gcd(x^2 - 1, x^2 - 2x + 1) = x - 1 over F_5
        g = poly_gcd([-1, 0, 1], [1, -2, 1], 5)
        assert g == [4, 1]

    def test_str(self):
        assert poly_str([1, 0, 2, 1]) == "x^3 + 2*x^2 + 1"
        assert poly_str([]) == "0"
        assert poly_str([0, 1]) == "x"
        assert poly_trim([0, 0]) == []


class TestCyclotomic:
    def test_small_indices(self):
        assert list(cyclotomic_polynomial(1)) == [-1, 1]
        assert list(cyclotomic_polynomial(2)) == [1, 1]
        assert list(cyclotomic_polynomial(3)) == [1, 1, 1]
        assert list(cyclotomic_polynomial(4)) == [1, 0, 1]
        assert list(cyclotomic_polynomial(5)) == [1, 1, 1, 1, 1]
        assert list(cyclotomic_polynomial(6)) == [1, -1, 1]
        assert list(cyclotomic_polynomial(12)) == [1, 0, -1, 0, 1]

    def test_product_over_divisors(self):
        for m in (8, 15, 30, 95):
            prod = [1]
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
            assert prod == [-1] + [0] * (m - 1) + [1]

    def test_degree_is_totient(self):
        for m in (7, 10, 36, 95):
            phi = sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
            assert len(cyclotomic_polynomial(m)) == phi + 1


class TestSqrt:
    def test_known_roots(self):
        # exhaustive scan oracle: 4^2 = 16 = 5 mod 11; even representative
        assert sqrt_mod_p(5, 11) == 4
        assert sqrt_mod_p(5, 7) is None
        assert sqrt_mod_p(0, 13) == 0
        assert sqrt_mod_p(1, 13) == 12  # roots are 1 and 12; 12 is even

    def test_against_scan(self):
        for p in (3, 5, 7, 11, 13, 17, 29, 41, 97, 101):
            squares = {x * x % p for x in range(p)}
            for a in range(p):
                r = sqrt_mod_p(a, p)
                if a in squares:
                    assert r is not None and r * r % p == a and (r == 0 or r % 2 == 0)
                else:
                    assert r is None

    def test_residue_criteria(self):
        # -3 is a QR mod p iff p = 1 mod 3; 5 is a QR mod p iff p = +-1 mod 5
        for p in (7, 13, 19, 31):
            assert sqrt_mod_p(-3, p) is not None
        for p in (5 + 6, 17, 23, 29):
            if p % 3 == 2:
                assert sqrt_mod_p(-3, p) is None
        for p in (11, 19, 29, 31):
            assert sqrt_mod_p(5, p) is not None
        for p in (3, 7, 13, 17, 23, 37):
            assert sqrt_mod_p(5, p) is None


class TestOrbits:
    def test_frobenius_n13_p3(self):
        # ord_13(3) = 3, so orbits of size 3 plus the fixed point 0
        orbs = frobenius_orbits(13, 3)
        sizes = sorted(o.size for o in orbs)
        assert sizes == [1, 3, 3, 3, 3]
        assert orbs[0].members == (0,)
        assert any(o.members == (1, 3, 9) for o in orbs)

    def test_coset_n95_p7(self):
        # frozen from a direct orbit scan of <7, -1> acting on Z_95
        orbs = coset_orbits(95, 7)
        sizes = sorted(o.size for o in orbs)
        assert sizes == [1, 4, 6, 6, 6, 24, 24, 24]
        assert len(orbs) == 8
        for o in orbs:
            assert o.self_paired
            assert set((-i) % 95 for i in o.members) == set(o.members)

    def test_coset_annotations(self):
        orbs = coset_orbits(13, 5)
        zero = orbs[0]
        assert zero.members == (0,) and zero.m == 1 and zero.e == 1
        one = next(o for o in orbs if 1 in o.members)
        assert one.m == 13 and one.e == multiplicative_order(5, 13) == 4
        assert one.least == 1

    def test_self_pairing_detection(self):
        # n=5, p=11: 11 = 1 mod 5 so Frobenius is trivial; {1} is not
        # closed under negation, {1,4} under the coset group is
        frob = frobenius_orbits(5, 11)
        assert sorted(o.size for o in frob) == [1, 1, 1, 1, 1]
        assert all(not o.self_paired for o in frob if o.members != (0,))
        cos = coset_orbits(5, 11)
        assert sorted(o.size for o in cos) == [1, 2, 2]


class TestExtField:
    def test_prime_field(self):
        f = ExtField(7, 1)
        assert f.defining == [0, 1]
        a, b = f.element([3]), f.element([5])
        assert f.mul(a, b) == f.element([1])

    def test_defining_poly_irreducible(self):
        # first monic irreducible quadratic over F_3 in counter order:
        # x^2 + 1 (counter 1 gives lower coeffs [1, 0])
        f = ExtField(3, 2)
        assert f.defining == [1, 0, 1]

    def test_field_axioms_f49(self):
        f = ExtField(7, 2)
        elements = [f.element([a, b]) for a in range(7) for b in range(7)]
        one = f.one()
        for x in elements:
            if x == f.zero():
                continue
            assert f.mul(x, f.inv(x)) == one
        # multiplicative group order divides 48
        x = f.element([1, 1])
        assert f.pow(x, 48) == one

    def test_primitive_element_order(self):
        f = ExtField(5, 2)
        g = f.primitive_element()
        n = f.order - 1
        seen = set()
        x = f.one()
        for _ in range(n):
            x = f.mul(x, g)
            seen.add(x)
        assert len(seen) == n

    def test_nth_root_of_unity(self):
        f = ExtField(7, 4)  # ord_5(7) = 4
        w = f.nth_root_of_unity(5)
        powers = {w}
        x = w
        for _ in range(4):
            x = f.mul(x, w)
            powers.add(x)
        assert len(powers) == 5 and f.one() in powers


class TestFactorXnMinus1:
    def test_n5_p7(self):
        # 7 has order 4 mod 5: x^5 - 1 = (x - 1) * (irreducible quartic)
        factors = factor_xn_minus_1(5, 7)
        degs = sorted(len(f) - 1 for _, f in factors)
        assert degs == [1, 4]
        lin = next(f for o, f in factors if o.members == (0,))
        assert lin == [6, 1]  # x - 1

    def test_n19_p7(self):
        # ord_19(7) = 3: six cubics and one linear factor
        factors = factor_xn_minus_1(19, 7)
        degs = sorted(len(f) - 1 for _, f in factors)
        assert degs == [1, 3, 3, 3, 3, 3, 3]

    def test_n13_sweep(self):
        # degree pattern tracks ord_13(p)
        for p, e in ((53, 1), (3, 3), (17, 6), (5, 4), (41, 12)):
            if p == 53:
                assert multiplicative_order(53, 13) == 1
            factors = factor_xn_minus_1(13, p)
            degs = sorted(len(f) - 1 for _, f in factors)
            assert degs == [1] + [e] * (12 // e)

    def test_factors_pair_with_orbits(self):
        for n, p in ((8, 3), (12, 7), (95, 7)):
            factors = factor_xn_minus_1(n, p)
            for orbit, f in factors:
                assert len(f) - 1 == orbit.size

    def test_factors_are_coprime(self):
        factors = factor_xn_minus_1(12, 7)
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                assert poly_gcd(factors[i][1], factors[j][1], 7) == [1]
