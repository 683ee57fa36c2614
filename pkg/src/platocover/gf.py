"""Number theory and finite field arithmetic.

Polynomials are little-endian coefficient lists.  Integer polynomials use
plain Python ints; polynomials over F_p keep coefficients in [0, p).  The
extension field machinery is only used to split x^n - 1 into its irreducible
factors over F_p, so it stays deliberately small: residue arithmetic modulo a
deterministically chosen irreducible, plus a primitive element search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; {prime: exponent}."""
    assert n >= 1
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)^*; requires gcd(a, n) = 1."""
    assert n >= 1
    if n == 1:
        return 1
    assert math.gcd(a, n) == 1
    k = 1
    x = a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of a prime field."""
    assert is_prime(p)
    if p == 2:
        return 1
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable for prime p")


# ---------------------------------------------------------------------------
# polynomials (little-endian coefficient lists)

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a, b, p=None):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    if p is not None:
        out = [x % p for x in out]
    return poly_trim(out)


def poly_sub(a, b, p=None):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    if p is not None:
        out = [x % p for x in out]
    return poly_trim(out)


def poly_mul(a, b, p=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p is not None:
        out = [v % p for v in out]
    return poly_trim(out)


def poly_divmod(a, b, p=None):
    """Quotient and remainder.  Over the integers (p=None) the divisor must
    be monic so the division is exact in Z."""
    b = poly_trim(b)
    assert b, "division by zero polynomial"
    if p is None:
        assert b[-1] == 1, "integer polynomial division needs a monic divisor"
        lead_inv = 1
    else:
        lead_inv = pow(b[-1], -1, p)
    rem = list(a)
    if len(rem) < len(b):
        return [], poly_trim(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    for i in range(len(quot) - 1, -1, -1):
        if len(rem) < len(b) + i:
            continue
        coef = rem[len(b) + i - 1] * lead_inv
        if p is not None:
            coef %= p
        quot[i] = coef
        if coef:
            for j, y in enumerate(b):
                rem[i + j] -= coef * y
                if p is not None:
                    rem[i + j] %= p
    return poly_trim(quot), poly_trim(rem)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_gcd(a, b, p):
    a, b = poly_trim([x % p for x in a]), poly_trim([x % p for x in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def poly_pow_mod(base, exp: int, mod, p):
    result = [1]
    base = poly_mod(base, mod, p)
    while exp:
        if exp & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        exp >>= 1
    return result


def poly_str(coeffs) -> str:
    """Render little-endian coefficients as a human-readable polynomial."""
    if not poly_trim(list(coeffs)):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("x" if c == 1 else f"{c}*x")
        else:
            parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
    return " + ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (little-endian) of the m-th cyclotomic polynomial,
    by exact division of x^m - 1 by the lower cyclotomics."""
    assert m >= 1
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert rem == []
    return tuple(num)


# ---------------------------------------------------------------------------
# square roots

def sqrt_mod_p(a: int, p: int):
    """Tonelli-Shanks.  Returns the even representative of a square root of
    a mod p, or None when a is not a quadratic residue."""
    assert is_prime(p) and p % 2 == 1
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    assert r * r % p == a
    return r if r % 2 == 0 else p - r


# ---------------------------------------------------------------------------
# orbits of exponents of n-th roots of unity

@dataclass(frozen=True)
class CosetOrbit:
    """An orbit of residues mod n under multiplication by p (and optionally
    negation).  m is the order of the corresponding roots of unity, e the
    order of p mod m, self_paired whether the orbit is closed under negation.
    """

    n: int
    members: tuple[int, ...]
    m: int
    e: int
    self_paired: bool

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def least(self) -> int:
        return self.members[0]


def _orbits(n: int, generators) -> list[tuple[int, ...]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = set()
        stack = [start]
        while stack:
            r = stack.pop()
            if r in orbit:
                continue
            orbit.add(r)
            seen[r] = True
            for g in generators:
                stack.append(g(r))
        out.append(tuple(sorted(orbit)))
    return out


def _annotate(n: int, p: int, members: tuple[int, ...]) -> CosetOrbit:
    r = members[0]
    m = n // math.gcd(r, n) if r else 1
    for other in members:
        assert n // math.gcd(other, n) == (m if other else 1)
    e = multiplicative_order(p, m) if m > 1 else 1
    paired = set((-i) % n for i in members) == set(members)
    return CosetOrbit(n=n, members=members, m=m, e=e, self_paired=paired)


def frobenius_orbits(n: int, p: int) -> list[CosetOrbit]:
    """Orbits of multiplication by p on Z_n, sorted by least member."""
    assert n >= 1 and math.gcd(n, p) == 1
    orbs = _orbits(n, [lambda r: r * p % n])
    return sorted((_annotate(n, p, o) for o in orbs), key=lambda o: o.members)


def coset_orbits(n: int, p: int) -> list[CosetOrbit]:
    """Orbits of the group generated by multiplication by p and negation on
    Z_n, sorted by least member.  The orbit of 0 is included."""
    assert n >= 1 and math.gcd(n, p) == 1
    orbs = _orbits(n, [lambda r: r * p % n, lambda r: (-r) % n])
    out = sorted((_annotate(n, p, o) for o in orbs), key=lambda o: o.members)
    assert all(o.self_paired for o in out)
    return out


# ---------------------------------------------------------------------------
# extension fields

class ExtField:
    """F_{p^e} as residues modulo a deterministically chosen irreducible.

    The defining polynomial is the first monic irreducible of degree e in
    the little-endian counter order of its lower coefficients.  Elements are
    coefficient tuples of length e.
    """

    def __init__(self, p: int, e: int):
        assert is_prime(p) and e >= 1
        self.p = p
        self.e = e
        self.defining = self._first_irreducible()
        self.order = p**e

    def _is_irreducible(self, f) -> bool:
        p, e = self.p, self.e
        for k in range(1, e):
            xpk = poly_pow_mod([0, 1], p**k, f, p)
            g = poly_gcd(poly_sub(xpk, [0, 1], p), f, p)
            if g != [1]:
                return False
        return True

    def _first_irreducible(self):
        p, e = self.p, self.e
        if e == 1:
            return [0, 1]
        for counter in range(p**e):
            lower = [(counter // p**i) % p for i in range(e)]
            f = lower + [1]
            if self._is_irreducible(f):
                return f
        raise AssertionError("no irreducible polynomial found")

    def element(self, coeffs) -> tuple[int, ...]:
        c = [x % self.p for x in coeffs]
        c = c[: self.e] + [0] * (self.e - len(c))
        return tuple(c)

    def zero(self) -> tuple[int, ...]:
        return self.element([])

    def one(self) -> tuple[int, ...]:
        return self.element([1])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = poly_mod(poly_mul(list(a), list(b), self.p), self.defining, self.p)
        return self.element(prod)

    def pow(self, a, k: int):
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a):
        assert any(a), "inverse of zero"
        # extended Euclid in F_p[x] against the defining polynomial
        r0, r1 = self.defining, poly_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = poly_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, self.p), self.p)
        lead = pow(r0[-1], -1, self.p)
        inv = [c * lead % self.p for c in s0]
        out = self.element(inv)
        assert self.mul(out, a) == self.one()
        return out

    def in_prime_field(self, a) -> bool:
        return not any(a[1:])

    def elements_in_counter_order(self):
        for counter in range(1, self.order):
            yield self.element([(counter // self.p**i) % self.p for i in range(self.e)])

    def primitive_element(self) -> tuple[int, ...]:
        """First element (in counter order) of multiplicative order p^e - 1."""
        n = self.order - 1
        prime_divisors = list(factorize(n))
        for g in self.elements_in_counter_order():
            if all(self.pow(g, n // q) != self.one() for q in prime_divisors):
                return g
        raise AssertionError("no primitive element found")

    def nth_root_of_unity(self, n: int) -> tuple[int, ...]:
        assert (self.order - 1) % n == 0
        w = self.pow(self.primitive_element(), (self.order - 1) // n)
        assert self.pow(w, n) == self.one()
        for q in factorize(n):
            assert self.pow(w, n // q) != self.one()
        return w


def factor_xn_minus_1(n: int, p: int) -> list[tuple[CosetOrbit, list[int]]]:
    """Irreducible factors of x^n - 1 over F_p, one per Frobenius orbit.

    Each factor is built as the product of (x - w^i) over its orbit of
    exponents, with w a fixed primitive n-th root of unity in F_{p^e'},
    e' = ord_n(p); the coefficients are checked to land in the prime field.
    """
    assert is_prime(p) and math.gcd(n, p) == 1
    eprime = multiplicative_order(p, n)
    field = ExtField(p, eprime)
    w = field.nth_root_of_unity(n)
    out = []
    for orbit in frobenius_orbits(n, p):
        # polynomial over the extension field, little-endian
        poly = [field.one()]
        for i in orbit.members:
            root = field.pow(w, i)
            shifted = [field.zero()] + poly
            poly = [
                field.sub(shifted[j], field.mul(root, poly[j]) if j < len(poly) else field.zero())
                for j in range(len(shifted))
            ]
        assert all(field.in_prime_field(c) for c in poly)
        coeffs = [c[0] for c in poly]
        assert coeffs[-1] == 1 and len(coeffs) == orbit.size + 1
        out.append((orbit, coeffs))
    product = [1]
    for _, f in out:
        product = poly_mul(product, f, p)
    assert product == poly_trim([(-1) % p] + [0] * (n - 1) + [1])
    return out
