"""Finite fields GF(p^m) and the cubic extensions used for Singer sets.

Elements of GF(p^m) are plain ints in ``[0, p^m)``: base-p digit ``i`` is the
coefficient of ``alpha^i`` where ``alpha`` is a root of the field's primitive
modulus.  Polynomials are written as coefficient tuples from the highest
degree down, so ``(1, 0, 1, 1)`` is ``x^3 + x + 1``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import InvalidInput, NotPrimePower

MAX_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise NotPrimePower otherwise."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrimePower(f"{q} = " + "*".join(map(str, ps)) + "... is not a prime power")
    p = ps[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotPrimePower:
        return False
    return True


class FiniteField:
    """GF(p^m) with log/antilog tables.

    Build with :meth:`FiniteField.of` (cached) rather than directly.
    """

    def __init__(self, p: int, m: int, modulus_poly: tuple[int, ...]):
        if not is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if m < 1 or len(modulus_poly) != m + 1 or modulus_poly[0] != 1:
            raise InvalidInput("modulus must be monic of degree m")
        self.p = p
        self.m = m
        self.q = p**m
        if self.q > MAX_ORDER:
            raise InvalidInput(f"field order {self.q} exceeds {MAX_ORDER}")
        self.modulus_poly = tuple(modulus_poly)
        powers = _powers_of_root(p, m, self.modulus_poly)
        if powers is None:
            raise InvalidInput(f"{modulus_poly} is not primitive over GF({p})")
        self._exp = powers + powers  # doubled so exp[i + j] needs no reduction
        self._log = [0] * self.q
        for i, x in enumerate(powers):
            self._log[x] = i
        self._add = [[_digit_add(a, b, p, m) for b in range(self.q)] for a in range(self.q)]
        self._neg = [_digit_neg(a, p, m) for a in range(self.q)]

    @staticmethod
    @lru_cache(maxsize=None)
    def of(q: int) -> "FiniteField":
        p, m = factor_prime_power(q)
        return FiniteField(p, m, first_primitive_poly(p, m))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    @property
    def order(self) -> int:
        return self.q

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def generator(self) -> int:
        """The root of the modulus, a primitive element."""
        return self._exp[1]

    def add_table(self) -> list[list[int]]:
        return [row[:] for row in self._add]

    def mul_table(self) -> list[list[int]]:
        return [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)]


def _digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _digit_add(a, b, p, m):
    return _undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)


def _digit_neg(a, p, m):
    return _undigits([(-x) % p for x in _digits(a, p, m)], p)


def _powers_of_root(p: int, m: int, poly: tuple[int, ...]) -> list[int] | None:
    """Successive powers of x modulo ``poly`` over GF(p), if x is primitive.

    Returns the list ``[x^0, ..., x^(p^m - 2)]`` encoded as ints, or None when
    x does not have multiplicative order exactly ``p^m - 1``.
    """
    q = p**m
    low = [c % p for c in reversed(poly[1:])]  # x^m = -(low[0] + low[1] x + ...)
    cur = [1] + [0] * (m - 1)
    out = []
    for k in range(q - 1):
        code = _undigits(cur, p)
        if k > 0 and code == 1:
            return None
        out.append(code)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * l) % p for c, l in zip(cur, low)]
    return out if _undigits(cur, p) == 1 else None


@lru_cache(maxsize=None)
def first_primitive_poly(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically first monic primitive polynomial of degree m over GF(p)."""
    for tail in product(range(p), repeat=m):
        if tail[-1] == 0:
            continue
        poly = (1,) + tail
        if _powers_of_root(p, m, poly) is not None:
            return poly
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


class CubicExtension:
    """GF(q^3) realised as GF(q)[x] / (x^3 + c2 x^2 + c1 x + c0).

    Elements are triples ``(a0, a1, a2)`` meaning ``a0 + a1 x + a2 x^2`` with
    coefficients in the base field.
    """

    def __init__(self, base: FiniteField, modulus_poly: tuple[int, int, int, int] | None = None):
        self.base = base
        q = base.q
        self.order = q**3
        if modulus_poly is None:
            modulus_poly = self._first_primitive_cubic()
        elif not self._is_primitive(modulus_poly):
            raise InvalidInput(f"{modulus_poly} is not a primitive cubic over {base}")
        self.modulus_poly = tuple(modulus_poly)

    def _reduce_terms(self, coeffs: list[int], poly) -> tuple[int, int, int]:
        F = self.base
        _, c2, c1, c0 = poly
        c = list(coeffs)
        for deg in range(len(c) - 1, 2, -1):
            t = c[deg]
            if t:
                # x^deg = x^(deg-3) * x^3 and x^3 = -(c2 x^2 + c1 x + c0)
                for off, coef in ((2, c2), (1, c1), (0, c0)):
                    c[deg - 3 + off] = F.sub(c[deg - 3 + off], F.mul(t, coef))
            c[deg] = 0
        return (c[0], c[1], c[2])

    def _mul(self, a, b, poly):
        F = self.base
        prod = [0] * 5
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        return self._reduce_terms(prod, poly)

    def mul(self, a, b):
        return self._mul(a, b, self.modulus_poly)

    def _pow(self, a, k, poly):
        result = (1, 0, 0)
        while k:
            if k & 1:
                result = self._mul(result, a, poly)
            a = self._mul(a, a, poly)
            k >>= 1
        return result

    def pow(self, a, k):
        return self._pow(a, k, self.modulus_poly)

    def _is_primitive(self, poly) -> bool:
        F = self.base
        _, c2, c1, c0 = poly
        if c0 == 0:
            return False
        for r in F.elements():  # a cubic with a root is reducible
            val = F.add(F.add(F.pow(r, 3), F.mul(c2, F.pow(r, 2))), F.add(F.mul(c1, r), c0))
            if val == 0:
                return False
        n = self.order - 1
        x = (0, 1, 0)
        if self._pow(x, n, poly) != (1, 0, 0):
            return False
        return all(self._pow(x, n // r, poly) != (1, 0, 0) for r in prime_factors(n))

    def _first_primitive_cubic(self):
        q = self.base.q
        for c2, c1, c0 in product(range(q), repeat=3):
            poly = (1, c2, c1, c0)
            if self._is_primitive(poly):
                return poly
        raise AssertionError(f"no primitive cubic over {self.base}")
