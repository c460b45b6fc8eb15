"""Exact arithmetic in GF(p^m).

Elements are plain Python ints in ``range(q)``.  The integer ``v`` encodes
the residue class ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` through
``v = sum(c_i * p**i)``, so 0 and 1 are the additive and multiplicative
identities and ``range(q)`` enumerates the field in canonical order.

The defining modulus is the monic irreducible polynomial of degree ``m``
with the smallest integer encoding (``sum(c_i * p**i)`` over all ``m + 1``
coefficients).  Multiplication uses exp/log tables built from the canonical
primitive element; addition in odd extension fields uses Zech logarithms.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DivisionByZero, FieldTooLarge, NonPrimeP, NotASquare, WrongResidueClass

MAX_FIELD_ORDER = 2**20
EXHAUSTIVE_SQRT_LIMIT = 2**12

Poly = list  # coefficient list of field elements, constant term first


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raise ValueError if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# --- polynomials over the prime field GF(p), coefficient lists constant-first ---


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, mod, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Ben-Or test: monic ``f`` of degree m is irreducible over GF(p) iff
    gcd(f, x^(p^i) - x) = 1 for every 1 <= i <= m // 2."""
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    power = x
    for _ in range(m // 2):
        # power <- power^p mod f
        acc = [1]
        base = power
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _decode(v: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _encode(coeffs: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(coeffs)):
        v = v * p + c
    return v


def canonical_modulus(p: int, m: int) -> list[int]:
    """Smallest-encoding monic irreducible polynomial of degree ``m`` over GF(p)."""
    if m == 1:
        return [0, 1]
    for enc in range(p**m, 2 * p**m):
        coeffs = _decode(enc, p, m + 1)
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^m) with its canonical modulus.

    Build instances with :func:`make_field`; the constructor does not search
    for a modulus.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", self.p**self.m)

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- construction helpers (used before the log tables exist) --

    def _slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        if p == 2:
            out = 0
            top = 1 << m
            red = _encode(self.modulus, 2)
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= red
            return out
        da, db = _decode(a, p, m), _decode(b, p, m)
        return _encode(_pmulmod(_trim(da), _trim(db), list(self.modulus), p) or [0], p)

    def _slow_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    @functools.cached_property
    def _primitive(self) -> int:
        if self.q == 2:
            return 1
        n = self.q - 1
        cofactors = [n // r for r in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @functools.cached_property
    def _tables(self) -> tuple[list[int], list[int], list[int]]:
        """(exp, log, zech).  exp has length 2(q-1) so products need no mod;
        zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0."""
        q, p = self.q, self.p
        n = q - 1
        g = self._primitive
        exp = [0] * (2 * n)
        log = [0] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[n:] = exp[:n]
        zech = [-1] * n
        if p != 2 and self.m > 1:
            for k in range(n):
                v = exp[k]
                c0 = v % p
                w = v - c0 + (c0 + 1) % p
                zech[k] = log[w] if w else -1
        return exp, log, zech

    # -- arithmetic --

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.m == 1:
            return (x + y) % self.p
        if x == 0:
            return y
        if y == 0:
            return x
        exp, log, zech = self._tables
        lx = log[x]
        d = log[y] - lx
        if d < 0:
            d += self.q - 1
        z = zech[d]
        if z < 0:
            return 0
        return exp[lx + z]

    def neg(self, x: int) -> int:
        if self.p == 2 or x == 0:
            return x
        if self.m == 1:
            return self.p - x
        exp, log, _ = self._tables
        return exp[log[x] + (self.q - 1) // 2]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        exp, log, _ = self._tables
        return exp[log[x] + log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("0 has no inverse")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        exp, log, _ = self._tables
        return exp[(self.q - 1 - log[x]) % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        """Square-and-multiply; negative exponents invert first."""
        if e < 0:
            x, e = self.inv(x), -e
        acc = 1
        while e:
            if e & 1:
                acc = self.mul(acc, x)
            x = self.mul(x, x)
            e >>= 1
        return acc

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def prod(self, xs: Iterable[int]) -> int:
        acc = 1
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def sum(self, xs: Iterable[int]) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    # -- structure --

    def enumerate(self) -> list[int]:
        return list(range(self.q))

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise DivisionByZero("0 has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(x, n // r) == 1:
                n //= r
        return n

    def primitive_element(self) -> int:
        return self._primitive

    def is_square(self, x: int) -> bool:
        if x == 0 or self.p == 2:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1

    def sqrt(self, x: int) -> int:
        """Square root; the smaller-encoding root in odd characteristic."""
        if x == 0:
            return 0
        if self.p == 2:
            return self.pow(x, 2 ** (self.m - 1))
        if not self.is_square(x):
            raise NotASquare(f"{x} is not a square in {self!r}")
        if self.q <= EXHAUSTIVE_SQRT_LIMIT:
            for y in range(1, self.q):
                if self.mul(y, y) == x:
                    return y
            raise AssertionError("square without a root")  # pragma: no cover
        y = self._tonelli_shanks(x)
        return min(y, self.neg(y))

    def _tonelli_shanks(self, x: int) -> int:
        q1 = self.q - 1
        s, t = 0, q1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = next(c for c in range(2, self.q) if not self.is_square(c))
        c = self.pow(z, t)
        r = self.pow(x, (t + 1) // 2)
        u = self.pow(x, t)
        while u != 1:
            i, w = 0, u
            while w != 1:
                w = self.mul(w, w)
                i += 1
            b = self.pow(c, 2 ** (s - i - 1))
            s = i
            c = self.mul(b, b)
            r = self.mul(r, b)
            u = self.mul(u, c)
        return r

    def fourth_root_of_minus_one(self) -> int:
        """gamma^((q-1)/4) for the canonical primitive gamma; squares to -1."""
        if self.q % 4 != 1:
            raise WrongResidueClass(f"q = {self.q} is not 1 mod 4")
        return self.pow(self._primitive, (self.q - 1) // 4)

    # -- polynomials over this field --

    def poly_eval(self, poly: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = self.add(out[i + j], self.mul(ai, bj))
        return _trim(out)

    # -- serialization --

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict | str) -> FieldSpec:
        if isinstance(data, str):
            data = json.loads(data)
        f = make_field(int(data["p"]), int(data["m"]))
        if "modulus" in data and list(data["modulus"]) != list(f.modulus):
            raise ValueError(f"non-canonical modulus {data['modulus']} for {f!r}")
        return f


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """Return GF(p^m) with the canonical smallest-encoding irreducible modulus.

    >>> make_field(2, 4).modulus
    (1, 1, 0, 0, 1)
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"{p}^{m} exceeds the cap {MAX_FIELD_ORDER}")
    return FieldSpec(p, m, tuple(canonical_modulus(p, m)))


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power ``q``."""
    try:
        p, m = prime_power(q)
    except ValueError as exc:
        raise NonPrimeP(str(exc)) from None
    return make_field(p, m)


def modulus_encoding(f: FieldSpec) -> int:
    return _encode(f.modulus, f.p)
