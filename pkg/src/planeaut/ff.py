"""Finite fields F_p and F_{p^e}, plus univariate polynomial arithmetic over them.

Prime-field elements are plain ints in [0, p).  Extension-field elements are
tuples of e ints (coefficients of 1, t, ..., t^{e-1} modulo the defining
polynomial).  Both field classes expose the same small method set, so the
polynomial routines below work over either.

Univariate polynomials are lists of field elements, lowest degree first, with
no trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import math
import random
from functools import cached_property, lru_cache
from itertools import product

import numpy as np


class IncompatibleFieldError(ValueError):
    """The requested root of unity does not exist in the field."""


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


def select_prime(d: int, orders: list[int]) -> int:
    """Smallest prime p > (d-1)(d-2)+1 with p = 1 mod lcm(orders)."""
    if d < 4:
        raise ValueError("degree must be at least 4")
    if not orders or any(o < 1 for o in orders):
        raise ValueError("orders must be a nonempty list of positive integers")
    L = math.lcm(*orders)
    floor = (d - 1) * (d - 2) + 1
    p = (floor // L) * L + 1
    while p <= floor or not is_prime(p):
        p += L
    return p


class PrimeField:
    """The prime field F_p with a full discrete-log table."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.e = 1
        self.q = p
        self.generator = self._smallest_primitive_root()
        exp = np.empty(p - 1, dtype=np.int64)
        log = np.full(p, -1, dtype=np.int64)
        x = 1
        for k in range(p - 1):
            exp[k] = x
            log[x] = k
            x = x * self.generator % p
        self.exp_table = exp
        self.log_table = log
        self.zero = 0
        self.one = 1

    def _smallest_primitive_root(self) -> int:
        p = self.p
        if p == 2:
            return 1
        qs = prime_factors(p - 1)
        for g in range(2, p):
            if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
                return g
        raise AssertionError("unreachable")

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    # element arithmetic
    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def from_int(self, n):
        return n % self.p

    def base_embed(self, a):
        return a % self.p

    def random(self, rng: random.Random, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    def elements(self):
        return range(self.p)

    def encode(self, a) -> int:
        return a

    def decode(self, n: int):
        return n

    def frobenius(self, a):
        return a

    def in_base(self, a):
        return True

    def to_base(self, a):
        return a

    def log(self, a) -> int:
        return discrete_log(self, a)

    def exp(self, k: int):
        return int(self.exp_table[k % (self.p - 1)])

    def fmt(self, a) -> str:
        return str(a)


def root_of_unity(F: PrimeField, m: int):
    """generator^((p-1)/m); raises if m does not divide p-1."""
    if m < 1 or (F.q - 1) % m:
        raise IncompatibleFieldError(f"no primitive {m}-th root of unity in F_{F.q}")
    return F.exp((F.q - 1) // m)


def discrete_log(F: PrimeField, x) -> int:
    if F.is_zero(x):
        raise ValueError("discrete log of zero")
    return int(F.log_table[F.encode(x) if F.e > 1 else x % F.p])


# ---------------------------------------------------------------------------
# univariate polynomials over a field object


def _trim(K, f):
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def padd(K, f, g):
    n = max(len(f), len(g))
    z = K.zero
    return _trim(K, [K.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)])


def psub(K, f, g):
    n = max(len(f), len(g))
    z = K.zero
    return _trim(K, [K.sub(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)])


def pscale(K, f, c):
    if K.is_zero(c):
        return []
    return [K.mul(a, c) for a in f]


def pmul(K, f, g):
    if not f or not g:
        return []
    if K.e == 1:
        p = K.p
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return _trim(K, [c % p for c in out])
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return _trim(K, out)


def pdivmod(K, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lc = K.inv(g[-1])
    if len(f) <= dg:
        return [], _trim(K, f)
    q = [K.zero] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if K.is_zero(c):
            continue
        c = K.mul(c, inv_lc)
        q[i - dg] = c
        for j in range(dg + 1):
            f[i - dg + j] = K.sub(f[i - dg + j], K.mul(c, g[j]))
    return _trim(K, q), _trim(K, f[:dg])


def pmod(K, f, g):
    return pdivmod(K, f, g)[1]


def pmonic(K, f):
    if not f:
        return f
    return pscale(K, f, K.inv(f[-1]))


def pgcd(K, f, g):
    f, g = _trim(K, f), _trim(K, g)
    while g:
        f, g = g, pmod(K, f, g)
    return pmonic(K, f)


def pderiv(K, f):
    return _trim(K, [K.mul(K.from_int(i), f[i]) for i in range(1, len(f))])


def peval(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def ppowmod(K, f, n, m):
    result = [K.one]
    base = pmod(K, f, m)
    while n:
        if n & 1:
            result = pmod(K, pmul(K, result, base), m)
        n >>= 1
        if n:
            base = pmod(K, pmul(K, base, base), m)
    return result


def presultant(K, f, g):
    """Resultant of two univariate polynomials (Euclidean algorithm)."""
    f, g = _trim(K, f), _trim(K, g)
    if not f or not g:
        return K.zero
    res = K.one
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return K.mul(res, K.pow(g[0], df))
        r = pmod(K, f, g)
        if not r:
            return K.zero
        dr = len(r) - 1
        if df % 2 == 1 and dg % 2 == 1:
            res = K.neg(res)
        res = K.mul(res, K.pow(g[-1], df - dr))
        f, g = g, r


def _x_pow_q_mod(K, f, k):
    """x^(q^k) mod f."""
    h = [K.zero, K.one] if len(f) > 2 else pmod(K, [K.zero, K.one], f)
    for _ in range(k):
        h = ppowmod(K, h, K.q, f)
    return h


def squarefree_part(K, f):
    """Product of the distinct irreducible factors of f (monic)."""
    f = pmonic(K, f)
    if len(f) <= 2:
        return f
    out = [K.one]
    for g, _ in squarefree_factorization(K, f):
        out = pmul(K, out, g)
    return out


def squarefree_factorization(K, f):
    """List of (g, multiplicity) with g squarefree, pairwise coprime."""
    f = pmonic(K, f)
    res = []
    if len(f) <= 1:
        return res
    p = K.p
    i = 1
    df = pderiv(K, f)
    if not df:
        return [(g, m * p) for g, m in squarefree_factorization(K, _pth_root(K, f))]
    c = pgcd(K, f, df)
    w = pdivmod(K, f, c)[0]
    while len(w) > 1:
        y = pgcd(K, w, c)
        z = pdivmod(K, w, y)[0]
        if len(z) > 1:
            res.append((pmonic(K, z), i))
        i += 1
        w = y
        c = pdivmod(K, c, y)[0]
    if len(c) > 1:
        for g, m in squarefree_factorization(K, _pth_root(K, c)):
            res.append((g, m * p))
    return res


def _pth_root(K, f):
    p = K.p
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        # invert Frobenius on coefficients: x -> x^(q/p)
        out.append(K.pow(c, K.q // p) if K.e > 1 else c)
    return _trim(K, out)


def distinct_degree(K, f):
    """Distinct-degree factorization of a monic squarefree f: [(g, deg)]."""
    res = []
    f = pmonic(K, f)
    h = [K.zero, K.one]
    k = 0
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        h = ppowmod(K, h, K.q, f)
        g = pgcd(K, f, psub(K, h, [K.zero, K.one]))
        if len(g) > 1:
            res.append((g, k))
            f = pdivmod(K, f, g)[0]
            h = pmod(K, h, f)
    if len(f) > 1:
        res.append((f, len(f) - 1))
    return res


def equal_degree(K, f, k, rng):
    """Split a monic squarefree f, all of whose factors have degree k."""
    n = len(f) - 1
    if n == k:
        return [f]
    if K.p == 2:
        raise NotImplementedError("characteristic 2 is not supported")
    while True:
        a = _trim(K, [K.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        g = pgcd(K, a, f)
        if len(g) > 1:
            break
        b = ppowmod(K, a, (K.q ** k - 1) // 2, f)
        g = pgcd(K, psub(K, b, [K.one]), f)
        if 1 < len(g) < len(f):
            break
    return equal_degree(K, g, k, rng) + equal_degree(K, pdivmod(K, f, g)[0], k, rng)


def factor(K, f, seed=0):
    """Irreducible monic factors of f with multiplicity, sorted canonically."""
    rng = random.Random(seed)
    out = []
    for g, mult in squarefree_factorization(K, f):
        for h, k in distinct_degree(K, g):
            for q in equal_degree(K, h, k, rng):
                out.append((q, mult))
    out.sort(key=lambda t: (len(t[0]), [K.encode(c) for c in t[0]], t[1]))
    return out


def roots(K, f, seed=0):
    """Distinct roots of f lying in K."""
    f = _trim(K, f)
    if len(f) <= 1:
        return []
    f = pmonic(K, f)
    xq = _x_pow_q_mod(K, f, 1)
    g = pgcd(K, f, psub(K, xq, [K.zero, K.one]))
    if len(g) <= 1:
        return []
    rng = random.Random(seed)
    lin = equal_degree(K, g, 1, rng)
    rs = [K.neg(h[0]) for h in lin]
    return sorted(rs, key=K.encode)


def is_irreducible(K, f) -> bool:
    """No roots in any F_{q^k}, k <= deg/2, and squarefree: Ben-Or style test."""
    f = pmonic(K, f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    h = [K.zero, K.one]
    for _ in range(1, n // 2 + 1):
        h = ppowmod(K, h, K.q, f)
        if len(pgcd(K, f, psub(K, h, [K.zero, K.one]))) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# extension fields


class ExtField:
    """F_{p^e} = F_p[t]/(modulus); elements are e-tuples of ints."""

    def __init__(self, base: PrimeField, modulus: list[int], check: bool = True):
        if len(modulus) < 2 or modulus[-1] % base.p != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if check and not is_irreducible(base, [c % base.p for c in modulus]):
            raise ValueError("modulus is not irreducible")
        self.base = base
        self.p = base.p
        self.e = len(modulus) - 1
        self.q = self.p ** self.e
        self.modulus = tuple(c % self.p for c in modulus)
        self.zero = (0,) * self.e
        self.one = (1,) + (0,) * (self.e - 1)

    @classmethod
    def standard(cls, base: PrimeField | int, e: int) -> "ExtField":
        if isinstance(base, int):
            base = PrimeField(base)
        return _standard_ext(base.p, e)

    def __repr__(self):
        return f"ExtField({self.p}^{self.e}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.modulus == self.modulus and other.p == self.p

    def __hash__(self):
        return hash(("E", self.p, self.modulus))

    def gen(self):
        """The class of t."""
        if self.e == 1:
            return (-self.modulus[0] % self.p,)
        return (0, 1) + (0,) * (self.e - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, e, mod = self.p, self.e, self.modulus
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(e):
                    prod[i - e + j] -= c * mod[j]
        return tuple(c % p for c in prod[:e])

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        """Extended Euclid in F_p[t] against the modulus."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        B = self.base
        r0, r1 = list(self.modulus), _trim(B, list(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = pdivmod(B, r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, psub(B, s0, pmul(B, quo, s1))
        c = B.inv(r1[0])
        out = [x * c % self.p for x in s1] + [0] * self.e
        return tuple(out[: self.e])

    def is_zero(self, a):
        return not any(a)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.e - 1)

    def base_embed(self, a):
        return self.from_int(a)

    def random(self, rng: random.Random, nonzero=False):
        while True:
            a = tuple(rng.randrange(self.p) for _ in range(self.e))
            if not nonzero or any(a):
                return a

    def elements(self):
        for t in product(range(self.p), repeat=self.e):
            yield tuple(reversed(t))

    def encode(self, a) -> int:
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def decode(self, n: int):
        out = []
        for _ in range(self.e):
            n, r = divmod(n, self.p)
            out.append(r)
        return tuple(out)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def in_base(self, a):
        return not any(a[1:])

    def to_base(self, a):
        if not self.in_base(a):
            raise ValueError("element is not in the prime field")
        return a[0]

    @cached_property
    def _tables(self):
        """(exp, log) tables; only sensible for small q."""
        q = self.q
        g = self._primitive_element()
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = self.one
        for k in range(q - 1):
            n = self.encode(x)
            exp[k] = n
            log[n] = k
            x = self.mul(x, g)
        return exp, log

    def _primitive_element(self):
        qs = prime_factors(self.q - 1)
        for n in range(1, self.q):
            a = self.decode(n)
            if all(self.pow(a, (self.q - 1) // r) != self.one for r in qs):
                return a
        raise AssertionError("unreachable")

    @property
    def exp_table(self):
        return self._tables[0]

    @property
    def log_table(self):
        return self._tables[1]

    def log(self, a) -> int:
        return discrete_log(self, a)

    def exp(self, k: int):
        return self.decode(int(self.exp_table[k % (self.q - 1)]))

    def fmt(self, a) -> str:
        terms = []
        for i, c in enumerate(a):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*t" if i == 1 else f"{c}*t^{i}"))
        return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def _standard_ext(p: int, e: int) -> ExtField:
    F = PrimeField(p)
    if e == 1:
        return ExtField(F, [0, 1])
    for tail in product(range(p), repeat=e):
        # lexicographic on (c_{e-1}, ..., c_0); constant term must be nonzero
        coeffs = list(reversed(tail))
        if coeffs[0] == 0:
            continue
        mod = coeffs + [1]
        if is_irreducible(F, mod):
            return ExtField(F, mod)
    raise AssertionError("no irreducible polynomial found")


def field_for(p: int, e: int = 1):
    """F_p as a PrimeField when e == 1, else the standard F_{p^e}."""
    if e == 1:
        return _prime_field(p)
    return _standard_ext(p, e)


@lru_cache(maxsize=None)
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def embed_poly(K, f):
    """Map a polynomial with F_p int coefficients into K."""
    return _trim(K, [K.base_embed(c) for c in f])
