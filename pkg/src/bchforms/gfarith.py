"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^m), q = p^e.

Elements are plain integers.  A GF(q) element is the integer whose base-p
digits are its coordinates over GF(p) (polynomial basis of the base
modulus).  A GF(q^m) element is the integer whose base-q digits are its
coordinates over GF(q) (polynomial basis of the extension modulus); nested
with the base-p encoding this makes the base-p digits of the integer the
full coordinate vector over GF(p).  Zero is 0, one is 1, and GF(q) sits
inside GF(q^m) as the indices 0..q-1.

Multiplication in the extension goes through discrete-log tables built at
construction time; addition goes through a precomputed base-p digit matrix.
All tables are immutable after construction, so contexts are safe to share
across worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache

import numpy as np

from .errors import BchFormsError, EvenCharacteristic, InvalidSubfield, NotPrime, ReducibleModulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n stays desk-scale here)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Polynomials over a small field.
#
# A Poly is a plain list of field element indices, lowest degree first, with
# no trailing zeros ([] is the zero polynomial).  These are only used at
# construction/desk scale, so clarity beats speed.
# ---------------------------------------------------------------------------


def poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(c: list[int]) -> int:
    return len(c) - 1


def poly_add(F: "SmallField", a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = F.add_el(x, y)
    return poly_trim(out)


def poly_scale(F: "SmallField", a: list[int], s: int) -> list[int]:
    return poly_trim([F.mul_el(c, s) for c in a])


def poly_mul(F: "SmallField", a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add_el(out[i + j], F.mul_el(x, y))
    return poly_trim(out)


def poly_divmod(F: "SmallField", a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv_el(b[-1])
    while len(r) >= len(b):
        c = F.mul_el(r[-1], inv_lead)
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] = F.sub_el(r[d + i], F.mul_el(c, y))
        poly_trim(r)
        if not r:
            break
    return poly_trim(q), r


def poly_mod(F: "SmallField", a: list[int], b: list[int]) -> list[int]:
    return poly_divmod(F, a, b)[1]


def poly_gcd(F: "SmallField", a: list[int], b: list[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_mod(F, a, b)
    if a:
        a = poly_scale(F, a, F.inv_el(a[-1]))
    return a


def poly_powmod(F: "SmallField", a: list[int], k: int, mod: list[int]) -> list[int]:
    result = [1]
    base = poly_mod(F, a, mod)
    while k:
        if k & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        k >>= 1
    return result


def poly_eval(F: "SmallField", a: list[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add_el(F.mul_el(acc, x), c)
    return acc


def poly_is_irreducible(F: "SmallField", f: list[int]) -> bool:
    """Irreducibility over GF(q) via the Frobenius criterion:
    x^(q^d) == x mod f, and gcd(x^(q^(d/r)) - x, f) = 1 for prime r | d."""
    d = poly_deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    q = F.q
    x = [0, 1]
    frob = poly_powmod(F, x, q ** d, f)
    if frob != poly_mod(F, x, f):
        return False
    for r in factorize(d):
        g = poly_powmod(F, x, q ** (d // r), f)
        g = poly_add(F, g, poly_scale(F, x, F.neg_el(1)))
        if poly_deg(poly_gcd(F, g, f)) != 0:
            return False
    return True


def monic_poly_from_code(F: "SmallField", degree: int, code: int) -> list[int]:
    """Monic degree-d polynomial whose lower coefficients are the base-q
    digits of `code` (code = 0 gives x^d)."""
    coeffs = []
    for _ in range(degree):
        coeffs.append(code % F.q)
        code //= F.q
    return coeffs + [1]


def smallest_irreducible(F: "SmallField", degree: int) -> list[int]:
    for code in range(F.q ** degree):
        f = monic_poly_from_code(F, degree, code)
        if poly_is_irreducible(F, f):
            return f
    raise BchFormsError(f"no irreducible of degree {degree} over GF({F.q})")  # unreachable


# ---------------------------------------------------------------------------
# GF(q) = GF(p^e)
# ---------------------------------------------------------------------------


class SmallField:
    """GF(p^e) with dense operation tables.

    Intended for small q (nothing here needs more than q = 9);
    the q x q tables keep hot loops branch-free.
    """

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise BchFormsError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e

        if e == 1:
            self.modulus = [0, 1]
        else:
            Fp = SmallField(p, 1)
            self.modulus = smallest_irreducible(Fp, e)

        q, pp = self.q, self.p
        digs = np.zeros((q, e), dtype=np.int64)
        v = np.arange(q)
        for i in range(e):
            digs[:, i] = v % pp
            v //= pp
        self._digits = digs
        ppow = pp ** np.arange(e)
        self.add = ((digs[:, None, :] + digs[None, :, :]) % pp @ ppow).astype(np.uint8)
        self.neg = (((-digs) % pp) @ ppow).astype(np.uint8)

        mul = np.zeros((q, q), dtype=np.uint8)
        if e == 1:
            mul[:, :] = (np.arange(q)[:, None] * np.arange(q)[None, :]) % pp
        else:
            Fp = SmallField(p, 1)
            for a in range(q):
                ca = [int(x) for x in digs[a]]
                for b in range(a, q):
                    cb = [int(x) for x in digs[b]]
                    prod = poly_mod(Fp, poly_mul(Fp, ca, cb), self.modulus)
                    prod = prod + [0] * (e - len(prod))
                    val = sum(c * pp ** i for i, c in enumerate(prod))
                    mul[a, b] = val
                    mul[b, a] = val
        self.mul = mul

        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = np.nonzero(mul[a] == 1)[0][0]
        self.inv = inv

        squares = sorted({int(mul[a, a]) for a in range(1, q)})
        self.squares = frozenset(squares)
        eta = np.zeros(q, dtype=np.int64)
        if p != 2:
            for a in range(1, q):
                eta[a] = 1 if a in self.squares else -1
        self._eta = eta

    # scalar ops (ints in 0..q-1)
    def add_el(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def sub_el(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def neg_el(self, a: int) -> int:
        return int(self.neg[a])

    def mul_el(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv_el(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.inv[a])

    def quadratic_character(self, a: int) -> int:
        """eta(a): +1 for nonzero squares, -1 for nonsquares, 0 at zero."""
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd q")
        return int(self._eta[a])

    def upsilon(self, a: int) -> int:
        """-1 on nonzero elements, q-1 at zero."""
        return self.q - 1 if a == 0 else -1

    def half(self, a: int) -> int:
        """a/2, only defined in odd characteristic."""
        if self.p == 2:
            raise EvenCharacteristic("no 1/2 in characteristic two")
        return self.mul_el(a, self.inv_el(self.add_el(1, 1)))

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"SmallField(p={self.p}, e={self.e})"


@lru_cache(maxsize=None)
def small_field(q: int) -> SmallField:
    """SmallField for a prime power q (cached)."""
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, e), = fac.items()
    return SmallField(p, e)


def quadratic_character(q: int, a: int) -> int:
    return small_field(q).quadratic_character(a)


def upsilon(q: int, a: int) -> int:
    return small_field(q).upsilon(a)


def eta_minus_one(q: int) -> int:
    """eta(-1) for odd q."""
    F = small_field(q)
    return F.quadratic_character(F.neg_el(1))


# ---------------------------------------------------------------------------
# GF(q^m)
# ---------------------------------------------------------------------------


@dataclass
class FieldContext:
    """The tower GF(p) < GF(q) < GF(q^m) with log/exp tables.

    Immutable after construction; every table is read-only from then on.
    """

    base: SmallField
    m: int
    ext_modulus: list[int]
    alpha: int = 0
    exp_index: np.ndarray = dataclass_field(default=None, repr=False)
    log_index: np.ndarray = dataclass_field(default=None, repr=False)
    _pdigits: np.ndarray = dataclass_field(default=None, repr=False)
    _ppow: np.ndarray = dataclass_field(default=None, repr=False)
    _trace_vec: np.ndarray = dataclass_field(default=None, repr=False)
    _half_trace_vec: np.ndarray = dataclass_field(default=None, repr=False)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def e(self) -> int:
        return self.base.e

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def size(self) -> int:
        return self.q ** self.m

    @property
    def n(self) -> int:
        return self.size - 1

    # -- element coordinates --------------------------------------------

    def coeff_vector(self, x: int) -> list[int]:
        """Coordinates of x over GF(q) in the polynomial basis."""
        out = []
        for _ in range(self.m):
            out.append(x % self.q)
            x //= self.q
        return out

    def from_coeffs(self, coeffs) -> int:
        return sum(int(c) * self.q ** i for i, c in enumerate(coeffs))

    # -- ring operations -------------------------------------------------

    def add(self, x: int, y: int) -> int:
        d = (self._pdigits[x] + self._pdigits[y]) % self.p
        return int(d @ self._ppow)

    def neg(self, x: int) -> int:
        d = (-self._pdigits[x]) % self.p
        return int(d @ self._ppow)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def add_vec(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        d = (self._pdigits[xs] + self._pdigits[ys]) % self.p
        return d @ self._ppow

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp_index[(int(self.log_index[x]) + int(self.log_index[y])) % self.n])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp_index[(-int(self.log_index[x])) % self.n])

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            return 0 if k > 0 else 1
        return int(self.exp_index[(int(self.log_index[x]) * k) % self.n])

    def scalar_mul(self, c: int, x: int) -> int:
        """c in GF(q) times x; GF(q) embeds as indices < q."""
        return self.mul(c, x)

    def frob(self, x: int, j: int = 1) -> int:
        """x^(q^j)."""
        return self.pow(x, self.q ** j)

    def in_base(self, x: int) -> bool:
        return x < self.q

    @property
    def half_step(self) -> int:
        """Index step of GF(q^(m/2))* inside the log group: q^(m/2)+1."""
        if self.m % 2:
            raise InvalidSubfield("GF(q^(m/2)) needs even m")
        return self.q ** (self.m // 2) + 1

    def in_half(self, x: int) -> bool:
        if x == 0:
            return True
        return int(self.log_index[x]) % self.half_step == 0

    def half_subfield_elements(self) -> list[int]:
        """All q^(m/2) elements of GF(q^(m/2)) as GF(q^m) indices."""
        s = self.half_step
        return [0] + [int(self.exp_index[(t * s) % self.n]) for t in range(self.q ** (self.m // 2) - 1)]

    # -- traces -----------------------------------------------------------

    def trace_to(self, x: int, subfield_degree: int = 1) -> int:
        """Relative trace from GF(q^m) down to GF(q^subfield_degree).

        subfield_degree must be 1 or m/2 (m even); the result is returned as
        a GF(q^m) index, which for degree 1 is also the GF(q) value.
        """
        d = subfield_degree
        if d == self.m:
            return x
        if d != 1 and (self.m % 2 or d != self.m // 2):
            raise InvalidSubfield(f"no trace target GF(q^{d}) in this tower")
        acc = 0
        y = x
        for _ in range(self.m // d):
            acc = self.add(acc, y)
            y = self.frob(y, d)
        return acc

    def trace_to_base(self, x: int) -> int:
        return self.trace_to(x, 1)

    def subfield_trace_to_base(self, y: int) -> int:
        """Trace of the half field GF(q^(m/2)) down to GF(q); y must lie in it."""
        if not self.in_half(y):
            raise InvalidSubfield("element is not in GF(q^(m/2))")
        acc = 0
        z = y
        for _ in range(self.m // 2):
            acc = self.add(acc, z)
            z = self.frob(z)
        if not self.in_base(acc):
            raise BchFormsError("half-field trace left GF(q)")  # internal bug
        return acc

    # -- whole-orbit value tables -----------------------------------------

    @property
    def trace_vec(self) -> np.ndarray:
        """trace_vec[t] = Tr_{GF(q^m)->GF(q)}(alpha^t), int64 of length n."""
        if self._trace_vec is None:
            n, q = self.n, self.q
            acc = np.zeros((n, self._pdigits.shape[1]), dtype=np.int64)
            t = np.arange(n, dtype=np.int64)
            for j in range(self.m):
                idx = (t * pow(self.q, j, n)) % n
                acc += self._pdigits[self.exp_index[idx]]
            vals = (acc % self.p) @ self._ppow
            if (vals >= q).any():
                raise BchFormsError("trace left GF(q)")  # internal bug
            self._trace_vec = vals.astype(np.int64)
        return self._trace_vec

    @property
    def half_trace_vec(self) -> np.ndarray:
        """half_trace_vec[t] = Tr_{GF(q^(m/2))->GF(q)}(alpha^t), valid only at
        exponents t that are multiples of q^(m/2)+1 (zero elsewhere)."""
        if self._half_trace_vec is None:
            s = self.half_step
            n, q = self.n, self.q
            t = np.arange(0, n, s, dtype=np.int64)
            acc = np.zeros((len(t), self._pdigits.shape[1]), dtype=np.int64)
            for j in range(self.m // 2):
                idx = (t * pow(self.q, j, n)) % n
                acc += self._pdigits[self.exp_index[idx]]
            vals = (acc % self.p) @ self._ppow
            if (vals >= q).any():
                raise BchFormsError("half trace left GF(q)")  # internal bug
            out = np.zeros(n, dtype=np.int64)
            out[t] = vals
            self._half_trace_vec = out
        return self._half_trace_vec

    def to_spec(self) -> dict:
        """JSON-serializable field description."""
        return {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "base_modulus": [int(c) for c in self.base.modulus],
            "ext_modulus": [int(c) for c in self.ext_modulus],
        }

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.q}^{self.m}), ext_modulus={self.ext_modulus})"


def build_field(p: int, e: int, m: int, ext_modulus: list[int] | None = None) -> FieldContext:
    """Construct the tower GF(p) < GF(p^e) < GF(p^(e*m)).

    With no modulus given, the monic irreducible of degree m over GF(q)
    with the smallest integer encoding (base-q digits of the non-leading
    coefficients) is chosen, and alpha is the smallest element index of
    multiplicative order q^m - 1.  Both choices are deterministic.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise BchFormsError("e and m must be >= 1")
    base = SmallField(p, e)
    q = base.q

    if ext_modulus is None:
        ext_modulus = smallest_irreducible(base, m)
    else:
        ext_modulus = list(ext_modulus)
        if len(ext_modulus) != m + 1 or ext_modulus[-1] != 1:
            raise ReducibleModulus("extension modulus must be monic of degree m")
        if not poly_is_irreducible(base, ext_modulus):
            raise ReducibleModulus(f"{ext_modulus} is reducible over GF({q})")

    ctx = FieldContext(base=base, m=m, ext_modulus=ext_modulus)
    size = q ** m
    n = size - 1
    p_count = base.e * m

    # base-p digit matrix for vectorized addition
    digs = np.zeros((size, p_count), dtype=np.int64)
    v = np.arange(size)
    for i in range(p_count):
        digs[:, i] = v % p
        v //= p
    ctx._pdigits = digs
    ctx._ppow = p ** np.arange(p_count, dtype=np.int64)

    # find alpha: smallest element index of order n
    def el_mul(x: int, y: int) -> int:
        cx = [x // q ** i % q for i in range(m)]
        cy = [y // q ** i % q for i in range(m)]
        prod = poly_mod(base, poly_mul(base, cx, cy), ext_modulus)
        return sum(c * q ** i for i, c in enumerate(prod))

    def el_pow(x: int, k: int) -> int:
        r = 1
        b = x
        while k:
            if k & 1:
                r = el_mul(r, b)
            b = el_mul(b, b)
            k >>= 1
        return r

    nfac = factorize(n) if n > 1 else {}
    alpha = 0
    for cand in range(1, size):
        if n == 1:
            alpha = cand  # GF(2): the only unit
            break
        if el_pow(cand, n) != 1:
            continue
        if all(el_pow(cand, n // r) != 1 for r in nfac):
            alpha = cand
            break
    if alpha == 0:
        raise BchFormsError("no primitive element found")  # impossible for a field
    ctx.alpha = alpha

    # exp table: iterate the GF(p)-linear map "multiply by alpha"
    A = np.zeros((p_count, p_count), dtype=np.int64)
    for i in range(p_count):
        prod = el_mul(alpha, int(p ** i))
        A[:, i] = digs[prod]
    exp_digits = np.zeros((n, p_count), dtype=np.int64)
    vcur = digs[1].copy()
    for k in range(n):
        exp_digits[k] = vcur
        vcur = (A @ vcur) % p
    if not np.array_equal(vcur, digs[1]):
        raise BchFormsError("alpha order mismatch")  # internal bug
    exp_index = (exp_digits @ ctx._ppow).astype(np.int64)
    log_index = np.full(size, -1, dtype=np.int64)
    log_index[exp_index] = np.arange(n)
    if (log_index[1:] < 0).any():
        raise BchFormsError("exp table is not a bijection")  # internal bug
    ctx.exp_index = exp_index
    ctx.log_index = log_index
    return ctx


@lru_cache(maxsize=None)
def field_for(q: int, m: int) -> FieldContext:
    """Cached canonical FieldContext for GF(q^m), q a prime power."""
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, e), = fac.items()
    return build_field(p, e, m)
