"""Exact arithmetic for valued fields with value group Z.

Two field backends share one element interface:

* ``Field.padic(p)``: the rational numbers carrying the p-adic valuation.
  Elements are reduced fractions of arbitrary-precision integers.
* ``Field.ratfunc(char)``: rational functions in one variable ``t`` with the
  order-of-vanishing valuation at ``t = 0``.  Coefficients live in Q when the
  characteristic is 0 and in the prime field F_q otherwise.  Canonical form
  keeps numerator and denominator coprime with a monic denominator.

Elements are immutable; all operations are pure and exact.
"""
from __future__ import annotations

import math
import random
import warnings
from fractions import Fraction
from typing import Optional, Sequence, Union


class ParseError(ValueError):
    """Element text does not match the grammar."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Valuation:
    """An integer extended with +infinity, the codomain of valuation maps.

    Infinity compares above every integer and is absorbing for addition;
    ``Valuation(None)`` (also exported as ``INFINITY``) is the value of 0.
    """

    __slots__ = ("_v",)

    def __init__(self, value: Optional[int] = None):
        if value is not None and not isinstance(value, int):
            raise TypeError(f"valuation must be an int or None, got {value!r}")
        self._v = value

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> int:
        """The finite value; raises on infinity."""
        if self._v is None:
            raise ValueError("infinite valuation has no integer value")
        return self._v

    @staticmethod
    def _coerce(other: Union["Valuation", int]) -> "Valuation":
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int):
            return Valuation(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["Valuation", int]) -> "Valuation":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._v is None or o._v is None:
            return INFINITY
        return Valuation(self._v + o._v)

    __radd__ = __add__

    def __neg__(self) -> "Valuation":
        return Valuation(-self.value)

    def __sub__(self, other: Union["Valuation", int]) -> "Valuation":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._v is None:
            return INFINITY
        return Valuation(self._v - o.value)

    def _key(self):
        return (1, 0) if self._v is None else (0, self._v)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Valuation(other)
        if not isinstance(other, Valuation):
            return NotImplemented
        return self._v == other._v

    def __hash__(self):
        return hash(("Valuation", self._v))

    def __lt__(self, other):
        o = self._coerce(other)
        return self._key() < o._key()

    def __le__(self, other):
        o = self._coerce(other)
        return self._key() <= o._key()

    def __gt__(self, other):
        o = self._coerce(other)
        return self._key() > o._key()

    def __ge__(self, other):
        o = self._coerce(other)
        return self._key() >= o._key()

    def __repr__(self) -> str:
        return "inf" if self._v is None else str(self._v)


INFINITY = Valuation(None)


# ---------------------------------------------------------------------------
# primality

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# The fixed witness set above is known to be a correct deterministic test
# for every n below 3.3 * 10**24, which covers the documented bound.
_DETERMINISTIC_BOUND = 2**64


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic Miller-Rabin below 2**64 (fixed witness
    set, valid far beyond that bound), 40 rounds with bases drawn from a
    generator seeded by ``n`` above it."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < _DETERMINISTIC_BOUND:
        return _miller_rabin(n, _MR_WITNESSES)
    rng = random.Random(n)
    bases = [rng.randrange(2, n - 1) for _ in range(40)]
    return _miller_rabin(n, bases)


def _check_prime(p: int, role: str) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"{role} must be an integer >= 2, got {p!r}")
    if p >= _DETERMINISTIC_BOUND:
        if not is_prime(p):
            raise ValueError(f"{role} {p} is composite")
        warnings.warn(
            f"{role} {p} exceeds {_DETERMINISTIC_BOUND}; primality verified "
            "only probabilistically (40 Miller-Rabin rounds)",
            stacklevel=3,
        )
    elif not is_prime(p):
        raise ValueError(f"{role} {p} is not prime")


def _int_val(n: int, p: int) -> int:
    """Multiplicity of the prime p in the nonzero integer n."""
    n = abs(n)
    k = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return k
        n = q
        k += 1


# ---------------------------------------------------------------------------
# coefficient arithmetic for the rational function backend

class _RationalCoeffs:
    """Coefficients in Q."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero coefficient")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def ratio(self, a: int, b: int):
        if b == 0:
            raise ZeroDivisionError("zero denominator in coefficient")
        return Fraction(a, b)

    def render(self, c) -> str:
        return str(c)

    def is_negative(self, c) -> bool:
        return c < 0

    def abs(self, c):
        return -c if c < 0 else c


class _PrimeCoeffs:
    """Coefficients in the prime field F_q, stored as residues 0..q-1."""

    def __init__(self, q: int):
        self.char = q
        self.zero = 0
        self.one = 1 % q

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        a %= self.char
        if a == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return pow(a, self.char - 2, self.char)

    def from_int(self, n: int):
        return n % self.char

    def ratio(self, a: int, b: int):
        return self.mul(self.from_int(a), self.inv(self.from_int(b)))

    def render(self, c) -> str:
        return str(c)

    def is_negative(self, c) -> bool:
        return False

    def abs(self, c):
        return c


# Polynomials are tuples of coefficients, lowest degree first, with no
# trailing zeros; () is the zero polynomial.

def _ptrim(cs) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return _ptrim(out)


def _pneg(F, a):
    return tuple(F.neg(c) for c in a)


def _psub(F, a, b):
    return _padd(F, a, _pneg(F, b))


def _pmul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(ca, cb))
    return _ptrim(out)


def _pscale(F, a, c):
    return _ptrim([F.mul(x, c) for x in a])


def _pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = F.inv(b[-1])
    while len(r) >= len(b):
        if not r[-1]:
            r.pop()
            continue
        k = len(r) - len(b)
        c = F.mul(r[-1], inv_lead)
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] = F.sub(r[k + i], F.mul(c, cb))
        r.pop()
    return _ptrim(q), _ptrim(r)


def _zprimitive(cs):
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _zprem(A, B):
    """Pseudo-remainder of integer polynomials: lc(B)^k * A mod B."""
    R = list(A)
    dB = len(B) - 1
    lb = B[-1]
    while len(R) - 1 >= dB:
        if R[-1] == 0:
            R.pop()
            continue
        k = len(R) - 1 - dB
        lead = R[-1]
        for i in range(len(R)):
            R[i] *= lb
        for i in range(dB + 1):
            R[k + i] -= lead * B[i]
        R.pop()
    while R and R[-1] == 0:
        R.pop()
    return R


def _zmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _zgcd(A, B):
    """Primitive positive-lead gcd of two nonzero integer polynomials,
    by a primitive pseudo-remainder sequence.  The plain Euclidean
    sequence over Q suffers exponential coefficient growth and would
    dominate the whole linear algebra layer."""
    A = _zprimitive(list(A))
    B = _zprimitive(list(B))
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _zprem(A, B)
        A, B = B, _zprimitive(R)
    if A[-1] < 0:
        A = [-c for c in A]
    return A


def _zdiv_exact(A, G):
    """Quotient of integer polynomials when the division is exact."""
    dG = len(G) - 1
    lg = G[-1]
    R = list(A)
    Q = [0] * (len(A) - dG)
    for k in range(len(A) - dG - 1, -1, -1):
        top = R[k + dG]
        if top:
            q = top // lg
            Q[k] = q
            for i in range(dG):
                R[k + i] -= q * G[i]
            R[k + dG] = 0
    while Q and Q[-1] == 0:
        Q.pop()
    return Q


def _q_to_z(poly):
    """(primitive positive-lead integer polynomial, Fraction scale) with
    value scale * poly; input is a nonzero Fraction-coefficient tuple."""
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    zs = [int(c * lcm) for c in poly]
    g = 0
    for z in zs:
        g = math.gcd(g, z)
    if zs[-1] < 0:
        g = -g
    return [z // g for z in zs], Fraction(g, lcm)


def _z_canon(N, D, scale):
    """Canonical payload for value scale * N / D, with N and D coprime
    integer polynomials and D nonzero."""
    if not N or not scale:
        return (), (Fraction(1),)
    dl = D[-1]
    s = scale / dl
    return tuple(s * c for c in N), tuple(Fraction(c, dl) for c in D)


def _q_mul(a, b):
    if not a[0] or not b[0]:
        return (), (Fraction(1),)
    N1, s1 = _q_to_z(a[0])
    D1, u1 = _q_to_z(a[1])
    N2, s2 = _q_to_z(b[0])
    D2, u2 = _q_to_z(b[1])
    g = _zgcd(N1, D2)
    if len(g) > 1:
        N1 = _zdiv_exact(N1, g)
        D2 = _zdiv_exact(D2, g)
    g = _zgcd(N2, D1)
    if len(g) > 1:
        N2 = _zdiv_exact(N2, g)
        D1 = _zdiv_exact(D1, g)
    return _z_canon(_zmul(N1, N2), _zmul(D1, D2), (s1 * s2) / (u1 * u2))


def _q_addsub(a, b, sign):
    if not b[0]:
        return a
    if not a[0]:
        if sign > 0:
            return b
        return tuple(-c for c in b[0]), b[1]
    N1, s1 = _q_to_z(a[0])
    B, u1 = _q_to_z(a[1])
    N2, s2 = _q_to_z(b[0])
    D, u2 = _q_to_z(b[1])
    p1 = s1 / u1
    p2 = (s2 / u2) * sign
    t = _zgcd(B, D)
    if len(t) > 1:
        Bp = _zdiv_exact(B, t)
        Dp = _zdiv_exact(D, t)
    else:
        Bp, Dp = B, D
    # a + b = [p1*N1*Dp + p2*N2*Bp] / (t*Bp*Dp); shared factors sit in t only
    y1, y2 = p1.denominator, p2.denominator
    left = _zmul(N1, Dp)
    right = _zmul(N2, Bp)
    w1 = p1.numerator * y2
    w2 = p2.numerator * y1
    E = [0] * max(len(left), len(right))
    for i, c in enumerate(left):
        E[i] = w1 * c
    for i, c in enumerate(right):
        E[i] += w2 * c
    while E and E[-1] == 0:
        E.pop()
    if not E:
        return (), (Fraction(1),)
    if len(t) > 1:
        g = _zgcd(E, t)
        if len(g) > 1:
            E = _zdiv_exact(E, g)
            t = _zdiv_exact(t, g)
    den = _zmul(t, _zmul(Bp, Dp))
    return _z_canon(E, den, Fraction(1, y1 * y2))


def _pgcd_q(a, b):
    """Monic gcd of two nonzero polynomials with Fraction coefficients."""
    A, _ = _q_to_z(a)
    B, _ = _q_to_z(b)
    G = _zgcd(A, B)
    lead = G[-1]
    return tuple(Fraction(c, lead) for c in G)


def _pgcd(F, a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if not a or not b:
        base = a or b
        if not base:
            return ()
        return _pscale(F, base, F.inv(base[-1]))
    if F.char == 0:
        return _pgcd_q(a, b)
    while b:
        a, b = b, _pdivmod(F, a, b)[1]
    return _pscale(F, a, F.inv(a[-1]))


def _pord(a) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("zero polynomial has no order")


_ONE_POLY_CACHE = {}


def _pone(F):
    key = F.char
    got = _ONE_POLY_CACHE.get(key)
    if got is None:
        got = (F.one,)
        _ONE_POLY_CACHE[key] = got
    return got


def _rf_canon(F, num, den):
    """Reduce to coprime numerator and monic denominator."""
    num = _ptrim(num)
    den = _ptrim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), _pone(F)
    g = _pgcd(F, num, den)
    if len(g) > 1:
        num = _pdivmod(F, num, g)[0]
        den = _pdivmod(F, den, g)[0]
    lead = den[-1]
    if lead != F.one:
        c = F.inv(lead)
        num = _pscale(F, num, c)
        den = _pscale(F, den, c)
    return num, den


def _poly_render(F, a) -> str:
    if not a:
        return "0"
    parts = []
    for exp in range(len(a) - 1, -1, -1):
        c = a[exp]
        if not c:
            continue
        neg = F.is_negative(c)
        mag = F.abs(c)
        if exp == 0:
            body = F.render(mag)
        elif mag == F.one:
            body = "t" if exp == 1 else f"t^{exp}"
        else:
            tpart = "t" if exp == 1 else f"t^{exp}"
            body = f"{F.render(mag)}*{tpart}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


class _PolyParser:
    def __init__(self, text: str, F):
        self.text = text
        self.F = F
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def parse_uint(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected digits", start)
        return int(self.text[start:self.i])

    def parse_coeff(self, sign: int):
        n = self.parse_uint()
        if self.peek() == "/":
            self.i += 1
            d = self.parse_uint()
            if d == 0:
                raise ParseError("zero denominator in coefficient", self.i - 1)
            c = self.F.ratio(n, d)
        else:
            c = self.F.from_int(n)
        return self.F.neg(c) if sign < 0 else c

    def parse_tpart(self) -> int:
        self.expect("t")
        if self.peek() == "^":
            self.i += 1
            return self.parse_uint()
        return 1

    def parse_poly(self) -> tuple:
        coeffs = {}
        first = True
        while True:
            sign = 1
            ch = self.peek()
            if ch == "-":
                sign = -1
                self.i += 1
            elif ch == "+":
                if first:
                    raise ParseError("unexpected '+'", self.i)
                self.i += 1
            elif not first:
                break
            ch = self.peek()
            if ch == "t":
                exp = self.parse_tpart()
                c = self.F.neg(self.F.one) if sign < 0 else self.F.one
            elif ch.isdigit():
                c = self.parse_coeff(sign)
                exp = 0
                if self.peek() == "*":
                    self.i += 1
                    exp = self.parse_tpart()
            else:
                raise ParseError("expected a term", self.i)
            coeffs[exp] = self.F.add(coeffs.get(exp, self.F.zero), c)
            first = False
            ch = self.peek()
            if ch not in ("+", "-"):
                break
        if not coeffs:
            raise ParseError("empty polynomial", self.i)
        out = [self.F.zero] * (max(coeffs) + 1)
        for exp, c in coeffs.items():
            out[exp] = c
        return _ptrim(out)


# ---------------------------------------------------------------------------
# payload operation tables

class _PadicOps:
    """Operations on Fraction payloads with the p-adic valuation."""

    def __init__(self, p: int):
        self.p = p

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero field element")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / a

    def is_zero(self, a) -> bool:
        return not a

    def val(self, a) -> Valuation:
        if not a:
            return INFINITY
        return Valuation(_int_val(a.numerator, self.p) - _int_val(a.denominator, self.p))

    def uniformizer_pow(self, k: int):
        if k >= 0:
            return Fraction(self.p**k)
        return Fraction(1, self.p**-k)

    def from_int(self, n: int):
        return Fraction(n)

    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        i = 0
        n = len(text)
        while i < n and text[i].isspace():
            i += 1
        start = i
        if i < n and text[i] == "-":
            i += 1
        d0 = i
        while i < n and text[i].isdigit():
            i += 1
        if i == d0:
            raise ParseError("expected an integer", i)
        num = int(text[start:i])
        den = 1
        if i < n and text[i] == "/":
            i += 1
            d1 = i
            while i < n and text[i].isdigit():
                i += 1
            if i == d1:
                raise ParseError("expected digits after '/'", i)
            den = int(text[d1:i])
            if den == 0:
                raise ParseError("zero denominator", d1)
        while i < n and text[i].isspace():
            i += 1
        if i != n:
            raise ParseError("trailing characters", i)
        return Fraction(num, den)

    def grooming_unit(self, payloads):
        L = 1
        for f in payloads:
            L = L * f.denominator // math.gcd(L, f.denominator)
        k = _int_val(L, self.p)
        g = 0
        for f in payloads:
            g = math.gcd(g, f.numerator * (L // f.denominator))
        g //= self.p ** _int_val(g, self.p)
        return Fraction(L // self.p**k, g)

    def integral_part(self, a):
        """Split off the tail of the p-power expansion: the result has
        valuation >= 0 and differs from the input by u / p^k with
        0 <= u < p^k."""
        if not a:
            return a
        k = _int_val(a.denominator, self.p)
        if k == 0:
            return a
        pk = self.p**k
        unit = a.denominator // pk
        u = (a.numerator * pow(unit, -1, pk)) % pk
        return a - Fraction(u, pk)


class _RatFuncOps:
    """Operations on (numerator, denominator) polynomial payloads with the
    order-at-zero valuation."""

    def __init__(self, coeffs):
        self.F = coeffs
        self.zero_pl = ((), _pone(coeffs))
        self.one_pl = (_pone(coeffs), _pone(coeffs))

    def add(self, a, b):
        F = self.F
        if F.char == 0:
            return _q_addsub(a, b, 1)
        num = _padd(F, _pmul(F, a[0], b[1]), _pmul(F, b[0], a[1]))
        return _rf_canon(F, num, _pmul(F, a[1], b[1]))

    def sub(self, a, b):
        F = self.F
        if F.char == 0:
            return _q_addsub(a, b, -1)
        num = _psub(F, _pmul(F, a[0], b[1]), _pmul(F, b[0], a[1]))
        return _rf_canon(F, num, _pmul(F, a[1], b[1]))

    def mul(self, a, b):
        F = self.F
        if F.char == 0:
            return _q_mul(a, b)
        return _rf_canon(F, _pmul(F, a[0], b[0]), _pmul(F, a[1], b[1]))

    def div(self, a, b):
        if not b[0]:
            raise ZeroDivisionError("division by zero field element")
        F = self.F
        if F.char == 0:
            return _q_mul(a, (b[1], b[0]))
        return _rf_canon(F, _pmul(F, a[0], b[1]), _pmul(F, a[1], b[0]))

    def neg(self, a):
        return (_pneg(self.F, a[0]), a[1])

    def inv(self, a):
        # canonical operands are coprime already, so only re-monicize
        if not a[0]:
            raise ZeroDivisionError("inverse of zero field element")
        F = self.F
        c = F.inv(a[0][-1])
        return (_pscale(F, a[1], c), _pscale(F, a[0], c))

    def is_zero(self, a) -> bool:
        return not a[0]

    def val(self, a) -> Valuation:
        if not a[0]:
            return INFINITY
        return Valuation(_pord(a[0]) - _pord(a[1]))

    def uniformizer_pow(self, k: int):
        F = self.F
        if k >= 0:
            return (_ptrim([F.zero] * k + [F.one]), _pone(F))
        return (_pone(F), _ptrim([F.zero] * (-k) + [F.one]))

    def from_int(self, n: int):
        return _rf_canon(self.F, (self.F.from_int(n),), _pone(self.F))

    def render(self, a) -> str:
        num, den = a
        if den == _pone(self.F):
            return _poly_render(self.F, num)
        return f"({_poly_render(self.F, num)})/({_poly_render(self.F, den)})"

    def parse(self, text: str):
        pp = _PolyParser(text, self.F)
        if pp.peek() == "(":
            pp.i += 1
            num = pp.parse_poly()
            pp.expect(")")
            pp.expect("/")
            pp.expect("(")
            den = pp.parse_poly()
            pp.expect(")")
        else:
            num = pp.parse_poly()
            den = _pone(self.F)
        if pp.peek():
            raise ParseError("trailing characters", pp.i)
        if not any(den):
            raise ParseError("zero denominator", 0)
        return _rf_canon(self.F, num, den)

    def grooming_unit(self, payloads):
        F = self.F
        L = _pone(F)
        for _, d in payloads:
            g = _pgcd(F, L, d)
            L = _pmul(F, L, _pdivmod(F, d, g)[0]) if len(g) > 1 else _pmul(F, L, d)
        k = _pord(L)
        g = ()
        for n, d in payloads:
            m = _pmul(F, n, _pdivmod(F, L, d)[0])
            g = _pgcd(F, g, m)
        g = g[_pord(g):]
        return _rf_canon(F, L[k:], g)

    def integral_part(self, a):
        """Drop the principal part of the Laurent expansion at t = 0.

        The result has valuation >= 0; the discarded piece is P / t^m with
        deg P < m, so it stays small regardless of the input's size.
        """
        num, den = a
        if not num:
            return a
        m = _pord(den)
        if m == 0:
            return a
        F = self.F
        unit = den[m:]
        inv0 = F.inv(unit[0])
        series = [inv0]
        for i in range(1, m):
            acc = F.zero
            for j in range(1, min(i, len(unit) - 1) + 1):
                acc = F.add(acc, F.mul(unit[j], series[i - j]))
            series.append(F.neg(F.mul(inv0, acc)))
        P = [F.zero] * m
        for i, c in enumerate(num[:m]):
            if not c:
                continue
            for j in range(m - i):
                P[i + j] = F.add(P[i + j], F.mul(c, series[j]))
        P = _ptrim(P)
        if not P:
            return a
        shift = tuple([F.zero] * m) + (F.one,)
        return self.sub(a, _rf_canon(F, P, shift))

class Field:
    """A valued field context: either ``padic(p)`` or ``ratfunc(char)``.

    The context owns parsing, rendering and the valuation; elements carry a
    reference back to it so arithmetic can be written with operators.
    """

    __slots__ = ("kind", "param", "ops", "_zero", "_one")

    _PADIC = "padic"
    _RATFUNC = "ratfunc"

    def __init__(self, kind: str, param: int):
        self.kind = kind
        self.param = param
        if kind == self._PADIC:
            _check_prime(param, "p")
            self.ops = _PadicOps(param)
        elif kind == self._RATFUNC:
            if param != 0:
                _check_prime(param, "characteristic")
            coeffs = _RationalCoeffs() if param == 0 else _PrimeCoeffs(param)
            self.ops = _RatFuncOps(coeffs)
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self._zero = FieldElement(self, self.ops.from_int(0))
        self._one = FieldElement(self, self.ops.from_int(1))

    @classmethod
    def padic(cls, p: int) -> "Field":
        return cls(cls._PADIC, p)

    @classmethod
    def ratfunc(cls, char: int) -> "Field":
        return cls(cls._RATFUNC, char)

    @classmethod
    def from_selector(cls, selector: str) -> "Field":
        """Build from a ``padic:<p>`` or ``ratfunc:<char>`` selector string."""
        kind, sep, arg = selector.partition(":")
        if not sep or kind not in (cls._PADIC, cls._RATFUNC):
            raise ValueError(f"bad field selector {selector!r}")
        try:
            param = int(arg)
        except ValueError:
            raise ValueError(f"bad field selector {selector!r}") from None
        return cls(kind, param)

    @property
    def selector(self) -> str:
        return f"{self.kind}:{self.param}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.param == other.param
        )

    def __hash__(self):
        return hash((self.kind, self.param))

    def __repr__(self) -> str:
        return f"Field({self.selector})"

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, self.ops.from_int(n))

    def fraction(self, num: int, den: int = 1) -> "FieldElement":
        """Exact ratio of two integers as a field element."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return self.from_int(num) / self.from_int(den)

    def ratio(self, num_coeffs: Sequence, den_coeffs: Sequence = (1,)) -> "FieldElement":
        """Rational function from raw coefficient lists, lowest degree first.

        Only meaningful for the ratfunc backend; coefficients may be ints
        or, in characteristic 0, fractions.
        """
        if self.kind != self._RATFUNC:
            raise ValueError("ratio() applies to rational function fields")
        F = self.ops.F
        conv = []
        for c in num_coeffs:
            conv.append(F.ratio(c.numerator, c.denominator) if isinstance(c, Fraction) else F.from_int(c))
        num = _ptrim(conv)
        conv = []
        for c in den_coeffs:
            conv.append(F.ratio(c.numerator, c.denominator) if isinstance(c, Fraction) else F.from_int(c))
        den = _ptrim(conv)
        return FieldElement(self, _rf_canon(F, num, den))

    def uniformizer(self) -> "FieldElement":
        return self.uniformizer_pow(1)

    def uniformizer_pow(self, k: int) -> "FieldElement":
        """p**k, or t**k, for any integer k."""
        return FieldElement(self, self.ops.uniformizer_pow(k))

    def grooming_unit(self, elements: Sequence["FieldElement"]) -> "FieldElement":
        """A valuation-ring unit that clears the denominators of the given
        elements up to a uniformizer power and strips their common content.

        Scaling a generator list by this unit leaves its ring span
        unchanged while keeping entry sizes small under repeated
        elimination.
        """
        payloads = [e.data for e in elements if not self.ops.is_zero(e.data)]
        if not payloads:
            return self._one
        return FieldElement(self, self.ops.grooming_unit(payloads))

    def parse(self, text: str) -> "FieldElement":
        return FieldElement(self, self.ops.parse(text))

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(
                    f"mixed fields: {self.selector} vs {value.field.selector}"
                )
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot coerce {value!r} into {self.selector}")


class FieldElement:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        self.field = field
        self.data = data

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.add(self.data, o.data))

    __radd__ = __add__

    def __sub__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.sub(self.data, o.data))

    def __rsub__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.sub(o.data, self.data))

    def __mul__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.mul(self.data, o.data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.div(self.data, o.data))

    def __rtruediv__(self, other):
        o = self.field.coerce(other)
        return FieldElement(self.field, self.field.ops.div(o.data, self.data))

    def __neg__(self):
        return FieldElement(self.field, self.field.ops.neg(self.data))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.ops.inv(self.data))

    # predicates ------------------------------------------------------------

    def __bool__(self) -> bool:
        return not self.field.ops.is_zero(self.data)

    @property
    def is_zero(self) -> bool:
        return self.field.ops.is_zero(self.data)

    def val(self) -> Valuation:
        return self.field.ops.val(self.data)

    @property
    def is_integral(self) -> bool:
        """True when the valuation is >= 0 (the element lies in the ring O)."""
        return self.val() >= 0

    def integral_part(self) -> "FieldElement":
        """The nearest integral element: self minus a small purely
        fractional tail."""
        return FieldElement(self.field, self.field.ops.integral_part(self.data))

    def fractional_part(self) -> "FieldElement":
        return self - self.integral_part()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            try:
                other = self.field.from_int(other)
            except Exception:
                return NotImplemented
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.data))

    # text ------------------------------------------------------------------

    def render(self) -> str:
        return self.field.ops.render(self.data)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return self.render()


def val(x: FieldElement) -> Valuation:
    """Valuation of x; INFINITY exactly for 0."""
    return x.val()


def is_integral(x: FieldElement) -> bool:
    return x.is_integral
