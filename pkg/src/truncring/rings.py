"""Truncated polynomial rings over a finite field or over Z/p^N.

Two families are supported:

* ``F_q[x]/x^n`` -- coefficient vectors of length n over F_q;
* ``Z[x]/(p^N, x^n, p^k x^{n-1})`` -- length-n vectors over Z/p^N whose
  top coefficient is additionally reduced mod p^k (1 <= k <= N; k = N
  gives the plain quotient Z[x]/(p^N, x^n), and k = 0 is identified with
  the ring one degree shorter).

Elements are plain tuples of ints, index i holding the coefficient of
x^i, so they hash and compare by value.  A context object carries the
parameters and implements arithmetic, the valuation ``nu``, unit tests,
and the polynomial string syntax::

    poly  := term ('+' term)* | '0'
    term  := coeff | coeff '*'? 'x' ('^' uint)? | 'x' ('^' uint)?
    coeff := uint | '[' uint (',' uint)* ']'

Plain integer coefficients are reduced into the prime coefficient ring;
bracketed vectors give coordinates in the basis 1, t, ..., t^{e-1} of an
extension field and are rejected elsewhere.  Exponents at or above n are
a parse error, not a silent truncation.
"""

from __future__ import annotations

import itertools
import re

from .coefficients import FieldCtx, ZpNCtx, factor_prime_power
from .errors import CtxMismatch, NotAQuotient, PolyParseError, UndefinedValuation

Element = tuple[int, ...]

_TERM_RE = re.compile(r"^(?:\[(\d+(?:,\d+)*)\]|(\d+))?(?:\*?x(?:\^(\d+))?)?$")


def _parse_poly(ctx, text: str) -> Element:
    s = "".join(str(text).split())
    if not s:
        raise PolyParseError("empty polynomial")
    coeffs = [0] * ctx.n
    for term in s.split("+"):
        m = _TERM_RE.match(term)
        if not m or not term:
            raise PolyParseError(f"bad term {term!r}")
        bracket, plain, exp_s = m.groups()
        has_x = "x" in term
        if bracket is None and plain is None and not has_x:
            raise PolyParseError(f"bad term {term!r}")
        if bracket is not None:
            c = ctx._coeff_from_vector([int(v) for v in bracket.split(",")])
        elif plain is not None:
            c = ctx._coeff_from_int(int(plain))
        else:
            c = 1
        if has_x:
            exp = int(exp_s) if exp_s is not None else 1
        else:
            exp = 0
        if exp >= ctx.n:
            raise PolyParseError(f"exponent {exp} out of range for x^{ctx.n} = 0")
        coeffs[exp] = ctx._coeff_add(coeffs[exp], c)
    return ctx._reduce(coeffs)


def _format_poly(ctx, a: Element) -> str:
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        cs = ctx._coeff_str(c)
        if i == 0:
            terms.append(cs)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            terms.append(xs if c == 1 else cs + xs)
    return "+".join(terms) if terms else "0"


class FieldPolyCtx:
    """The ring F_q[x]/x^n."""

    kind = "field"
    __slots__ = ("coeff", "n")

    def __init__(self, coeff: FieldCtx, n: int):
        if n < 1:
            raise ValueError(f"truncation order must be >= 1, got {n}")
        self.coeff = coeff
        self.n = n

    # -- constructors ------------------------------------------------------

    def zero(self) -> Element:
        return (0,) * self.n

    def one(self) -> Element:
        return self.monomial(0)

    def monomial(self, i: int, c: int = 1) -> Element:
        if not 0 <= i < self.n:
            raise ValueError(f"exponent {i} out of range")
        return tuple(c if j == i else 0 for j in range(self.n))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, a: Element):
        if len(a) != self.n:
            raise CtxMismatch(f"element of length {len(a)} in ring of order {self.n}")

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        K = self.coeff
        return tuple(K.add(x, y) for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        self._check(a)
        K = self.coeff
        return tuple(K.neg(x) for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        K = self.coeff
        n = self.n
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] = K.add(out[i + j], K.mul(ai, bj))
        return tuple(out)

    def scalar_mul(self, c: int, a: Element) -> Element:
        K = self.coeff
        return tuple(K.mul(c, x) for x in a)

    def is_unit(self, a: Element) -> bool:
        self._check(a)
        return a[0] != 0

    def nu(self, a: Element) -> int:
        """Index of the lowest nonzero coefficient."""
        self._check(a)
        for i, c in enumerate(a):
            if c:
                return i
        raise UndefinedValuation("nu(0) is undefined")

    # -- enumeration ---------------------------------------------------------

    @property
    def size(self) -> int:
        return self.coeff.q**self.n

    def elements(self):
        return itertools.product(range(self.coeff.q), repeat=self.n)

    # -- string syntax -------------------------------------------------------

    def _coeff_from_int(self, v: int) -> int:
        return v % self.coeff.p

    def _coeff_from_vector(self, vs: list[int]) -> int:
        if self.coeff.e == 1:
            raise PolyParseError("bracketed coefficients require an extension field")
        if len(vs) > self.coeff.e:
            raise PolyParseError(f"coefficient vector longer than degree {self.coeff.e}")
        return self.coeff.from_coeffs(vs)

    def _coeff_add(self, a: int, b: int) -> int:
        return self.coeff.add(a, b)

    def _coeff_str(self, c: int) -> str:
        if self.coeff.e > 1 and c >= self.coeff.p:
            return "[" + ",".join(str(v) for v in self.coeff.coeffs(c)) + "]"
        return str(c)

    def _reduce(self, coeffs: list[int]) -> Element:
        return tuple(coeffs)

    def parse(self, text: str) -> Element:
        return _parse_poly(self, text)

    def format(self, a: Element) -> str:
        self._check(a)
        return _format_poly(self, a)

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldPolyCtx) and self.coeff == other.coeff and self.n == other.n

    def __hash__(self):
        return hash(("FieldPolyCtx", self.coeff, self.n))

    def __repr__(self):
        return f"F{self.coeff.q}[x]/x^{self.n}"


class ZpNPolyCtx:
    """The ring Z[x]/(p^N, x^n, p^k x^{n-1})."""

    kind = "zpn"
    __slots__ = ("coeff", "n", "k", "caps")

    def __init__(self, coeff: ZpNCtx, n: int, k: int):
        if n < 1:
            raise ValueError(f"truncation order must be >= 1, got {n}")
        if not 1 <= k <= coeff.N:
            raise ValueError(f"tail exponent k={k} must lie in [1, {coeff.N}]")
        if n == 1 and k != coeff.N:
            raise ValueError("for n = 1 the tail coefficient is the constant term, so k must equal N")
        self.coeff = coeff
        self.n = n
        self.k = k
        self.caps = tuple(coeff.size if i < n - 1 else coeff.p**k for i in range(n))

    # -- constructors ------------------------------------------------------

    def zero(self) -> Element:
        return (0,) * self.n

    def one(self) -> Element:
        return self.monomial(0)

    def monomial(self, i: int, c: int = 1) -> Element:
        if not 0 <= i < self.n:
            raise ValueError(f"exponent {i} out of range")
        return tuple(c % self.caps[j] if j == i else 0 for j in range(self.n))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, a: Element):
        if len(a) != self.n:
            raise CtxMismatch(f"element of length {len(a)} in ring of order {self.n}")

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x + y) % c for x, y, c in zip(a, b, self.caps))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return tuple((-x) % c for x, c in zip(a, self.caps))

    def sub(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x - y) % c for x, y, c in zip(a, b, self.caps))

    def mul(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        n = self.n
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return tuple(v % c for v, c in zip(out, self.caps))

    def scalar_mul(self, c: int, a: Element) -> Element:
        return tuple((c * x) % cap for x, cap in zip(a, self.caps))

    def is_unit(self, a: Element) -> bool:
        self._check(a)
        return a[0] % self.coeff.p != 0

    def nu(self, a: Element) -> tuple[int, int]:
        """Pair (i, m): i the lowest degree with nonzero coefficient, m its nu1."""
        self._check(a)
        for i, c in enumerate(a):
            if c:
                return (i, self.coeff.nu1(c))
        raise UndefinedValuation("nu(0) is undefined")

    # -- enumeration ---------------------------------------------------------

    @property
    def size(self) -> int:
        out = 1
        for c in self.caps:
            out *= c
        return out

    def elements(self):
        return itertools.product(*(range(c) for c in self.caps))

    # -- string syntax -------------------------------------------------------

    def _coeff_from_int(self, v: int) -> int:
        return v % self.coeff.size

    def _coeff_from_vector(self, vs):
        raise PolyParseError("bracketed coefficients require an extension field")

    def _coeff_add(self, a: int, b: int) -> int:
        return (a + b) % self.coeff.size

    def _coeff_str(self, c: int) -> str:
        return str(c)

    def _reduce(self, coeffs: list[int]) -> Element:
        return tuple(v % c for v, c in zip(coeffs, self.caps))

    def parse(self, text: str) -> Element:
        return _parse_poly(self, text)

    def format(self, a: Element) -> str:
        self._check(a)
        return _format_poly(self, a)

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ZpNPolyCtx)
            and self.coeff == other.coeff
            and self.n == other.n
            and self.k == other.k
        )

    def __hash__(self):
        return hash(("ZpNPolyCtx", self.coeff, self.n, self.k))

    def __repr__(self):
        p, N = self.coeff.p, self.coeff.N
        if self.n == 1:
            return f"Z[x]/({p}^{N}, x)"
        if self.k == N:
            return f"Z[x]/({p}^{N}, x^{self.n})"
        return f"Z[x]/({p}^{N}, x^{self.n}, {p}^{self.k} x^{self.n - 1})"


RingCtx = FieldPolyCtx | ZpNPolyCtx


def field_ring(q: int, n: int, modulus=None) -> FieldPolyCtx:
    """F_q[x]/x^n.  For prime powers q = p^e with e > 1 a modulus may be
    given as a coefficient tuple of length e+1; otherwise the built-in
    default is used."""
    p, e = factor_prime_power(q)
    return FieldPolyCtx(FieldCtx(p, e, modulus), n)


def zpn_ring(p: int, N: int, n: int, k: int | None = None) -> ZpNPolyCtx:
    """Z[x]/(p^N, x^n, p^k x^{n-1}).  k defaults to N; k = 0 (a dead top
    coefficient) is normalized to the ring of truncation order n-1."""
    if k is None:
        k = N
    if k == 0:
        if n < 2:
            raise ValueError("k = 0 requires n >= 2")
        return ZpNPolyCtx(ZpNCtx(p, N), n - 1, N)
    return ZpNPolyCtx(ZpNCtx(p, N), n, k)


# -- the quotient chain ----------------------------------------------------


def quotient_ctx(ctx: RingCtx):
    """The target of the next one-step quotient, or None at the base ring."""
    if ctx.kind == "field":
        if ctx.n == 1:
            return None
        return FieldPolyCtx(ctx.coeff, ctx.n - 1)
    if ctx.n == 1:
        return None
    if ctx.k > 1:
        return ZpNPolyCtx(ctx.coeff, ctx.n, ctx.k - 1)
    return ZpNPolyCtx(ctx.coeff, ctx.n - 1, ctx.coeff.N)


def extension_ctx(ctx: RingCtx) -> RingCtx:
    """The source of the one-step quotient onto ctx (inverse of quotient_ctx)."""
    if ctx.kind == "field":
        return FieldPolyCtx(ctx.coeff, ctx.n + 1)
    if ctx.k < ctx.coeff.N:
        return ZpNPolyCtx(ctx.coeff, ctx.n, ctx.k + 1)
    return ZpNPolyCtx(ctx.coeff, ctx.n + 1, 1)


def kernel_generator(src: RingCtx) -> Element:
    """Generator of the kernel of the one-step quotient out of src."""
    if src.kind == "field":
        if src.n == 1:
            raise NotAQuotient("the base ring has no quotient step")
        return src.monomial(src.n - 1)
    if src.n == 1:
        raise NotAQuotient("the base ring has no quotient step")
    return src.monomial(src.n - 1, src.coeff.p ** (src.k - 1))


def project(src: RingCtx, dst: RingCtx, a: Element) -> Element:
    """Apply the one-step quotient map src -> dst to a."""
    if quotient_ctx(src) != dst:
        raise NotAQuotient(f"{dst!r} is not the one-step quotient of {src!r}")
    src._check(a)
    if src.kind == "field" or src.k == 1:
        return a[:-1]
    return a[:-1] + (a[-1] % dst.caps[-1],)
