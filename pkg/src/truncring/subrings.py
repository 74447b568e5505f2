"""Subrings of truncated rings: canonical bases, closure, ideals, lifting
along one-step quotients, enumeration, and shape censuses.

Canonical bases make subring identity decidable by tuple comparison: over
a field the reduced row echelon form, over Z/p^N a Howell-style normal
form adapted to the per-degree coefficient caps (the x^{n-1} column lives
mod p^k).  Rows are coefficient vectors with columns ordered by degree,
and the set of row valuations can be read straight off the pivots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CtxMismatch, InvariantViolation, NotMinimal, OutOfFamily, TooLarge
from .rings import (
    Element,
    FieldPolyCtx,
    RingCtx,
    extension_ctx,
    kernel_generator,
    project,
    quotient_ctx,
)
from .shapes import GridDomain, IntervalDomain, Shape, e_bound, eps_bound, minimal_generators

_AMBIENT_LIMIT = 4096
_SUBSPACE_LIMIT = 200_000


# -- canonical row bases -----------------------------------------------------


def _val_p(p: int, v: int) -> int:
    m = 0
    while v % p == 0:
        v //= p
        m += 1
    return m


def _rref(K, rows, ncols: int):
    """Reduced row echelon form over the field K; zero rows are dropped and
    the output rows are sorted by pivot column."""
    work = [list(r) for r in rows if any(r)]
    out = []
    for col in range(ncols):
        pick = None
        for idx, r in enumerate(work):
            if r[col]:
                pick = idx
                break
        if pick is None:
            continue
        row = work.pop(pick)
        inv = K.inv(row[col])
        row = [K.mul(inv, x) for x in row]
        for other in work + out:
            c = other[col]
            if c:
                for j in range(col, ncols):
                    other[j] = K.sub(other[j], K.mul(c, row[j]))
        out.append(row)
    return tuple(tuple(r) for r in out)


def _howell(p: int, caps_log, rows):
    """Howell-style normal form over Z/p^N with per-column caps p^caps_log[j].

    Column by column: the entry of least p-valuation becomes the pivot and
    is normalized to an exact power of p; other rows are cleared below it;
    the annihilator multiple of the pivot row rejoins the worklist so that
    every span element with leading column c is reachable from pivots >= c.
    Finally entries above each pivot are reduced into [0, pivot).
    """
    ncols = len(caps_log)
    caps = [p**c for c in caps_log]
    work = [[x % c for x, c in zip(r, caps)] for r in rows]
    work = [r for r in work if any(r)]
    out = []
    pivots = []
    for col in range(ncols):
        pick = None
        picka = None
        for idx, r in enumerate(work):
            if r[col]:
                a = _val_p(p, r[col])
                if pick is None or a < picka:
                    pick, picka = idx, a
        if pick is None:
            continue
        row = work.pop(pick)
        a = picka
        uinv = pow(row[col] // p**a, -1, p ** max(caps_log))
        row = [(x * uinv) % c for x, c in zip(row, caps)]
        piv = p**a
        for r in work:
            if r[col]:
                mfac = r[col] // piv
                for j in range(col, ncols):
                    if row[j]:
                        r[j] = (r[j] - mfac * row[j]) % caps[j]
        ann = [(x * p ** (caps_log[col] - a)) % c for x, c in zip(row, caps)]
        if any(ann):
            work.append(ann)
        out.append(row)
        pivots.append((col, piv))
    for i, (col, piv) in enumerate(pivots):
        for j in range(i):
            upper = out[j]
            mfac = upper[col] // piv
            if mfac:
                for t in range(col, ncols):
                    if out[i][t]:
                        upper[t] = (upper[t] - mfac * out[i][t]) % caps[t]
    return tuple(tuple(r) for r in out)


def _caps_log(ctx) -> list[int]:
    N = ctx.coeff.N
    return [N] * (ctx.n - 1) + [ctx.k]


def canonicalize(ctx: RingCtx, rows):
    """Canonical basis of the module spanned by the rows; two row sets span
    the same module iff their canonical bases are equal tuples."""
    for r in rows:
        ctx._check(r)
    if ctx.kind == "field":
        return _rref(ctx.coeff, rows, ctx.n)
    return _howell(ctx.coeff.p, _caps_log(ctx), rows)


def in_row_span(ctx: RingCtx, basis, v: Element) -> bool:
    """Membership in the module with the given canonical basis, by greedy
    reduction at the pivot columns."""
    v = list(v)
    if ctx.kind == "field":
        K = ctx.coeff
        for row in basis:
            col = next(i for i, x in enumerate(row) if x)
            c = v[col]
            if c:
                for j in range(col, ctx.n):
                    v[j] = K.sub(v[j], K.mul(c, row[j]))
        return not any(v)
    p = ctx.coeff.p
    caps = ctx.caps
    v = [x % c for x, c in zip(v, caps)]
    for row in basis:
        col = next(i for i, x in enumerate(row) if x)
        piv = row[col]
        if v[col]:
            if v[col] % piv:
                return False
            mfac = v[col] // piv
            for j in range(col, ctx.n):
                v[j] = (v[j] - mfac * row[j]) % caps[j]
    return not any(v)


def _span_logsize(ctx, basis) -> int:
    """log_p of the span size, from the pivot valuations (canonical basis)."""
    p = ctx.coeff.p
    logs = _caps_log(ctx)
    total = 0
    for row in basis:
        col = next(i for i, x in enumerate(row) if x)
        total += logs[col] - _val_p(p, row[col])
    return total


# -- subrings ----------------------------------------------------------------


class Subring:
    """A unital, multiplicatively closed module, held by canonical basis."""

    __slots__ = ("ctx", "basis")

    def __init__(self, ctx: RingCtx, basis):
        self.ctx = ctx
        self.basis = tuple(tuple(r) for r in basis)

    @classmethod
    def from_rows(cls, ctx: RingCtx, rows) -> "Subring":
        return cls(ctx, canonicalize(ctx, rows))

    @classmethod
    def prime_ring(cls, ctx: RingCtx) -> "Subring":
        """The span of 1: the image of the prime coefficient ring."""
        return cls.from_rows(ctx, [ctx.one()])

    def contains(self, v: Element) -> bool:
        return in_row_span(self.ctx, self.basis, v)

    @property
    def dim(self) -> int:
        if self.ctx.kind != "field":
            raise CtxMismatch("dim is the coefficient-field rank; use log_size")
        return len(self.basis)

    @property
    def log_size(self) -> int:
        if self.ctx.kind == "field":
            return len(self.basis)
        return _span_logsize(self.ctx, self.basis)

    @property
    def size(self) -> int:
        if self.ctx.kind == "field":
            return self.ctx.coeff.q ** len(self.basis)
        return self.ctx.coeff.p**self.log_size

    def elements(self) -> list[Element]:
        """Every member, by closing the basis additively."""
        ctx = self.ctx
        if ctx.kind == "field":
            out = {ctx.zero()}
            for row in self.basis:
                scaled = [ctx.scalar_mul(c, row) for c in range(ctx.coeff.q)]
                out = {ctx.add(v, s) for v in out for s in scaled}
            return sorted(out)
        seen = {ctx.zero()}
        frontier = [ctx.zero()]
        while frontier:
            v = frontier.pop()
            for row in self.basis:
                w = ctx.add(v, row)
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return sorted(seen)

    def sort_key(self):
        return (self.size, self.basis)

    def __eq__(self, other):
        return isinstance(other, Subring) and self.ctx == other.ctx and self.basis == other.basis

    def __hash__(self):
        return hash((self.ctx, self.basis))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        polys = ", ".join(self.ctx.format(r) for r in self.basis)
        return f"<span {polys} | {self.ctx!r}>"


def closure(ctx: RingCtx, gens) -> Subring:
    """Smallest unital subring containing the generators."""
    basis = canonicalize(ctx, [ctx.one(), *gens])
    while True:
        prods = [ctx.mul(a, b) for i, a in enumerate(basis) for b in basis[i:]]
        new = canonicalize(ctx, list(basis) + prods)
        if new == basis:
            return Subring(ctx, basis)
        basis = new


def project_subring(S: Subring, dst: RingCtx) -> Subring:
    """Image of a subring under the one-step quotient map."""
    return Subring.from_rows(dst, [project(S.ctx, dst, r) for r in S.basis])


def exponent_set(S: Subring) -> Shape:
    """Valuations of the nonzero members, read off the canonical basis.

    Over a field these are exactly the pivot columns; over Z/p^N each row
    with pivot p^a in column c contributes the points (c, a), ..., up to
    the cap of that column.
    """
    ctx = S.ctx
    if ctx.kind == "field":
        pts = [next(i for i, x in enumerate(row) if x) for row in S.basis]
        return Shape.of(IntervalDomain(ctx.n), pts)
    p = ctx.coeff.p
    logs = _caps_log(ctx)
    pts = []
    for row in S.basis:
        col = next(i for i, x in enumerate(row) if x)
        a = _val_p(p, row[col])
        pts.extend((col, b) for b in range(a, logs[col]))
    return Shape.of(GridDomain(ctx.n, ctx.coeff.N, ctx.k), pts)


# -- ideals and cotangent data ------------------------------------------------


@dataclass(frozen=True)
class IdealData:
    """Canonical bases for the maximal ideal m, its square, and the
    obstruction module (m^2 over a field, m^2 + pR in mixed
    characteristic)."""

    max_ideal: tuple[Element, ...]
    square: tuple[Element, ...]
    small: tuple[Element, ...]


def ideal_data(S: Subring) -> IdealData:
    ctx = S.ctx
    rows = S.basis
    # row 0 is the unique row with pivot in the constant column
    if ctx.kind == "field":
        m = rows[1:]
        sq = canonicalize(ctx, [ctx.mul(a, b) for i, a in enumerate(m) for b in m[i:]])
        return IdealData(m, sq, sq)
    p = ctx.coeff.p
    m = canonicalize(ctx, [ctx.scalar_mul(p, rows[0]), *rows[1:]])
    sq = canonicalize(ctx, [ctx.mul(a, b) for i, a in enumerate(m) for b in m[i:]])
    small = canonicalize(ctx, list(sq) + [ctx.scalar_mul(p, r) for r in rows])
    return IdealData(m, sq, small)


def cotangent_dim(S: Subring) -> int:
    """Dimension of m/m^2 over the residue field (of m/(m^2 + pR) over F_p
    in mixed characteristic)."""
    data = ideal_data(S)
    if S.ctx.kind == "field":
        return len(data.max_ideal) - len(data.square)
    return _span_logsize(S.ctx, data.max_ideal) - _span_logsize(S.ctx, data.small)


# -- one-step extensions and lifting ------------------------------------------


@dataclass(frozen=True)
class MinimalExtension:
    """A one-step quotient src -> dst restricted to src = preimage of dst,
    with the kernel generated by kernel_gen."""

    src: Subring
    dst: Subring
    kernel_gen: Element
    is_minimal: bool
    kernel_in_small: bool


def _lift_row(src_ctx: RingCtx, row) -> Element:
    if len(row) < src_ctx.n:
        return tuple(row) + (0,)
    return tuple(row)


def restricted_extension(B: Subring) -> MinimalExtension:
    """The preimage R of B under the one-step quotient onto B's ring,
    packaged as the extension R -> B."""
    src_ctx = extension_ctx(B.ctx)
    z = kernel_generator(src_ctx)
    rows = [_lift_row(src_ctx, r) for r in B.basis] + [z]
    R = Subring.from_rows(src_ctx, rows)
    in_small = in_row_span(src_ctx, ideal_data(R).small, z)
    return MinimalExtension(src=R, dst=B, kernel_gen=z, is_minimal=True, kernel_in_small=in_small)


@dataclass(frozen=True)
class LiftFamily:
    """The subrings of ext.src mapping isomorphically onto ext.dst."""

    extension: MinimalExtension
    exists: bool
    dim: int
    lifts: tuple[Subring, ...]


def lift_isomorphic(ext: MinimalExtension) -> LiftFamily:
    """Compute the lift family of a minimal one-step extension.

    Lifts exist iff the kernel generator z stays out of the obstruction
    module; they then form an affine family indexed by scalar tuples of
    length dim = cotangent_dim(dst): pick module generators w_1, ..., w_d
    of the maximal ideal modulo (obstruction + z), and send each tuple
    (c_1, ..., c_d) to the span of 1, the w_i - c_i z, and the obstruction
    module.
    """
    if not ext.is_minimal:
        raise NotMinimal("lifting requires a minimal extension")
    d = cotangent_dim(ext.dst)
    if ext.kernel_in_small:
        return LiftFamily(ext, False, d, ())
    ctx = ext.src.ctx
    z = ext.kernel_gen
    data = ideal_data(ext.src)
    small = list(data.small)
    grown = canonicalize(ctx, small + [z])
    w = []
    for r in data.max_ideal:
        if not in_row_span(ctx, grown, r):
            w.append(r)
            grown = canonicalize(ctx, list(grown) + [r])
    assert len(w) == d, "complement size must equal the target cotangent dimension"
    scalars = range(ctx.coeff.q) if ctx.kind == "field" else range(ctx.coeff.p)
    one = ctx.one()
    lifts = []
    for lam in itertools.product(scalars, repeat=d):
        rows = [one]
        rows += [ctx.sub(wi, ctx.scalar_mul(c, z)) for wi, c in zip(w, lam)]
        rows += small
        lifts.append(Subring.from_rows(ctx, rows))
    assert len(set(lifts)) == len(lifts), "lifts must be pairwise distinct"
    return LiftFamily(ext, True, d, tuple(sorted(lifts)))


# -- enumeration ---------------------------------------------------------------


def _gaussian_subspace_count(q: int, n: int) -> int:
    total = 0
    for k in range(n + 1):
        num = 1
        den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def _enumerate_subspace_scan(ctx) -> list[Subring]:
    """Filter every coefficient subspace for closure: echelon bases are
    generated directly from pivot sets and free entries."""
    if ctx.kind != "field":
        raise CtxMismatch("the subspace scan needs a field coefficient ring")
    q, n = ctx.coeff.q, ctx.n
    if _gaussian_subspace_count(q, n) > _SUBSPACE_LIMIT:
        raise TooLarge("too many subspaces to scan")
    one = ctx.one()
    found = []
    for dim in range(1, n + 1):
        for pivots in itertools.combinations(range(n), dim):
            free = [
                (r, c)
                for r in range(dim)
                for c in range(pivots[r] + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(dim)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                S = Subring(ctx, tuple(tuple(r) for r in rows))
                if not S.contains(one):
                    continue
                rs = S.basis
                if all(
                    S.contains(ctx.mul(rs[i], rs[j]))
                    for i in range(dim)
                    for j in range(i, dim)
                ):
                    found.append(S)
    return sorted(found)


def _enumerate_closure_bfs(ctx) -> list[Subring]:
    """Grow subrings from the prime ring by adjoining one ambient element
    at a time and closing; the reachable set is all of them."""
    if ctx.size > _AMBIENT_LIMIT:
        raise TooLarge(f"ambient ring of size {ctx.size} exceeds the scan limit")
    prime = Subring.prime_ring(ctx)
    ambient = list(ctx.elements())
    found = {prime}
    frontier = [prime]
    while frontier:
        S = frontier.pop()
        for a in ambient:
            if S.contains(a):
                continue
            T = closure(ctx, list(S.basis) + [a])
            if T not in found:
                found.add(T)
                frontier.append(T)
    return sorted(found)


def _enumerate_minimal_ext(ctx) -> list[Subring]:
    """Walk the quotient chain from the base coefficient ring upward; at
    each step every subring of the quotient contributes its preimage plus
    its isomorphic lifts, which together exhaust the next level."""
    if ctx.size > 1 << 20:
        raise TooLarge("ambient ring too large")
    chain = [ctx]
    cur = ctx
    while (below := quotient_ctx(cur)) is not None:
        chain.append(below)
        cur = below
    chain.reverse()
    subs = [Subring.prime_ring(chain[0])]
    for step_ctx in chain[1:]:
        nxt = []
        for B in subs:
            ext = restricted_extension(B)
            assert ext.src.ctx == step_ctx
            nxt.append(ext.src)
            nxt.extend(lift_isomorphic(ext).lifts)
        assert len(set(nxt)) == len(nxt), "preimages and lifts must not collide"
        subs = sorted(nxt)
    return subs


def enumerate_subrings(ctx: RingCtx, method: str = "minimal_ext") -> list[Subring]:
    """All unital subrings sharing the coefficient prime ring, sorted by
    (size, canonical basis).

    Methods: "minimal_ext" (recursion along the quotient chain),
    "closure_bfs" (generator adjunction from the prime ring), and
    "subspace_scan" (filter all subspaces; field kind only).
    """
    if method == "minimal_ext":
        return _enumerate_minimal_ext(ctx)
    if method == "closure_bfs":
        return _enumerate_closure_bfs(ctx)
    if method == "subspace_scan":
        return _enumerate_subspace_scan(ctx)
    raise ValueError(f"unknown enumeration method {method!r}")


# -- census --------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    shape: Shape
    count: int
    bound_exp: int
    bound: int
    equality: bool
    d_shape: int
    d_ring_values: tuple[int, ...]
    subrings: tuple[Subring, ...]


def census(ctx: RingCtx, method: str = "minimal_ext") -> list[CensusRow]:
    """Group the subrings by exponent set: one row per realized shape,
    with the count, the matching power bound, and the cotangent data."""
    subs = enumerate_subrings(ctx, method)
    groups: dict = {}
    for S in subs:
        groups.setdefault(exponent_set(S).elems, []).append(S)
    rows = []
    for elems in sorted(groups):
        members = groups[elems]
        sh = exponent_set(members[0])
        if ctx.kind == "field":
            exp = e_bound(ctx.n, sh)
            base = ctx.coeff.q
        else:
            exp = eps_bound(ctx.n, ctx.coeff.N, ctx.k, sh)
            base = ctx.coeff.p
        rows.append(
            CensusRow(
                shape=sh,
                count=len(members),
                bound_exp=exp,
                bound=base**exp,
                equality=len(members) == base**exp,
                d_shape=sh.generator_count(),
                d_ring_values=tuple(sorted(cotangent_dim(S) for S in members)),
                subrings=tuple(members),
            )
        )
    return rows


# -- the generator-gap family ----------------------------------------------------


@dataclass(frozen=True)
class FamilyReport:
    """The subring of K[x]/x^{2a+6} generated by x^a + x^{a+3}, x^{a+1},
    x^{a+2}: its exponent set needs four generators while three ring
    elements generate, the fourth exponent being witnessed inside m^2."""

    a: int
    ctx: FieldPolyCtx
    gens: tuple[Element, Element, Element]
    ring: Subring
    shape: Shape
    generators: tuple[int, ...]
    d_shape: int
    d_ring: int
    witness: Element
    witness_in_square: bool


def counterexample_family(a: int, field) -> FamilyReport:
    """Build the family member for the given a >= 6 and check its claims.

    The products pair up as g1*g3 = x^{2a+2} + x^{2a+5} and g2^2 =
    x^{2a+2}, so x^{2a+5} = g1*g3 - g2^2 lies in m^2 even though 2a+5 is a
    generator of the exponent set; the cotangent dimension stays at 3.
    """
    if a < 6:
        raise OutOfFamily("the family needs a >= 6")
    n = 2 * a + 6
    ctx = FieldPolyCtx(field, n)
    g1 = ctx.add(ctx.monomial(a), ctx.monomial(a + 3))
    g2 = ctx.monomial(a + 1)
    g3 = ctx.monomial(a + 2)
    R = closure(ctx, [g1, g2, g3])
    sh = exponent_set(R)
    expected = {0, a, a + 1, a + 2} | set(range(2 * a, n))
    if set(sh.elems) != expected:
        raise InvariantViolation(f"unexpected exponent set {sh.elems}")
    gens = minimal_generators(sh)
    if gens != (a, a + 1, a + 2, 2 * a + 5):
        raise InvariantViolation(f"unexpected shape generators {gens}")
    d_ring = cotangent_dim(R)
    if d_ring != 3:
        raise InvariantViolation(f"cotangent dimension {d_ring} != 3")
    witness = ctx.sub(ctx.mul(g1, g3), ctx.mul(g2, g2))
    if witness != ctx.monomial(2 * a + 5):
        raise InvariantViolation("witness product identity failed")
    if not in_row_span(ctx, ideal_data(R).square, witness):
        raise InvariantViolation("witness escaped the ideal square")
    return FamilyReport(
        a=a,
        ctx=ctx,
        gens=(g1, g2, g3),
        ring=R,
        shape=sh,
        generators=gens,
        d_shape=len(gens),
        d_ring=d_ring,
        witness=witness,
        witness_in_square=True,
    )
