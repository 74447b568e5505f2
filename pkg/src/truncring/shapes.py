"""Valuation shapes: sub-partial-monoids of truncated exponent domains.

A domain is either the interval [0, n-1] under truncated addition, or the
grid [0, n-1] x [0, N-1] under componentwise truncated addition with an
optional cap on the top row: points (n-1, j) with j >= tail are removed,
and sums landing there are undefined.  The grid with tail = k is exactly
the set of valuations occurring in Z[x]/(p^N, x^n, p^k x^{n-1}).

A shape is a subset containing zero and closed under defined sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import TooLarge

Point = Union[int, tuple[int, int]]

# Shape enumeration is exponential in the domain size; this keeps it honest.
_MAX_ENUM_POINTS = 24


@dataclass(frozen=True)
class IntervalDomain:
    """Exponents [0, n-1]; a + b is defined when it stays below n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"domain needs n >= 1, got {self.n}")

    @property
    def zero(self) -> int:
        return 0

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    def contains(self, pt) -> bool:
        return isinstance(pt, int) and 0 <= pt < self.n

    def add(self, a: int, b: int):
        s = a + b
        return s if s < self.n else None


@dataclass(frozen=True)
class GridDomain:
    """Pairs [0, n-1] x [0, N-1] ordered and added lexicographically.

    With tail < N the points (n-1, j), j >= tail are excluded and sums are
    defined only when they land on a remaining point.
    """

    n: int
    N: int
    tail: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.N < 1:
            raise ValueError("domain needs n >= 1 and N >= 1")
        if self.tail is None:
            object.__setattr__(self, "tail", self.N)
        if not 1 <= self.tail <= self.N:
            raise ValueError(f"tail must lie in [1, {self.N}]")
        if self.n == 1 and self.tail != self.N:
            raise ValueError("for n = 1 the tail cap would empty the zero column")

    @property
    def zero(self) -> tuple[int, int]:
        return (0, 0)

    @property
    def points(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(self.N)
            if not (i == self.n - 1 and j >= self.tail)
        )

    def contains(self, pt) -> bool:
        if not (isinstance(pt, tuple) and len(pt) == 2):
            return False
        i, j = pt
        return 0 <= i < self.n and 0 <= j < self.N and not (i == self.n - 1 and j >= self.tail)

    def add(self, a, b):
        s = (a[0] + b[0], a[1] + b[1])
        return s if self.contains(s) else None


ExpDomain = Union[IntervalDomain, GridDomain]


def is_shape(domain: ExpDomain, elems: Iterable[Point]) -> bool:
    """True when elems contains zero, lies in the domain, and is closed
    under every defined sum of its members."""
    s = set(elems)
    if domain.zero not in s:
        return False
    if not all(domain.contains(pt) for pt in s):
        return False
    pts = [pt for pt in s if pt != domain.zero]
    for a in pts:
        for b in pts:
            t = domain.add(a, b)
            if t is not None and t not in s:
                return False
    return True


@dataclass(frozen=True)
class Shape:
    """A validated sub-partial-monoid, elements sorted ascending."""

    domain: ExpDomain
    elems: tuple[Point, ...]

    @staticmethod
    def of(domain: ExpDomain, elems: Iterable[Point]) -> "Shape":
        pts = tuple(sorted(set(elems)))
        if not is_shape(domain, pts):
            raise ValueError(f"{pts} is not a shape of {domain}")
        return Shape(domain, pts)

    def __contains__(self, pt) -> bool:
        return pt in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def minimal_generators(self) -> tuple[Point, ...]:
        return minimal_generators(self)

    def generator_count(self) -> int:
        return len(minimal_generators(self))


def _pt_sum(a: Point, b: Point) -> Point:
    if isinstance(a, int):
        return a + b
    return (a[0] + b[0], a[1] + b[1])


def _indecomposable(pts: set, g: Point) -> bool:
    for a in pts:
        for b in pts:
            if _pt_sum(a, b) == g:
                return False
    return True


def minimal_generators(shape: Shape) -> tuple[Point, ...]:
    """The unique minimal generating set: nonzero elements that are not a
    sum of two nonzero elements.

    A sum of members that equals a member is automatically defined in the
    domain, so decomposability does not depend on the ambient domain.
    """
    nz = {pt for pt in shape.elems if pt != shape.domain.zero}
    gens = tuple(sorted(g for g in nz if _indecomposable(nz, g)))
    assert generate(shape.domain, gens) == set(shape.elems), "generators must span the shape"
    return gens


def generate(domain: ExpDomain, gens: Iterable[Point]) -> set:
    """Closure of gens (plus zero) under iterated defined sums."""
    out = {domain.zero} | set(gens)
    frontier = list(out)
    while frontier:
        a = frontier.pop()
        for b in list(out):
            t = domain.add(a, b)
            if t is not None and t not in out:
                out.add(t)
                frontier.append(t)
    return out


def is_realizable_zshape(shape: Shape) -> bool:
    """Whether a grid shape occurs as the valuation set of a unital subring:
    it must contain the whole zero column (0, 0), ..., (0, N-1)."""
    domain = shape.domain
    if not isinstance(domain, GridDomain):
        raise TypeError("realizability test applies to grid shapes")
    return all((0, j) in shape.elems for j in range(domain.N))


def _shape_points(s) -> frozenset:
    return frozenset(s.elems) if isinstance(s, Shape) else frozenset(s)


def e_bound(n: int, s) -> int:
    """Census bound exponent for interval shapes: count, over the quotient
    steps n -> n-1 -> ... -> 1, the generator number of the current shape
    whenever the dropped top exponent is absent from it."""
    pts = _shape_points(s)
    if not is_shape(IntervalDomain(n), pts):
        raise ValueError(f"{sorted(pts)} is not a shape of [0, {n - 1}]")
    nz = {pt for pt in pts if pt != 0}
    total = 0
    for m in range(n, 1, -1):
        if m - 1 in nz:
            nz.discard(m - 1)
        else:
            total += sum(1 for g in nz if _indecomposable(nz, g))
    return total


def eps_bound(n: int, N: int, k: int, s) -> int:
    """Census bound exponent for grid shapes over Z[x]/(p^N, x^n, p^k x^{n-1}).

    Follows the quotient chain: while the shape has more than one column,
    drop top-row points (n-1, k-1), (n-1, k-2), ... one at a time, adding
    (generator count - 1) whenever the dropped point is absent, then splice
    to the grid one column shorter.

    Needs N >= 2: the "- 1" discounts the ever-present generator (0, 1),
    the valuation of p.  With N = 1 that point does not exist (and the ring
    is a plain field quotient, covered by e_bound).
    """
    if N < 2:
        raise ValueError("bound recursion needs N >= 2; an N = 1 ring is a field quotient, use e_bound")
    pts = _shape_points(s)
    domain = GridDomain(n, N, k)
    if not is_shape(domain, pts):
        raise ValueError(f"{sorted(pts)} is not a shape of {domain}")
    shape = Shape(domain, tuple(sorted(pts)))
    if not is_realizable_zshape(shape):
        raise ValueError(f"{sorted(pts)} misses part of the zero column")
    nz = {pt for pt in pts if pt != (0, 0)}
    total = 0
    while n > 1:
        for j in range(k - 1, -1, -1):
            if (n - 1, j) in nz:
                nz.discard((n - 1, j))
            else:
                total += sum(1 for g in nz if _indecomposable(nz, g)) - 1
        n -= 1
        k = N
    return total


def enumerate_shapes(domain: ExpDomain, realizable_only: bool = False) -> list[Shape]:
    """All shapes of the domain, sorted by element tuple.

    Walks the points in ascending order; a point forced by an already
    decided sum is included unconditionally, every other point branches,
    so each shape appears exactly once.  With realizable_only, grid shapes
    are restricted to those containing the zero column (interval shapes
    are all realizable, so the flag is a no-op there).
    """
    pts = [pt for pt in domain.points if pt != domain.zero]
    if len(pts) + 1 > _MAX_ENUM_POINTS:
        raise TooLarge(f"{len(pts) + 1} points exceeds the enumeration limit {_MAX_ENUM_POINTS}")
    required = set()
    if realizable_only and isinstance(domain, GridDomain):
        required = {(0, j) for j in range(1, domain.N)}
    out = []

    def rec(i: int, cur: set):
        if i == len(pts):
            out.append(Shape(domain, tuple(sorted(cur))))
            return
        h = pts[i]
        forced = h in required
        if not forced:
            nz = [a for a in cur if a != domain.zero]
            forced = any(_pt_sum(a, b) == h for a in nz for b in nz)
        if forced:
            rec(i + 1, cur | {h})
        else:
            rec(i + 1, cur)
            rec(i + 1, cur | {h})

    rec(0, {domain.zero})
    return sorted(out, key=lambda s: s.elems)
