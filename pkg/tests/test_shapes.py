"""Valuation shapes: closure, minimal generators, the counting recursions,
and exhaustive enumeration against a subset-filter oracle."""

import itertools

import pytest

from truncring import (
    GridDomain,
    IntervalDomain,
    Shape,
    TooLarge,
    e_bound,
    enumerate_shapes,
    eps_bound,
    generate,
    is_realizable_zshape,
    is_shape,
    minimal_generators,
)

FAMILY_E = {0, 6, 7, 8, 12, 13, 14, 15, 16, 17}


def indecomposables(pts):
    """Nonzero members that are not a sum of two nonzero members."""

    def add(a, b):
        return a + b if isinstance(a, int) else (a[0] + b[0], a[1] + b[1])

    zero = 0 if any(isinstance(p, int) for p in pts) else (0, 0)
    nz = {p for p in pts if p != zero}
    return {g for g in nz if not any(add(a, b) == g for a in nz for b in nz)}


def e_rec(n, E):
    """Oracle: the interval recursion written recursively."""
    if n == 1:
        return 0
    top = n - 1
    if top in E:
        return e_rec(n - 1, E - {top})
    return len(indecomposables(E)) + e_rec(n - 1, E)


def eps_rec(n, N, k, D):
    """Oracle: the grid recursion, splicing to the shorter ring at k = 0."""
    if n == 1:
        return 0
    if k == 0:
        return eps_rec(n - 1, N, N, {pt for pt in D if pt[0] < n - 1})
    top = (n - 1, k - 1)
    if top in D:
        return eps_rec(n, N, k - 1, D - {top})
    return len(indecomposables(D)) - 1 + eps_rec(n, N, k - 1, D)


def shapes_by_subset_filter(domain):
    """Oracle: every subset of the nonzero points, filtered by is_shape."""
    pts = [p for p in domain.points if p != domain.zero]
    out = []
    for r in range(len(pts) + 1):
        for combo in itertools.combinations(pts, r):
            cand = {domain.zero, *combo}
            if is_shape(domain, cand):
                out.append(tuple(sorted(cand)))
    return sorted(out)


class TestIsShape:
    def test_undefined_sums_do_not_obstruct(self):
        assert is_shape(IntervalDomain(4), {0, 2})

    def test_missing_defined_sum_rejected(self):
        assert not is_shape(IntervalDomain(6), {0, 2, 5})

    def test_family_exponent_set(self):
        assert is_shape(IntervalDomain(18), FAMILY_E)

    def test_zero_required(self):
        assert not is_shape(IntervalDomain(4), {1, 2, 3})

    def test_points_outside_domain_rejected(self):
        assert not is_shape(IntervalDomain(4), {0, 5})
        assert not is_shape(GridDomain(2, 2, 1), {(0, 0), (1, 1)})

    def test_shape_of_validates(self):
        with pytest.raises(ValueError):
            Shape.of(IntervalDomain(6), {0, 2, 5})
        assert Shape.of(IntervalDomain(4), [2, 0]).elems == (0, 2)


class TestRealizability:
    def test_prime_column_alone(self):
        s = Shape.of(GridDomain(2, 2), {(0, 0), (0, 1)})
        assert is_realizable_zshape(s)

    def test_missing_valuation_of_p(self):
        s = Shape.of(GridDomain(2, 2), {(0, 0), (1, 0), (1, 1)})
        assert not is_realizable_zshape(s)

    def test_partial_top_column(self):
        s = Shape.of(GridDomain(2, 2), {(0, 0), (0, 1), (1, 1)})
        assert is_realizable_zshape(s)

    def test_interval_shapes_rejected(self):
        with pytest.raises(TypeError):
            is_realizable_zshape(Shape.of(IntervalDomain(3), {0}))


class TestMinimalGenerators:
    def test_family_shape(self):
        s = Shape.of(IntervalDomain(18), FAMILY_E)
        assert s.minimal_generators() == (6, 7, 8, 17)
        assert s.generator_count() == 4

    def test_trivial_shape(self):
        assert Shape.of(IntervalDomain(5), {0}).minimal_generators() == ()

    def test_full_grid(self):
        s = Shape.of(GridDomain(2, 2), {(0, 0), (0, 1), (1, 0), (1, 1)})
        assert s.minimal_generators() == ((0, 1), (1, 0))

    def test_generate_recovers_family_shape(self):
        assert generate(IntervalDomain(18), (6, 7, 8, 17)) == FAMILY_E

    @pytest.mark.parametrize(
        "domain",
        [IntervalDomain(6), IntervalDomain(7), GridDomain(3, 2), GridDomain(2, 3, 2)],
        ids=str,
    )
    def test_generation_and_minimality(self, domain):
        for s in enumerate_shapes(domain):
            gens = s.minimal_generators()
            assert generate(domain, gens) == set(s.elems)
            for g in gens:
                rest = tuple(h for h in gens if h != g)
                assert generate(domain, rest) != set(s.elems)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_agreement_with_numerical_monoid_slice(self, n):
        # adjoining every exponent from n on leaves the generators below n alone
        big = IntervalDomain(3 * n)
        for s in enumerate_shapes(IntervalDomain(n)):
            widened = Shape.of(big, set(s.elems) | set(range(n, 3 * n)))
            low = {g for g in widened.minimal_generators() if g < n}
            assert low == set(s.minimal_generators())


class TestIntervalBound:
    def test_base_case(self):
        assert e_bound(1, {0}) == 0

    def test_unrolled_examples(self):
        assert e_bound(4, {0, 2}) == 1
        assert e_bound(4, {0, 3}) == 0

    def test_non_shape_rejected(self):
        with pytest.raises(ValueError):
            e_bound(6, {0, 2, 5})

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_recursive_oracle(self, n):
        for s in enumerate_shapes(IntervalDomain(n)):
            got = e_bound(n, s)
            assert got == e_rec(n, set(s.elems))
            assert got >= 0


class TestGridBound:
    def test_unrolled_examples(self):
        assert eps_bound(2, 2, 2, {(0, 0), (0, 1), (1, 1)}) == 0
        assert eps_bound(2, 2, 2, {(0, 0), (0, 1)}) == 0
        # n=4: two absent top points each add d - 1 = 1, the rest strips away
        assert eps_bound(4, 2, 2, {(0, 0), (0, 1), (2, 0), (2, 1)}) == 2

    def test_rejects_shallow_coefficients(self):
        with pytest.raises(ValueError):
            eps_bound(2, 1, 1, {(0, 0)})

    def test_rejects_unrealizable_shapes(self):
        with pytest.raises(ValueError):
            eps_bound(2, 2, 2, {(0, 0), (1, 0), (1, 1)})

    def test_rejects_non_shapes(self):
        with pytest.raises(ValueError):
            eps_bound(2, 2, 1, {(0, 0), (0, 1), (1, 1)})

    @pytest.mark.parametrize(
        "n,N,k",
        [(n, N, k) for n, N in [(2, 2), (3, 2), (2, 3), (4, 2)] for k in range(1, N + 1)],
    )
    def test_matches_recursive_oracle(self, n, N, k):
        for s in enumerate_shapes(GridDomain(n, N, k), realizable_only=True):
            got = eps_bound(n, N, k, s)
            assert got == eps_rec(n, N, k, set(s.elems))
            assert got >= 0


class TestEnumeration:
    def test_single_point_domain(self):
        assert [s.elems for s in enumerate_shapes(IntervalDomain(1))] == [(0,)]

    def test_small_interval(self):
        got = [s.elems for s in enumerate_shapes(IntervalDomain(3))]
        assert got == [(0,), (0, 1, 2), (0, 2)]
        assert got == shapes_by_subset_filter(IntervalDomain(3))

    @pytest.mark.parametrize(
        "domain",
        [IntervalDomain(n) for n in range(1, 8)]
        + [GridDomain(2, 2), GridDomain(2, 2, 1), GridDomain(3, 2), GridDomain(2, 3, 2)],
        ids=str,
    )
    def test_matches_subset_filter_oracle(self, domain):
        got = [s.elems for s in enumerate_shapes(domain)]
        assert got == shapes_by_subset_filter(domain)
        assert got == sorted(got)  # deterministic order

    def test_realizable_filter(self):
        domain = GridDomain(2, 2)
        got = [s.elems for s in enumerate_shapes(domain, realizable_only=True)]
        want = [
            s.elems
            for s in enumerate_shapes(domain)
            if all((0, j) in s.elems for j in range(domain.N))
        ]
        assert got == want
        assert len(got) == 3

    def test_realizable_filter_is_noop_on_intervals(self):
        dom = IntervalDomain(5)
        assert enumerate_shapes(dom, realizable_only=True) == enumerate_shapes(dom)

    def test_large_domain_rejected(self):
        with pytest.raises(TooLarge):
            enumerate_shapes(IntervalDomain(25))

    def test_interval_count_grows(self):
        counts = [len(enumerate_shapes(IntervalDomain(n))) for n in range(1, 7)]
        assert counts == sorted(counts)
        assert counts[2] == 3 and counts[3] == 5
