"""Exponent shapes: the additive footprints subrings leave, and the
counting bounds driven by their generator numbers.

Run:  python3 demos/02_shapes_and_bounds.py
"""

from truncring import (
    GridDomain,
    IntervalDomain,
    Shape,
    e_bound,
    enumerate_shapes,
    eps_bound,
    is_realizable_zshape,
    is_shape,
    minimal_generators,
)


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


# --------------------------------------------------------------- shape basics

banner("shapes inside the interval {0, ..., n-1}")

dom = IntervalDomain(6)
print("a shape is a subset containing 0 and closed under in-range sums:")
for elems in [(0, 2, 4), (0, 2, 3, 4, 5), (0, 3), (2, 4), (0, 2, 5)]:
    print(f"  {elems}: {'shape' if is_shape(dom, elems) else 'not a shape'}")

s = Shape.of(dom, (0, 2, 3, 4, 5))
print(f"\nminimal generators of {s.elems}: {minimal_generators(s)}")
print("(0 is the identity, 4 = 2 + 2 and 5 = 2 + 3 are decomposable)")

# ------------------------------------------------------------ interval bounds

banner("the bound: at most q^e(E) subrings share a shape E")

print("e(E) counts nonzero minimal generators, then corrects along the chain:")
for n in range(2, 7):
    dom = IntervalDomain(n)
    rows = [(sh.elems, e_bound(n, sh)) for sh in enumerate_shapes(dom)]
    print(f"  n={n}: " + ", ".join(f"{e}->{b}" for e, b in rows))

# ----------------------------------------------------------------- grid side

banner("two-axis shapes for Z[x]/(p^N, x^n, p^k x^(n-1))")

grid = GridDomain(3, 2, 1)
print(f"grid points (x-exponent, p-exponent), tail capped: {grid.points}")

shapes = enumerate_shapes(grid)
print(f"\n{len(shapes)} shapes in total; realizable ones contain the zero column:")
for sh in shapes:
    tag = "realizable" if is_realizable_zshape(sh) else "shape only"
    print(f"  {str(sh.elems):48} {tag}")

banner("the mixed-characteristic exponent bound")

print("eps discounts the ever-present generator (0,1), the valuation of p:")
for sh in enumerate_shapes(grid, realizable_only=True):
    b = eps_bound(3, 2, 1, sh)
    print(f"  shape {str(sh.elems):40} d = {sh.generator_count():2d}  eps = {b}")
