"""Censuses over Z[x]/(p^N, x^n, p^k x^(n-1)): realizable shapes, exact
counts, and the eps ceiling.

Run:  python3 demos/05_z_census.py
"""

from truncring import (
    GridDomain,
    census,
    enumerate_shapes,
    enumerate_subrings,
    exponent_set,
    is_realizable_zshape,
    zpn_ring,
)


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


# ------------------------------------------------------------------ one census

banner("all subrings of Z[x]/(2^2, x^3, 2x^2)")

ctx = zpn_ring(2, 2, 3, 1)
subs = enumerate_subrings(ctx)
print(f"{len(subs)} subrings of the {ctx.size}-element ring:")
for S in subs:
    basis = ", ".join(ctx.format(r) for r in S.basis)
    print(f"  span({basis}){' ' * max(1, 26 - len(basis))} shape {exponent_set(S).elems}")

# ------------------------------------------------------ realized vs realizable

banner("realized shapes are exactly the ones containing the zero column")

grid = GridDomain(ctx.n, ctx.coeff.N, ctx.k)
realized = {exponent_set(S).elems for S in subs}
for sh in enumerate_shapes(grid):
    predicted = is_realizable_zshape(sh)
    seen = sh.elems in realized
    mark = "ok" if predicted == seen else "MISMATCH"
    print(f"  {str(sh.elems):46} predicted={predicted!s:5} realized={seen!s:5} {mark}")

# ------------------------------------------------------------- census tables

banner("census rows across the small family")

for p, N, n, k in [(2, 2, 2, 1), (2, 2, 2, 2), (2, 2, 3, 2), (3, 2, 2, 1), (2, 3, 2, 2)]:
    ctx = zpn_ring(p, N, n, k)
    rows = census(ctx)
    total = sum(r.count for r in rows)
    agree = enumerate_subrings(ctx, "closure_bfs") == enumerate_subrings(ctx, "minimal_ext")
    print(f"\n{ctx!r}: {total} subrings (enumerators agree: {agree})")
    print(f"  {'shape':46} {'count':>5} {'bound':>5}")
    for r in rows:
        print(f"  {str(r.shape.elems):46} {r.count:>5} {r.bound:>5}")
