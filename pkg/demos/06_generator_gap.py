"""A family where the ring needs fewer generators than its exponent shape:
three elements generate the subring, but the shape has four minimal
generators.  The missing exponent is produced inside m^2.

Run:  python3 demos/06_generator_gap.py
"""

from truncring import FieldCtx, counterexample_family


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


banner("the construction at a = 6 over F_2")

rep = counterexample_family(6, FieldCtx(2))
ctx = rep.ctx
print(f"ambient ring: {ctx!r}")
print("ring generators:")
for g in rep.gens:
    print(f"  {ctx.format(g)}")
print(f"\nsubring size: 2^{rep.ring.log_size}")
print(f"exponent shape: {rep.shape.elems}")
print(f"shape generators: {rep.generators}")
print(f"d(shape) = {rep.d_shape}, ring generated by d = {rep.d_ring} elements")

banner("where the fourth exponent comes from")

g1, g2, g3 = rep.gens
w = ctx.sub(ctx.mul(g1, g3), ctx.mul(g2, g2))
print("g1*g3 - g2^2 =", ctx.format(w))
print(f"matches the stored witness: {w == rep.witness}")
print(f"witness lies in m^2 of the subring: {rep.witness_in_square}")
print("\nso exponent {0} appears without a fourth ring generator: the".format(rep.generators[-1]))
print("monomial is manufactured by the off-diagonal product above.")

banner("the gap persists along the family")

print(f"{'a':>3} {'p':>3} {'ambient':>14} {'d(shape)':>9} {'d(ring)':>8}")
for a in (6, 7, 8):
    for p in (2, 3):
        r = counterexample_family(a, FieldCtx(p))
        print(f"{a:>3} {p:>3} {r.ctx!r:>14} {r.d_shape:>9} {r.d_ring:>8}")
