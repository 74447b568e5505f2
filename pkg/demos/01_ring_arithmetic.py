"""Tour of the two truncated ring families and their exact arithmetic.

Run:  python3 demos/01_ring_arithmetic.py
"""

from truncring import NotAUnit, UndefinedValuation, field_ring, zpn_ring


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


# ---------------------------------------------------------------- field side

banner("F_q[x]/x^n with q a prime power")

R = field_ring(2, 4)
print(f"ring: {R!r}, {R.size} elements")

a = R.parse("1 + x + x^3")
b = R.parse("x + x^2")
print(f"  ({R.format(a)}) * ({R.format(b)}) = {R.format(R.mul(a, b))}")
print(f"  ({R.format(a)}) + ({R.format(b)}) = {R.format(R.add(a, b))}")

# extension-field coefficients are coordinate vectors in the basis 1, t, ...
F4 = field_ring(4, 3)
print(f"\nring: {F4!r} (coefficients in F_4 = F_2[t], modulus {F4.coeff.modulus})")
t = F4.parse("[0,1]")
print(f"  t * t = {F4.format(F4.mul(t, t))}  (t^2 = t + 1 in F_4)")
c = F4.parse("[0,1] + [1,1]x")
d = F4.parse("[0,1]x + x^2")
print(f"  ({F4.format(c)}) * ({F4.format(d)}) = {F4.format(F4.mul(c, d))}")

# ----------------------------------------------------------------- valuation

banner("the partial valuation nu (order of vanishing)")

for text in ("x^2 + x^3", "1 + x", "x^3"):
    v = R.parse(text)
    print(f"  nu({R.format(v)}) = {R.nu(v)}")
try:
    R.nu(R.zero())
except UndefinedValuation as e:
    print(f"  nu(0) -> {type(e).__name__}: {e}")

print("\nstrictness: nu(ab) = nu(a) + nu(b) whenever the sum is in range")
a, b = R.parse("x + x^2"), R.parse("x^2")
print(f"  nu(a)={R.nu(a)}, nu(b)={R.nu(b)}, ab = {R.format(R.mul(a, b))} -> nu = {R.nu(R.mul(a, b))}")

# ---------------------------------------------------------------- mixed side

banner("Z[x]/(p^N, x^n, p^k x^(n-1)): two-axis truncation")

Z = zpn_ring(2, 3, 3, 1)
print(f"ring: {Z!r}, {Z.size} elements")
print("coefficient caps per degree:", Z.caps)

u = Z.parse("2 + x")
v = Z.parse("4 + x^2")
print(f"  ({Z.format(u)}) * ({Z.format(v)}) = {Z.format(Z.mul(u, v))}  (the x^2 slot lives mod 2)")

print("\nvaluations are pairs (x-order, p-order of the leading coefficient):")
for text in ("4 + 2x", "x^2", "6x"):
    w = Z.parse(text)
    print(f"  nu({Z.format(w)}) = {Z.nu(w)}")

print("\nunits are detected exactly:")
print(f"  is_unit(1 + 2x) = {Z.is_unit(Z.parse('1 + 2x'))}")
print(f"  is_unit(2 + x)  = {Z.is_unit(Z.parse('2 + x'))}")
try:
    Z.coeff.inv(2)
except NotAUnit as e:
    print(f"  inverting 2 in Z/8 -> {type(e).__name__}: {e}")
