"""Tour of the geometric substrate: double numbers, circles, boosts, angles.

Run:  python demos/01_double_plane_basics.py
"""

import math

from mink4r import (
    Boost,
    DoubleNumber,
    LVec2,
    boost_apply,
    causal_classify,
    conj,
    cosine_rule_side,
    from_polar,
    hyperbolic_modulus,
    hyperbolic_scalar_product,
    is_isotropic,
    minkowski_circle_point,
    mul,
    oriented_angle,
    reversed_polygon_check,
)

print("== double-number arithmetic ==")
z = DoubleNumber(2.0, 1.0)
w = DoubleNumber(3.0, 2.0)
print(f"z = {z}, w = {w}")
print(f"z * w       = {mul(z, w)}   (the unipotent unit squares to +1)")
print(f"z * conj(z) = {mul(z, conj(z))}   (lands on the real axis)")
print(f"<z, w>      = {hyperbolic_scalar_product(z, w)}")
print(f"|z|         = {hyperbolic_modulus(z):.6f}")
print(f"(1, 1) isotropic? {is_isotropic(DoubleNumber(1.0, 1.0))}  "
      f"(zero modulus despite being nonzero)")

print()
print("== Minkowskian circles are hyperbolas ==")
for t in (-1.0, 0.0, 1.0):
    x, y = minkowski_circle_point(2.0, t)
    print(f"  t = {t:+.1f}: ({x:+.4f}, {y:+.4f}),  x^2 - y^2 = {x * x - y * y:.12f}")
print(f"polar form r e^(j phi): {from_polar(2.0, 1.0)}")

print()
print("== boosts play the role of rotations ==")
v = LVec2(1.0, 0.0)
for phi in (0.5, 1.0, 2.0):
    img = boost_apply(Boost(phi), v)
    print(f"  boost({phi:.1f}) (1, 0) -> ({img.u1:.4f}, {img.u2:.4f}),  "
          f"norm stays {math.sqrt(abs(img.u1**2 - img.u2**2)):.12f}")

print()
print("== causal classes and angles ==")
for coords in ((2.0, 0.5), (0.5, 2.0), (1.0, 1.0), (-2.0, 0.5)):
    c = causal_classify(LVec2(*coords))
    print(f"  {coords}: {c.kind.value}, {c.pointing.value}")
x = LVec2(math.cosh(0.3), math.sinh(0.3))
y = LVec2(math.cosh(1.1), math.sinh(1.1))
print(f"oriented angle between rapidity 0.3 and 1.1 directions: "
      f"{oriented_angle(x, y):.12f}")

print()
print("== reversed triangle inequality ==")
u = LVec2(2.0, 1.0)
v = LVec2(2.0, -1.0)
total = LVec2(u.u1 + v.u1, u.u2 + v.u2)
print(f"  |u + v| = {math.sqrt(abs(total.u1**2 - total.u2**2)):.4f}  vs  "
      f"|u| + |v| = {2 * math.sqrt(3):.4f}  (sum dominates!)")
print(f"  oracle agrees: {reversed_polygon_check([u, v])}")
side = cosine_rule_side(1.0, 1.0, math.acosh(2.0))
print(f"cosine rule with included angle arcosh(2): side = {side.length:.4f}, "
      f"signed square = {side.signed_sq:.1f}")
