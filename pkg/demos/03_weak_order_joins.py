"""Joins in the weak order, decided exactly through cones and automata.

In the affine group of type A~2 the pair (3 1, 3 2) is bounded: the cone
over the union of their inversion sets picks up one extra root and the join
is 3 1 2 1.  The pair (1, 3 2) is unbounded; the certificate is that no
automaton state contains both inversion sets, which mirrors the limit-root
picture: the segment between the two inversion sets crosses the isotropic
direction.
"""

from coxroots import RootSystem, join, meet, realize_cone

rs = RootSystem.preset("Atilde2")

for a, b in [("3 1", "3 2"), ("2 1", "2 3"), ("1 2", "1 3"), ("1", "3 2")]:
    u, v = rs.element_from_str(a), rs.element_from_str(b)
    out = join(rs, u, v)
    print(f"({a}) v ({b}) = {out}")
    if out.exists:
        inv = sorted(rs.inversion_set(out.element))
        pretty = ", ".join(rs.coords_str(rs.roots[i].coords) for i in inv)
        print(f"  inversion set of the join: {pretty}")
print()

u, v = rs.element_from_str("3 1"), rs.element_from_str("3 2")
print(f"meet of the join 3 1 2 1 with 3 2 recovers the prefix: "
      f"{meet(rs, rs.element_from_str('3 1 2 1'), v)}")
print()

ids = sorted(rs.inversion_set(u) | rs.inversion_set(v))
real = realize_cone(rs, ids)
print(f"realize_cone over N(3 1) union N(3 2): {real.element} "
      f"(bounded={real.bounded}, witness state {real.witness_state})")
