"""Walk through exact root generation in the affine group of type G~2.

The three generators carry orders m12 = 6, m23 = 3, m13 = 2, so every
Gram entry lives in Q(2*cos(pi/6)) = Q(sqrt 3) and every root coordinate is
an exact element of that field.  Depth-first facts to notice: the depth of
a root counts how far it is from the simple roots, and the dominance depth
(how many other positive roots it dominates) grows much more slowly.
"""

from coxroots import RootSystem, dominance_depth

rs = RootSystem.preset("Gtilde2")
print(f"field: Q(t), t = 2*cos(pi/{rs.field.n}), degree {rs.field.degree}")
print(f"minimal polynomial coefficients: {rs.field.minpoly}")
print()
print("Gram matrix (exact / decimal):")
for row in rs.gram:
    print("  " + "  ".join(f"{x.exact_str():>6} ({x.decimal_str(4)})" for x in row))
print()

print("roots by depth (id, depth, dominance depth, coordinates):")
for r in rs.roots_to_depth(5):
    print(f"  #{r.id:<3} depth={r.depth}  dpinf={dominance_depth(rs, r.id)}  "
          f"[{rs.coords_str(r.coords)}]")
print()

w = rs.element_from_str("1 3 2")
print(f"element {w} has inversion set:")
for rid in sorted(rs.inversion_set(w)):
    print(f"  [{rs.coords_str(rs.roots[rid].coords)}]")
base = ", ".join(f"[{rs.coords_str(rs.roots[i].coords)}]"
                 for i in sorted(rs.inversion_base(w)))
print(f"and inversion base (extreme rays): {base}")
