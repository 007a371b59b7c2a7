"""Maximal dihedral subsystems: bipodality holds, balance can fail.

Every plane through two roots meets the root system in a dihedral
subsystem with a certified canonical simple pair.  The small roots are
bipodal (contain both endpoints of any segment they touch in the interior)
on every preset here, but in type G~2 they are not balanced: one finite
segment carries dominance depths (0, 0, 1, 0, 1, 0), so a small root sits
above a non-small one in the local reflection length.
"""

from coxroots import (
    RootSystem,
    check_balanced,
    check_bipodal,
    check_heart,
    dominance_depth_vec,
    monotonicity_probe,
    plane_subsystem,
    positive_chain,
    small_roots,
)

for name in ("Atilde2", "Gtilde2", "rank3:7,3", "triangle:2,3,7"):
    rs = RootSystem.preset(name)
    ids = small_roots(rs, 0).ids
    print(f"{name}: bipodal={check_bipodal(rs, ids).status} "
          f"balanced={check_balanced(rs, ids).status} "
          f"heart={check_heart(rs).status}")
print()

rs = RootSystem.preset("Gtilde2")
report = check_balanced(rs, small_roots(rs, 0).ids)
for w in report.witnesses:
    if "segment_dominance_depths" in w:
        print(f"unbalanced segment with dominance depths {w['segment_dominance_depths']}")
        break
print()

rs = RootSystem.preset("Atilde2")
sub = plane_subsystem(rs, rs.basis_vec(1), rs.act((0,), rs.basis_vec(2)))
print(f"infinite subsystem with simples "
      f"[{rs.coords_str(sub.simples[0])}] and [{rs.coords_str(sub.simples[1])}]")
side = positive_chain(rs, sub.simples[0], sub.simples[1], 5)
print("dominance depth along one side of the segment:",
      [dominance_depth_vec(rs, v) for v in side])
print(f"monotonicity probe: {monotonicity_probe(rs, sub, cap=5).status}")
