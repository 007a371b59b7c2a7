"""Small roots and the automaton that recognizes reduced words.

The infinite dihedral group has exactly two small roots (the simple ones),
giving a three-state automaton; the affine group of type A~2 has six and the
automaton distinguishes sixteen small inversion sets.  Counting paths
filtered by the smallest-descent condition recovers the growth function of
the group exactly, which we compare against an explicit ball.
"""

from coxroots import RootSystem, get_automaton, small_roots

for name in ("Dinf", "Atilde2"):
    rs = RootSystem.preset(name)
    sm = small_roots(rs, 0)
    auto = get_automaton(rs, 0)
    print(f"{name}: {len(sm.ids)} small roots, {auto.state_count()} automaton states")
    for rid in sm.ids:
        print(f"  small: [{rs.coords_str(rs.roots[rid].coords)}]")
    counts = auto.count_elements_by_length(10)
    print(f"  elements by length 0..10: {counts}")
    print()

rs = RootSystem.preset("Atilde2")
auto = get_automaton(rs, 0)
for word, reading in [((0, 1, 0, 1), "1 2 1 2"), ((0, 1, 2, 0), "1 2 3 1")]:
    verdict = "reduced" if auto.is_reduced(word) else "not reduced"
    print(f"word {reading}: {verdict}")

print()
print("DOT export of the three-state automaton for the infinite dihedral group:")
print(get_automaton(RootSystem.preset("Dinf"), 0).to_dot())
