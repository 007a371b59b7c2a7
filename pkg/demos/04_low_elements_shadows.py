"""Low elements versus the smallest Garside shadow.

For the affine group of type A~2 the two notions coincide: the closure of
the generators under suffixes and bounded joins is exactly the sixteen low
elements.  For type G~2 they differ: 1 3 2 is a low element that the
closure never reaches, the classical witness that the smallest shadow can
be strictly inside the low elements.
"""

from coxroots import RootSystem, garside_closure, is_low, low_elements, verify_garside

for name in ("Atilde2", "Gtilde2", "Dinf", "universal:3"):
    rs = RootSystem.preset(name)
    shadow = garside_closure(rs)
    lows = low_elements(rs, 0)
    print(f"{name}: shadow size {len(shadow.elements)} "
          f"(converged={shadow.converged}, iterations={shadow.iterations}), "
          f"low elements {len(lows.elements)}")
    check = verify_garside(rs, set(lows.elements))
    print(f"  low set satisfies the Garside axioms: {check.ok}")
    extra = set(lows.elements) - set(shadow.elements)
    if extra:
        sample = sorted(extra, key=lambda e: e.sort_key())[0]
        print(f"  low elements outside the smallest shadow, e.g. {sample} "
              f"(is_low: {is_low(rs, sample, 0)})")
    print()

rs = RootSystem.preset("Atilde2")
print("the sixteen elements of the smallest shadow in affine A2:")
for e in garside_closure(rs).elements:
    print(f"  {e}")
