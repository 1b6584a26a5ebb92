"""Four independent evaluation routes on a bundle with real structure.

The same parabolic Chern character is computed as

  * integral  -- per-cell weighted exponential integrals over the Dom
                 grid, summed with grouped twist patterns;
  * general   -- the pushforward formula with per-riser bracket factors;
  * rr        -- the Riemann-Roch style split into a trivial-weight term
                 and a weighted correction;
  * oracle    -- a deliberately naive cellwise integrator sharing no
                 code with the engine beyond the ring itself.

They must agree coefficient-for-coefficient, and grades 0..3 must equal
the separately expanded low-degree formulas.  ``cross_check`` bundles
all of that (plus the structural identities of demo 04) into one
report.

Run:  python3 demos/03_four_routes_cross_check.py
"""

import json
from fractions import Fraction

from parchern import (IntersectionModel, Ladder, LineSummand, ParabolicBundle, WeightFunction,
                      cross_check, low_degree, random_instance)

F = Fraction

# Three summands over two boundary divisors that do not meet; one extra
# ambient class H; weights with a deliberate tie on the first ladder
# (its middle Dom interval is empty and must contribute nothing).
model = IntersectionModel(2, truncation_degree=5, extra_classes=["H"],
                          relations=[{"D1": 1, "D2": 1}])
w1 = WeightFunction(Ladder.of_risers(3), (F(-3, 4), F(-1, 2), F(-1, 2)))
w2 = WeightFunction(Ladder.of_risers(2), (F(-5, 6), F(0),))
H = model.generator("H")
summands = (
    LineSummand(2 * H, (0, 0)),
    LineSummand(model.divisor(0) - H, (2, 1)),
    LineSummand(-3 * H + model.divisor(1), (1, 1)),
)
bundle = ParabolicBundle(model, (w1, w2), summands)

report = cross_check(bundle)
print("agreement:", report.agreement)
assert report.agreement

print("\nper-route totals (identical by construction):")
for name, cls in report.methods.items():
    print(f"  {name:<9} {cls.to_text()[:84]} ...")

print("\nlow-degree forms equal the graded parts of any route:")
reference = report.methods["integral"]
for k, part in sorted(low_degree(bundle).items()):
    assert part == reference.grade(k)
    print(f"  ch{k}: {part.to_text()[:80]}")

print("\nfull report as canonical JSON (truncated):")
text = json.dumps(report.to_json_dict(), indent=2)
print("\n".join(text.splitlines()[:14]))
print(f"  ... {len(text.splitlines())} lines total")

# The same machinery runs unattended over seeded random instances --
# this is exactly what `parchern selftest` and the acceptance suite do.
print("\nseeded random instances:")
for seed in range(6):
    b = random_instance(seed)
    r = cross_check(b)
    assert r.agreement
    print(f"  seed {seed}: n={b.num_divisors} rank={b.rank} "
          f"d={b.model.truncation_degree} -> agreement {r.agreement}")
