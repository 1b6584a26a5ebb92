"""Structural identities behind the formulas.

Two exact identities make the evaluation routes verifiable from the
inside rather than only against each other:

  * the Koszul identity: for every tread multi-index sigma, the twisted
    character ch(E_sigma) equals the inclusion-exclusion sum of the
    bundle's character with the quotient classes of the pieces jumping
    above sigma;

  * the pushforward relation: ch(E).(1 - exp(-D)) plus the signed sum
    of corrected pushforwards of all graded pieces vanishes exactly.

Alongside them sit two combinatorial partitions: ranks of graded pieces
on one divisor partition over the risers of any second divisor, and the
Dom intervals of each weight function tile (0, 1] with telescoping
rational endpoints.

Run:  python3 demos/04_koszul_and_grothendieck.py
"""

from fractions import Fraction

from parchern import (IntersectionModel, Ladder, LineSummand, ParabolicBundle, WeightFunction,
                      ch_vb_sigma, graded_piece, koszul_ch_sigma, rational_text,
                      verify_grothendieck_relation)

F = Fraction

model = IntersectionModel(2, truncation_degree=4)
w1 = WeightFunction(Ladder.of_risers(2), (F(-1, 2), F(-1, 4)))
w2 = WeightFunction(Ladder.of_risers(2), (F(-2, 3), F(-1, 6)))
summands = (
    LineSummand(model.zero(), (0, 1)),
    LineSummand(model.divisor(0), (1, 1)),
    LineSummand(-model.divisor(1), (1, 0)),
    LineSummand(model.divisor(0) - model.divisor(1), (0, 0)),
)
bundle = ParabolicBundle(model, (w1, w2), summands)

# --- Koszul identity over the whole tread grid --------------------------------

print("Koszul identity on every tread multi-index sigma:")
for sigma in bundle.sigma_grid():
    direct = ch_vb_sigma(bundle, sigma)
    inclusion_exclusion = koszul_ch_sigma(bundle, sigma)
    assert direct == inclusion_exclusion
    print(f"  sigma={sigma}: ch(E_sigma) starts "
          f"{direct.to_text()[:48]} ...  [match]")

# --- the pushforward relation --------------------------------------------------

residual = verify_grothendieck_relation(bundle)
print("\npushforward relation residual:", residual.to_text())
assert residual.is_zero()

# --- rank partition over a second divisor -------------------------------------

print("\nranks of graded pieces partition over any second divisor:")
for r1 in bundle.ladder(0).riser_range():
    total = graded_piece(bundle, (0,), (r1,)).rank
    split = [graded_piece(bundle, (0, 1), (r1, r2)).rank
             for r2 in bundle.ladder(1).riser_range()]
    assert total == sum(split)
    print(f"  divisor 1, riser {r1}: rank {total} = {' + '.join(map(str, split))}"
          f"  (over divisor 2's risers)")

# --- Dom intervals tile (0, 1] --------------------------------------------------

print("\nDom intervals of the first weight function tile (0, 1]:")
previous_upper = F(0)
for k in w1.ladder.tread_range():
    lo, hi = w1.dom_bounds(k)
    assert lo == previous_upper
    previous_upper = hi
    print(f"  tread {k}: ({rational_text(lo)}, {rational_text(hi)}]")
assert previous_upper == 1
