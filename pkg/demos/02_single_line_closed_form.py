"""One parabolic line, and the closed form it must satisfy.

A single line summand with first Chern class c1 and weight alpha_i at
its jump on the i-th divisor has parabolic Chern character

    exp(c1 - sum_i alpha_i D_i)

-- the weighted twist is all that survives.  The model case (trivial
line, one divisor, weight -1/2) gives exp(D/2) = 1 + D/2 + D^2/8 + ...
This script evaluates the worked case by every route and then sweeps a
few weights to watch the closed form track them.

Run:  python3 demos/02_single_line_closed_form.py
"""

from fractions import Fraction

from parchern import (IntersectionModel, Ladder, LineSummand, ParabolicBundle, WeightFunction,
                      ch_par_general, ch_par_integral, ch_par_rr, oracle_integral)

F = Fraction

# --- the worked case ---------------------------------------------------------

model = IntersectionModel(1, truncation_degree=3)
weights = WeightFunction(Ladder.of_risers(1), (F(-1, 2),))
bundle = ParabolicBundle(model, (weights,), (LineSummand(model.zero(), (0,)),))

D = model.divisor(0)
expected = (D / 2).exp()
print("trivial line, one divisor, weight -1/2, truncated at degree 3:")
print("  closed form exp(D/2) =", expected.to_text())

for name, route in (("integral", ch_par_integral), ("general", ch_par_general),
                    ("riemann-roch", ch_par_rr), ("oracle", oracle_integral)):
    value = route(bundle)
    marker = "ok" if value == expected else "MISMATCH"
    print(f"  {name:<13} {value.to_text()}   [{marker}]")
    assert value == expected

# --- sweep the weight --------------------------------------------------------

print("\nsame line, weight alpha sweeping; character is exp(-alpha D):")
for alpha in (F(0), F(-1, 4), F(-1, 2), F(-3, 4), F(-11, 12)):
    wf = WeightFunction(Ladder.of_risers(1), (alpha,))
    b = ParabolicBundle(model, (wf,), (LineSummand(model.zero(), (0,)),))
    got = ch_par_integral(b)
    assert got == (-alpha * D).exp() == oracle_integral(b)
    print(f"  alpha = {str(alpha):>6}  ->  {got.to_text()}")

# --- a non-trivial c1 over two divisors --------------------------------------

model2 = IntersectionModel(2, extra_classes=["H"])
w1 = WeightFunction(Ladder.of_risers(2), (F(-2, 3), F(-1, 3)))
w2 = WeightFunction(Ladder.of_risers(1), (F(-1, 5),))
line = LineSummand(model2.generator("H") - model2.divisor(1), (1, 0))
b2 = ParabolicBundle(model2, (w1, w2), (line,))

# the jump on divisor 1 sits at riser 1 (weight -1/3), on divisor 2 at
# riser 0 (weight -1/5)
shift = F(-1, 3) * model2.divisor(0) + F(-1, 5) * model2.divisor(1)
closed = (line.c1 - shift).exp()
assert ch_par_integral(b2) == ch_par_general(b2) == ch_par_rr(b2) \
    == oracle_integral(b2) == closed
print("\ntwo divisors, c1 = H - D2, weights (-1/3, -1/5) at the jumps:")
print("  all four routes ==", closed.to_text()[:70] + " ...")
