"""Walkthrough: Seifert matrices, Alexander polynomials, custom knots.

Shows the built-in table, rederives each polynomial from its Seifert
matrix, and registers a custom knot both ways.  Run with

    python demos/knot_table.py
"""

from swfold import (
    KNOT_BASIS,
    alexander_from_seifert,
    available_knots,
    from_text,
    knot_from_alexander,
    knot_from_seifert,
    knot_lookup,
    register_knot,
    validate_alexander,
)

print("built-in table:")
for name in available_knots():
    record = knot_lookup(name)
    seifert = [list(r) for r in record.seifert.entries]
    print(f"  {name}  fibered={record.fibered}  V={seifert}  alexander = {record.alexander}")

# The polynomial is det(tV - V^T), centered so t -> 1/t fixes it and
# scaled so the value at t = 1 is +1.
V = ((-1, 1), (0, -1))
print(f"\nrederive the trefoil from V = {[list(r) for r in V]}:")
print(f"  alexander = {alexander_from_seifert(V)}")

# The unknot: empty Seifert matrix, trivial polynomial.
unknot = knot_from_seifert("unknot", True, ())
register_knot(unknot)
print(f"\nregistered {unknot.name}: alexander = {unknot.alexander}")

# Registering by polynomial runs the validation gate instead: the
# polynomial must be symmetric and evaluate to +-1 at t = 1.
candidate = from_text("t^2 - 3 + t^-2", KNOT_BASIS)
check = validate_alexander(candidate)
print(f"\ncandidate {candidate}: symmetric={check.symmetric}, "
      f"value at 1 = {check.value_at_one}, passes={check.passes}")
if check.passes:
    record = knot_from_alexander("custom", False, candidate)
    register_knot(record)
    print(f"registered {record.name}: alexander = {record.alexander}")

print(f"\ntable is now: {', '.join(available_knots())}")
