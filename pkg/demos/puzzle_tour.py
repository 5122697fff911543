"""
The sentence puzzle
===================

Parse strings over A, X, B into weighted words and check that reading a
sentence backwards does not change its weight polynomial.
"""

from pentagram.puzzle import (
    ORIGINAL,
    TIGHT,
    CyclicSentence,
    OpenSentence,
    enumerate_parsings,
    verify_palindrome,
    weight_poly,
)

S = CyclicSentence("ABAXA")
print(S, "=", weight_poly(S))
for parsing in enumerate_parsings(S):
    print("   ", parsing, "coefficient", parsing.coefficient)

W = OpenSentence("ABAXA")
print(W, "(open, tight) =", weight_poly(W, table=TIGHT))
for parsing in enumerate_parsings(W, table=TIGHT):
    print("   ", parsing, "weight", parsing.weight, "coefficient", parsing.coefficient)

# every cyclic sentence of length <= 8, forwards and backwards
report = verify_palindrome("cyclic", 8, ORIGINAL)
print(report["checked"], "cyclic classes checked,", len(report["counterexamples"]), "counterexamples")
