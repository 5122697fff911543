"""
From invariants to sentences
============================

Substitute x_i = (1 - p_i)/p_{i+1} and y_i = (1 - p_{i+1})/p_i into O_2 of a
hexagon.  Each monomial in the p's is a sentence (A for 1/p, B for p, X for
a missing variable) and its coefficient is that sentence's weight-2 count.
"""

from pentagram.bridge import compare_expansion, expand_O_in_p, monomial_sentence
from pentagram.puzzle import weight_poly

O2 = expand_O_in_p(6, 2)
print(len(O2), "monomials")
for exps, coeff in sorted(O2.terms.items())[:8]:
    sentence = monomial_sentence(exps)
    print(f"{sentence}: coefficient {coeff}, puzzle says {weight_poly(sentence, 'cyclic')[2]}")

print("all coefficients agree:", compare_expansion(6, 2)["equal"])
