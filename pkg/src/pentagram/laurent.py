"""Sparse Laurent polynomials in ``p_1..p_N`` with exponents in ``{-1, 0, 1}``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["LaurentPolynomial"]


class LaurentPolynomial:
    """Map from exponent vectors to nonzero rational coefficients.

    Every exponent must lie in ``{-1, 0, 1}``; a product that leaves this
    range raises ``ValueError``.  In the expansions built here that can
    only happen when two tiles share a column.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        self.nvars = nvars
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has the wrong length for {nvars} variables")
            if any(e not in (-1, 0, 1) for e in exps):
                raise ValueError(f"exponent vector {exps} leaves {{-1, 0, 1}}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, value) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPolynomial":
        """``p_i ** power`` for 1-based cyclic ``i``."""
        exps = [0] * nvars
        exps[(i - 1) % nvars] = power
        return cls(nvars, {tuple(exps): 1})

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        return LaurentPolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {len(self.terms)} terms)"

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [Fraction(v) for v in values]
        if len(vals) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e == 1:
                    term *= v
                elif e == -1:
                    term /= v
            total += term
        return total

    def substitute_indices(self, perm: Sequence[int]) -> "LaurentPolynomial":
        """Rename variables: slot ``j`` of each output vector takes slot ``perm[j]`` of the input."""
        return LaurentPolynomial(
            self.nvars,
            {tuple(e[perm[j]] for j in range(self.nvars)): c for e, c in self.terms.items()},
        )

    def difference(self, other: "LaurentPolynomial") -> dict:
        """Exponent vectors whose coefficients differ, mapped to ``(self, other)``."""
        keys = set(self.terms) | set(other.terms)
        return {
            e: (self.terms.get(e, Fraction(0)), other.terms.get(e, Fraction(0)))
            for e in sorted(keys)
            if self.terms.get(e) != other.terms.get(e)
        }

    def to_json(self) -> list:
        from .io import format_rational

        return [
            {"exps": list(e), "coeff": format_rational(c)} for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Mapping]) -> "LaurentPolynomial":
        return cls(nvars, {tuple(item["exps"]): Fraction(item["coeff"]) for item in data})
