"""Spin polynomials with exact integer coefficients.

Exponents are stored doubled (``exponent2 = 2 * spin``) because strips can
carry half-integer spin. Coefficients are Python ints, so nothing overflows.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping


class NegativeExponent(ValueError):
    pass


class PivotTooSmall(ValueError):
    pass


class SpinPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e2, c in items:
            if e2 < 0:
                raise NegativeExponent(f"exponent2 {e2} < 0")
            if c < 0:
                raise ValueError("coefficients must be nonnegative")
            if c:
                clean[e2] = clean.get(e2, 0) + c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def one(cls) -> "SpinPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent2: int, coeff: int = 1) -> "SpinPolynomial":
        return cls({exponent2: coeff})

    @classmethod
    def from_spins(cls, coeffs: Iterable[int], start: int = 0) -> "SpinPolynomial":
        """Build from coefficients of q^start, q^(start+1), ... (integer spins)."""
        return cls({2 * (start + i): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exponent2: int) -> int:
        return self._terms.get(exponent2, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "SpinPolynomial") -> "SpinPolynomial":
        return poly_add(self, other)

    def __repr__(self) -> str:
        return f"SpinPolynomial({self._terms!r})"

    def __str__(self) -> str:
        return poly_format(self, "plain")

    def min_exponent2(self) -> int | None:
        return next(iter(self._terms), None)

    def max_exponent2(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def is_palindromic(self) -> bool:
        if not self._terms:
            return True
        return poly_mirror(self, self.min_exponent2() + self.max_exponent2()) == self


def poly_add(a: SpinPolynomial, b: SpinPolynomial) -> SpinPolynomial:
    terms = dict(a._terms)
    for e2, c in b._terms.items():
        terms[e2] = terms.get(e2, 0) + c
    return SpinPolynomial(terms)


def poly_sum(polys: Iterable[SpinPolynomial]) -> SpinPolynomial:
    terms: dict[int, int] = {}
    for p in polys:
        for e2, c in p._terms.items():
            terms[e2] = terms.get(e2, 0) + c
    return SpinPolynomial(terms)


def poly_shift(p: SpinPolynomial, s2: int) -> SpinPolynomial:
    """Multiply by q^(s2/2)."""
    if p._terms and p.min_exponent2() + s2 < 0:
        raise NegativeExponent(f"shift by {s2} makes exponent2 negative")
    return SpinPolynomial({e2 + s2: c for e2, c in p._terms.items()})


def poly_mirror(p: SpinPolynomial, pivot2: int) -> SpinPolynomial:
    """Map q^(e/2) to q^((pivot2 - e)/2), i.e. q^(pivot2/2) * p(1/q)."""
    if p._terms and pivot2 < p.max_exponent2():
        raise PivotTooSmall(f"pivot2 {pivot2} < max exponent2 {p.max_exponent2()}")
    return SpinPolynomial({pivot2 - e2: c for e2, c in p._terms.items()})


def poly_eval_one(p: SpinPolynomial) -> int:
    return sum(p._terms.values())


def _exponent_text(e2: int, latex: bool) -> str:
    if e2 % 2:
        return f"q^{{{e2}/2}}" if latex else f"q^({e2}/2)"
    e = e2 // 2
    if e == 1:
        return "q"
    return f"q^{{{e}}}" if latex else f"q^{e}"


def poly_format(p: SpinPolynomial, style: str = "plain") -> str:
    """Render in ascending exponent order. Styles: plain, latex, json."""
    if style == "json":
        return json.dumps([[e2, str(c)] for e2, c in p._terms.items()])
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    latex = style == "latex"
    if not p._terms:
        return "0"
    out = []
    for e2, c in p._terms.items():
        if e2 == 0:
            out.append(str(c))
            continue
        mono = _exponent_text(e2, latex)
        if c == 1:
            out.append(mono)
        else:
            out.append(f"{c}{mono}" if latex else f"{c}*{mono}")
    return " + ".join(out)


def poly_from_json(text: str) -> SpinPolynomial:
    return SpinPolynomial((int(e2), int(c)) for e2, c in json.loads(text))
