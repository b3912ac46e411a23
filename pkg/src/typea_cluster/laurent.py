"""Exact multivariate Laurent polynomials over the integers.

A polynomial in ``x1..xm`` is a mapping from exponent tuples of length ``m``
(entries may be negative) to nonzero Python ints.  Terms are ordered by
graded-lex (total degree first, then lexicographic with x1 most significant);
rendering lists them in descending order.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import NotDivisible

Exps = tuple[int, ...]

_EXP_BOUND = 1 << 31


def grlex_key(exps: Exps):
    return (sum(exps), exps)


def _check(exps: Exps) -> Exps:
    for e in exps:
        if not -_EXP_BOUND < e < _EXP_BOUND:
            raise OverflowError(f"exponent {e} out of range")
    return exps


class LaurentPoly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | Iterable = ()):
        self.nvars = nvars
        clean: dict[Exps, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length != {nvars}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def var(cls, i: int, nvars: int) -> "LaurentPoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- basic protocol -------------------------------------------------------
    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def sorted_terms(self, descending: bool = True) -> list[tuple[Exps, int]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def monomials(self) -> frozenset[Exps]:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPoly.one(self.nvars) * other if other else not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def _same(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # -- ring operations ------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.one(self.nvars) * other
        self._same(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._same(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _check(tuple(a + b for a, b in zip(e1, e2)))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly.monomial(tuple(a * k for a in e), c ** -k)
        out = LaurentPoly.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, exps: Exps) -> "LaurentPoly":
        """Multiply by the monomial x^exps."""
        return LaurentPoly._raw(self.nvars, {
            _check(tuple(a + b for a, b in zip(e, exps))): c for e, c in self._terms.items()})

    # -- queries --------------------------------------------------------------
    def min_exponents(self) -> Exps:
        if not self._terms:
            raise ValueError("zero polynomial has no exponent bounds")
        return tuple(min(col) for col in zip(*self._terms))

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self._terms for a in e)

    def leading_term(self) -> tuple[Exps, int]:
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def is_positive(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    # -- rendering ------------------------------------------------------------
    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for idx, a in enumerate(exps, start=1):
                if a == 1:
                    factors.append(f"x{idx}")
                elif a:
                    factors.append(f"x{idx}^{a}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"vars": self.nvars,
                "terms": [{"coeff": c, "exps": list(e)} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "LaurentPoly":
        return cls(doc["vars"], [(t["exps"], t["coeff"]) for t in doc["terms"]])


def _poly_divide(P: dict, Q: dict, nvars: int) -> dict:
    """Exact division of ordinary polynomials by leading-term reduction."""
    lq = max(Q, key=grlex_key)
    cq = Q[lq]
    rem = dict(P)
    quot: dict[Exps, int] = {}
    while rem:
        lr = max(rem, key=grlex_key)
        cr = rem[lr]
        e = tuple(a - b for a, b in zip(lr, lq))
        if any(a < 0 for a in e) or cr % cq:
            raise NotDivisible("nonzero remainder in exact division")
        c = cr // cq
        quot[e] = c
        for eq, cc in Q.items():
            m = tuple(a + b for a, b in zip(e, eq))
            v = rem.get(m, 0) - c * cc
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return quot


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with q*r == p, or raise :class:`NotDivisible`."""
    p._same(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly.zero(p.nvars)
    if len(q) == 1:
        (eq, cq), = q._terms.items()
        out = {}
        for e, c in p._terms.items():
            if c % cq:
                raise NotDivisible("coefficient not divisible")
            out[tuple(a - b for a, b in zip(e, eq))] = c // cq
        return LaurentPoly._raw(p.nvars, out)
    mp = p.min_exponents()
    mq = q.min_exponents()
    P = {tuple(a - b for a, b in zip(e, mp)): c for e, c in p._terms.items()}
    Q = {tuple(a - b for a, b in zip(e, mq)): c for e, c in q._terms.items()}
    R = _poly_divide(P, Q, p.nvars)
    back = tuple(a - b for a, b in zip(mp, mq))
    return LaurentPoly._raw(p.nvars, {tuple(a + b for a, b in zip(e, back)): c
                                      for e, c in R.items()})


def strip_monomial(p: LaurentPoly) -> tuple[LaurentPoly, Exps]:
    """Split ``p = f * x^(-d)`` with f an ordinary polynomial and d >= 0 minimal.

    For a cluster variable, d is its denominator vector and f its numerator.
    """
    if not p:
        raise ValueError("cannot strip the zero polynomial")
    d = tuple(max(0, -a) for a in p.min_exponents())
    return p.shift(d), d


def product_of_vars(indices: Iterable[int], nvars: int) -> LaurentPoly:
    e = [0] * nvars
    for i in indices:
        e[i - 1] += 1
    return LaurentPoly(nvars, {tuple(e): 1})
