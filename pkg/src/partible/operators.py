"""Linear shift operators, their adjoints, degree profiles and certificates.

An operator L = sum_i a_i(k) sigma^i acts on sequences by shifting:
(sigma F)(k) = F(k+1).  Its adjoint L*(x)(k) = sum_i a_i(k-i) x(k-i)
turns a polynomial x into a summand whose products with any L-annihilated
sequence telescope, which is what every congruence in this package rests
on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, parse_polynomial, poly_gcd, poly_to_text
from .ratfunc import RationalFunction


class InsufficientTerms(ValueError):
    """Not enough sequence terms for the requested check."""


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial.constant(x)


class ShiftOperator:
    """sum_{i=0}^{J} a_i(k) sigma^i with polynomial coefficients, a_J != 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        if not cs:
            raise ValueError("the zero operator has no order")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ShiftOperator is immutable")

    def __reduce__(self):
        return (ShiftOperator, (self.coeffs,))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def field(self) -> str:
        for a in self.coeffs:
            if any(isinstance(c, RationalFunction) for c in a.coeffs):
                return "Q(z)"
        return "Q"

    def __eq__(self, other):
        if isinstance(other, ShiftOperator):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        inner = ", ".join(poly_to_text(a) for a in self.coeffs)
        return f"ShiftOperator[{inner}]"


def adjoint_apply(L: ShiftOperator, x) -> Polynomial:
    """L*(x)(k) = sum_i a_i(k - i) x(k - i)."""
    x = _as_poly(x)
    total = Polynomial()
    for i, a in enumerate(L.coeffs):
        total = total + (a * x).shift(-i)
    return total


@dataclass(frozen=True)
class ReductionProfile:
    """Degree data of an operator.

    d bounds deg L*(x) via deg L*(x) <= d + deg x, with equality exactly
    when deg x avoids the nonnegative integer roots of the indicator
    polynomial.  An empty root set makes the operator nondegenerate.
    """

    d: int
    b_polys: tuple
    indicator: Polynomial
    roots: frozenset

    @property
    def nondegenerate(self) -> bool:
        return not self.roots


def profile(L: ShiftOperator) -> ReductionProfile:
    """Aggregated coefficients b_l, the degree d, indicator and its roots."""
    J = L.order
    b = []
    for ell in range(J + 1):
        acc = Polynomial()
        for j in range(ell, J + 1):
            acc = acc + math.comb(j, ell) * L.coeffs[J - j].shift(j - J)
        b.append(acc)
    d = max(p.degree - ell for ell, p in enumerate(b) if not p.is_zero)
    d = int(d)

    indicator = Polynomial()
    falling = Polynomial.constant(1)
    s = Polynomial.variable()
    for ell in range(J + 1):
        if ell:
            falling = falling * (s - (ell - 1))
        if d + ell >= 0:
            c = b[ell].coefficient(d + ell)
            if c:
                indicator = indicator + c * falling
    if indicator.is_zero:
        raise ArithmeticError("indicator polynomial vanished; operator invalid")
    return ReductionProfile(d, tuple(b), indicator, frozenset(integer_roots(indicator)))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _nonneg_integer_roots_q(f: Polynomial) -> set[int]:
    roots = set()
    coeffs = [Fraction(c.as_fraction() if isinstance(c, RationalFunction) else c)
              for c in f.coeffs]
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    v = 0
    while ints[v] == 0:
        v += 1
    if v > 0:
        roots.add(0)
        ints = ints[v:]
    if len(ints) > 1:
        g = Polynomial(ints)
        for cand in _divisors(ints[0]):
            if g.eval(cand) == 0:
                roots.add(cand)
    return roots


def integer_roots(f: Polynomial) -> set[int]:
    """Nonnegative integers s with f(s) = 0.

    Over Q(z) a root must satisfy f(s) = 0 identically in z, so the
    z-coefficient polynomials are collected and their gcd is searched.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has every root")
    ratfun = [c for c in f.coeffs if isinstance(c, RationalFunction)]
    if not any(not c.is_constant() for c in ratfun):
        return _nonneg_integer_roots_q(f)

    # clear denominators: multiply by the lcm of all coefficient denominators
    common = (Fraction(1),)
    from .ratfunc import _divmod as _zdivmod, _gcd as _zgcd, _mul as _zmul

    for c in f.coeffs:
        if isinstance(c, RationalFunction):
            g = _zgcd(common, c.denominator)
            common = _zmul(common, _zdivmod(c.denominator, g)[0])
    numerators = []
    for c in f.coeffs:
        if isinstance(c, RationalFunction):
            numerators.append(_zmul(c.numerator, _zdivmod(common, c.denominator)[0]))
        else:
            numerators.append(_zmul((Fraction(c),), common) if c else ())
    zdeg = max((len(n) - 1 for n in numerators if n), default=0)
    g = Polynomial()
    for t in range(zdeg + 1):
        gt = Polynomial(n[t] if t < len(n) else 0 for n in numerators)
        if gt.is_zero:
            continue
        g = gt if g.is_zero else poly_gcd(g, gt)
        if g.degree == 0:
            return set()
    return _nonneg_integer_roots_q(g)


@dataclass(frozen=True)
class Certificate:
    """The polynomials u_i making L*(x) F telescope for L-annihilated F."""

    u_polys: tuple


def certificate(L: ShiftOperator, x) -> Certificate:
    """u_i(k) = sum_{j=1}^{J-i} a_{i+j}(k-j) x(k-j) for i = 0..J-1."""
    J = L.order
    if J < 1:
        raise ValueError("certificates require an operator of order >= 1")
    x = _as_poly(x)
    us = []
    for i in range(J):
        u = Polynomial()
        for j in range(1, J - i + 1):
            u = u + (L.coeffs[i + j] * x).shift(-j)
        us.append(u)
    return Certificate(tuple(us))


def annihilates(L: ShiftOperator, terms) -> bool:
    """Whether sum_i a_i(k) terms[k+i] vanishes for every available k."""
    J = L.order
    if len(terms) <= J:
        raise InsufficientTerms(f"need more than {J} terms, got {len(terms)}")
    for k in range(len(terms) - J):
        acc = 0
        for i, a in enumerate(L.coeffs):
            acc = acc + a.eval(k) * terms[k + i]
        if acc != 0:
            return False
    return True


def telescope_sum_check(L: ShiftOperator, x, terms, n: int) -> bool:
    """Exact check of the telescoped partial sum.

    sum_{k=0}^{n-1} L*(x)(k) F(k)
        = sum_i u_i(0) F(i) - sum_i u_i(n) F(n+i)
    whenever L annihilates F.
    """
    J = L.order
    if len(terms) < n + J:
        raise InsufficientTerms(f"need at least {n + J} terms, got {len(terms)}")
    lx = adjoint_apply(L, x)
    lhs = 0
    for k in range(n):
        lhs = lhs + lx.eval(k) * terms[k]
    us = certificate(L, x).u_polys
    head = 0
    tail = 0
    for i, u in enumerate(us):
        head = head + u.eval(0) * terms[i]
        tail = tail + u.eval(n) * terms[n + i]
    return lhs == head - tail


# -- JSON wire format ---------------------------------------------------------


def operator_to_dict(L: ShiftOperator) -> dict:
    return {
        "order": L.order,
        "coeffs": [poly_to_text(a) for a in L.coeffs],
        "field": L.field,
    }


def operator_from_dict(data: dict) -> ShiftOperator:
    try:
        order = data["order"]
        coeffs = data["coeffs"]
        field = data.get("field", "Q")
    except (TypeError, KeyError) as exc:
        raise ValueError(f"operator JSON is missing {exc}") from None
    if field not in ("Q", "Q(z)"):
        raise ValueError(f"unknown field {field!r}")
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise ValueError("operator JSON needs order+1 coefficient strings")
    polys = [parse_polynomial(text, field) for text in coeffs]
    if polys[-1].is_zero:
        raise ValueError("leading coefficient a_J must be nonzero")
    return ShiftOperator(polys)
