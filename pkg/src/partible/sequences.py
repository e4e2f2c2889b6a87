"""Built-in holonomic families and a linear-recurrence guesser.

Term generators use nothing but the defining binomial sums, so the wired
annihilators are genuinely tested against them rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .operators import InsufficientTerms, ShiftOperator, annihilates
from .poly import Polynomial
from .ratfunc import Z


class UnknownFamily(ValueError):
    """No built-in sequence family with that name."""


FAMILY_NAMES = ("apery", "apery_signed", "delannoy_number", "delannoy_poly")


def apery_terms(n: int) -> list[int]:
    """A_0 .. A_{n-1} where A_m = sum_j C(m,j)^2 C(m+j,j)^2."""
    out = []
    for m in range(n):
        out.append(
            sum(math.comb(m, j) ** 2 * math.comb(m + j, j) ** 2 for j in range(m + 1))
        )
    return out


def apery_signed_terms(n: int) -> list[int]:
    """(-1)^m A_m for m = 0 .. n-1."""
    return [a if m % 2 == 0 else -a for m, a in enumerate(apery_terms(n))]


def delannoy_poly_terms(n: int, z=1) -> list:
    """D_0(z) .. D_{n-1}(z) where D_m(z) = sum_i C(m,i) C(m+i,i) z^i.

    z may be an int or Fraction for concrete values, or the symbol Z for
    terms in Q(z).
    """
    out = []
    for m in range(n):
        out.append(
            sum(math.comb(m, i) * math.comb(m + i, i) * z ** i for i in range(m + 1))
        )
    return out


def delannoy_number_terms(n: int) -> list[int]:
    return delannoy_poly_terms(n, 1)


def _k() -> Polynomial:
    return Polynomial.variable()


def apery_operator() -> ShiftOperator:
    k = _k()
    return ShiftOperator([
        (k + 1) ** 3,
        -(2 * k + 3) * (17 * k ** 2 + 51 * k + 39),
        (k + 2) ** 3,
    ])


def apery_signed_operator() -> ShiftOperator:
    k = _k()
    return ShiftOperator([
        (k + 1) ** 3,
        (2 * k + 3) * (17 * k ** 2 + 51 * k + 39),
        (k + 2) ** 3,
    ])


def delannoy_operator(z=None) -> ShiftOperator:
    """(k+2) sigma^2 - (2k+3)(2z+1) sigma + (k+1); z=None keeps z symbolic."""
    k = _k()
    zz = Z if z is None else Fraction(z)
    return ShiftOperator([
        k + 1,
        -(2 * k + 3) * Polynomial.constant(2 * zz + 1),
        k + 2,
    ])


@dataclass(frozen=True)
class SequenceFamily:
    """A named sequence with its definition-based generator and annihilator."""

    name: str
    parameter: object
    annihilator: ShiftOperator

    def terms(self, n: int) -> list:
        if self.name == "apery":
            return apery_terms(n)
        if self.name == "apery_signed":
            return apery_signed_terms(n)
        if self.name == "delannoy_number":
            return delannoy_number_terms(n)
        return delannoy_poly_terms(n, Z if self.parameter is None else self.parameter)


def builtin(name: str, parameter=None) -> SequenceFamily:
    """Look up a family; `parameter` is the Delannoy z (None = symbolic)."""
    if name == "apery":
        op = apery_operator()
    elif name == "apery_signed":
        op = apery_signed_operator()
    elif name == "delannoy_number":
        op = delannoy_operator(1)
    elif name == "delannoy_poly":
        return SequenceFamily(name, parameter, delannoy_operator(parameter))
    else:
        raise UnknownFamily(f"unknown family {name!r}")
    if parameter is not None:
        raise UnknownFamily(f"family {name!r} takes no parameter")
    return SequenceFamily(name, None, op)


# -- recurrence guessing -------------------------------------------------------


def _nullspace_solution(terms, order: int, deg: int):
    """First canonical nullspace vector of the ansatz system, or None.

    Unknowns are the coefficients c[i][t] of sum_i sum_t c[i][t] k^t F(k+i),
    ordered by (i, t); rows range over every k the term list supports.
    """
    ncols = (order + 1) * (deg + 1)
    rows = []
    for k in range(len(terms) - order):
        powers = [Fraction(k) ** t for t in range(deg + 1)]
        row = []
        for i in range(order + 1):
            f = terms[k + i]
            row.extend(p * f for p in powers)
        rows.append(row)

    pivots = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if len(pivots) == ncols:
        return None
    free = next(c for c in range(ncols) if c not in set(pivots))
    sol = [Fraction(0)] * ncols
    sol[free] = Fraction(1)
    for row_idx, pc in enumerate(pivots):
        sol[pc] = -rows[row_idx][free]
    return sol


def _normalized_operator(sol, order: int, deg: int) -> ShiftOperator | None:
    """Integer coprime coefficients, positive leading coefficient of a_J."""
    polys = [
        Polynomial(sol[i * (deg + 1) : (i + 1) * (deg + 1)])
        for i in range(order + 1)
    ]
    while polys and polys[-1].is_zero:
        polys.pop()
    if not polys:
        return None
    flat = [c for p in polys for c in p.coeffs if c]
    den = math.lcm(*(Fraction(c).denominator for c in flat))
    num = math.gcd(*(int(Fraction(c) * den) for c in flat))
    scale = Fraction(den, num)
    if polys[-1].leading * scale < 0:
        scale = -scale
    return ShiftOperator([p * scale for p in polys])


def guess_annihilator(terms, max_order: int, max_deg: int) -> ShiftOperator | None:
    """Smallest-(order, degree) operator annihilating every supplied term.

    Candidate ansatz sizes are tried in lexicographic (order, degree)
    order, and the winner is normalized to coprime integer coefficients
    with a positive leading coefficient.  None when only the zero
    operator fits.
    """
    need = (max_order + 1) * (max_deg + 2) + max_order
    if len(terms) < need:
        raise InsufficientTerms(f"need at least {need} terms, got {len(terms)}")
    terms = [Fraction(t) for t in terms]
    for order in range(max_order + 1):
        for deg in range(max_deg + 1):
            sol = _nullspace_solution(terms, order, deg)
            if sol is None:
                continue
            cand = _normalized_operator(sol, order, deg)
            if cand is not None and annihilates(cand, terms):
                return cand
    return None
