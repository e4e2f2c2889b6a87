"""Reduction of polynomials modulo the difference space of a shift operator.

Every polynomial Q splits exactly into an adjoint image L*(x) (the
summable part), exceptional monomials at the degrees a degenerate
operator cannot reach, and a remainder of degree below deg(L).  When the
operator coefficients have the mirror symmetry

    a_i(gamma + k) = (-1)^d a_{J-i}(gamma - k - J),

the remainder of a pure power of (k - gamma) keeps the parity of that
power; this module detects the center gamma and runs that
parity-preserving reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .operators import ReductionProfile, ShiftOperator, adjoint_apply
from .operators import profile as operator_profile
from .poly import Polynomial, assemble_from_center, poly_gcd
from .ratfunc import RationalFunction


class NotPartible(ValueError):
    """The operator lacks the symmetry the parity reduction requires."""


@dataclass
class ReductionResult:
    """Q = L*(x) + sum_{s in roots} exceptional[s] * k^(d+s) + remainder."""

    x: Polynomial
    exceptional: dict
    remainder: Polynomial

    def reassemble(self, L: ShiftOperator, prof: ReductionProfile | None = None) -> Polynomial:
        prof = prof if prof is not None else operator_profile(L)
        total = adjoint_apply(L, self.x) + self.remainder
        for s, c in self.exceptional.items():
            total = total + Polynomial.monomial(prof.d + s, c)
        return total


def reduce(Q: Polynomial, L: ShiftOperator, prof: ReductionProfile | None = None) -> ReductionResult:
    """Split Q into adjoint image, exceptional monomials and remainder.

    The loop peels the top term of the running remainder: degree d+s is
    cancelled with L*(k^s) when s avoids the indicator roots (the leading
    coefficient of L*(k^s) is then nonzero), and is moved into the
    exceptional bucket otherwise.  Terms with deg < d stay as remainder;
    for d <= 0 that forces the remainder to be zero.
    """
    prof = prof if prof is not None else operator_profile(L)
    d = prof.d
    x = Polynomial()
    exceptional: dict = {}
    rem = Q
    images: dict = {}
    while not rem.is_zero and rem.degree >= d:
        s = int(rem.degree) - d
        lc = rem.leading
        if s in prof.roots:
            exceptional[s] = lc
            rem = rem - Polynomial.monomial(int(rem.degree), lc)
        else:
            ps = images.get(s)
            if ps is None:
                ps = adjoint_apply(L, Polynomial.monomial(s))
                images[s] = ps
            coeff = lc / ps.leading
            x = x + Polynomial.monomial(s, coeff)
            rem = rem - coeff * ps
    return ReductionResult(x, exceptional, rem)


# -- symmetry center ---------------------------------------------------------


def _symmetry_constraints(L: ShiftOperator, d: int) -> list[Polynomial]:
    """Polynomials in the unknown center whose common roots are the gammas.

    Matching coefficients of k^t on both sides of the symmetry condition
    gives, per pair (a_i, a_{J-i}) and per t, one polynomial equation in
    gamma over the coefficient field.
    """
    J = L.order
    sign = -1 if d % 2 else 1
    constraints = []
    for i in range(J // 2 + 1):
        lo, hi = L.coeffs[i], L.coeffs[J - i]
        degrees = [int(p.degree) for p in (lo, hi) if not p.is_zero]
        if not degrees:
            continue
        for t in range(max(degrees) + 1):
            lhs = lo.hasse_derivative(t)
            rhs = hi.hasse_derivative(t).shift(-J)
            tsign = -sign if t % 2 else sign
            e = lhs - tsign * rhs
            if not e.is_zero:
                constraints.append(e)
    return constraints


def _integerized(f: Polynomial) -> list[int]:
    from math import gcd, lcm

    coeffs = [c.as_fraction() if isinstance(c, RationalFunction) else c for c in f.coeffs]
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = gcd(*ints)
    return [c // g for c in ints]


def _rational_roots_q(f: Polynomial) -> list[Fraction]:
    from .operators import _divisors

    ints = _integerized(f)
    roots = []
    v = 0
    while ints[v] == 0:
        v += 1
    if v:
        roots.append(Fraction(0))
        ints = ints[v:]
    if len(ints) > 1:
        g = Polynomial(ints)
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand not in roots and g.eval(cand) == 0:
                        roots.append(cand)
    return sorted(roots)


def _field_roots(g: Polynomial) -> list:
    """Roots of g inside its own coefficient field.

    Degree one always solves exactly; beyond that, roots are searched
    among rationals (a specialization of z prunes the candidates first).
    """
    if g.degree == 1:
        return [-g.coefficient(0) / g.coefficient(1)]
    if all(not isinstance(c, RationalFunction) or c.is_constant() for c in g.coeffs):
        return _rational_roots_q(g)
    for z0 in (Fraction(5), Fraction(7), Fraction(11), Fraction(13)):
        try:
            gz = Polynomial(
                c.evaluate(z0) if isinstance(c, RationalFunction) else c
                for c in g.coeffs
            )
        except ZeroDivisionError:
            continue
        if gz.is_zero or gz.degree < g.degree:
            continue
        return [r for r in _rational_roots_q(gz) if g.eval(r) == 0]
    return []


def gamma_candidates(L: ShiftOperator, prof: ReductionProfile | None = None) -> list:
    """All centers satisfying the symmetry condition, in deterministic order.

    An empty list means no center exists; a constant operator satisfies
    the condition identically and reports the single conventional center 0.
    """
    prof = prof if prof is not None else operator_profile(L)
    constraints = _symmetry_constraints(L, prof.d)
    if not constraints:
        return [Fraction(0)]
    g = constraints[0]
    for e in constraints[1:]:
        g = poly_gcd(g, e)
        if g.degree == 0:
            return []
    if g.degree == 0:
        return []
    return _field_roots(g)


def find_gamma(L: ShiftOperator, prof: ReductionProfile | None = None):
    """The first symmetry center, or None when there is none."""
    candidates = gamma_candidates(L, prof)
    return candidates[0] if candidates else None


@dataclass(frozen=True)
class PartibleCertificate:
    """Witness that an operator is power-partible: its center, degree, order."""

    gamma: object
    d: int
    order: int


def is_partible(L: ShiftOperator, prof: ReductionProfile | None = None) -> PartibleCertificate | None:
    """Certificate for a nondegenerate operator with a symmetry center."""
    prof = prof if prof is not None else operator_profile(L)
    if prof.roots:
        return None
    gamma = find_gamma(L, prof)
    if gamma is None:
        return None
    return PartibleCertificate(gamma, prof.d, L.order)


def _certificate_holds(L: ShiftOperator, cert: PartibleCertificate) -> bool:
    J = L.order
    if J != cert.order:
        return False
    prof = operator_profile(L)
    if prof.roots or prof.d != cert.d:
        return False
    sign = -1 if cert.d % 2 else 1
    gamma = cert.gamma
    for i in range(J // 2 + 1):
        lhs = L.coeffs[i].shift(gamma)
        rhs = L.coeffs[J - i].subst_linear(-1, gamma - J)
        if lhs != sign * rhs:
            return False
    return True


# -- parity-preserving reduction ----------------------------------------------


def _as_constant_fraction(gamma):
    if isinstance(gamma, RationalFunction):
        if not gamma.is_constant():
            return None
        return gamma.as_fraction()
    if isinstance(gamma, (int, Fraction)):
        return Fraction(gamma)
    return None


def center_scale(gamma) -> int:
    """2 for half-integral centers, else 1.

    With a half-integral center the scaled variable 2(k - gamma) has
    integer values on integers (it is 2k+1 for gamma = -1/2), so the
    reduction is carried out in its powers.
    """
    q = _as_constant_fraction(gamma)
    return 2 if q is not None and q.denominator == 2 else 1


def default_alpha(gamma):
    """Basis scaling rule: alpha_s = 2^(s+1) for half-integral centers, else 1."""
    if center_scale(gamma) == 2:
        return lambda s: Fraction(2) ** (s + 1)
    return lambda s: Fraction(1)


def basis_element(cert: PartibleCertificate, s: int, alpha_s) -> Polynomial:
    """x_s(k) = alpha_s (k - gamma + J/2)^s."""
    lin = Polynomial((Fraction(cert.order, 2) - cert.gamma, 1))
    return alpha_s * lin ** s


@dataclass
class PartibleReduction:
    """Exact decomposition of a power of the scaled centered variable.

    With w = basis_scale * (k - gamma):

        w^m = sum_i u_coeffs[i] * w^i  +  sum_j v_coeffs[j] * L*(x_j)

    where every i shares the parity of m and lies below d, and
    x_j = alphas[j] * (k - gamma + J/2)^j.
    """

    m: int
    gamma: object
    basis_scale: int
    u_coeffs: dict
    v_coeffs: dict
    alphas: dict = field(default_factory=dict)

    def reassemble(self, L: ShiftOperator, cert: PartibleCertificate) -> Polynomial:
        w_coeffs = [Fraction(0)] * (max(self.u_coeffs, default=0) + 1)
        for i, u in self.u_coeffs.items():
            w_coeffs[i] = u * Fraction(self.basis_scale) ** i
        total = assemble_from_center(w_coeffs, self.gamma)
        for j, v in self.v_coeffs.items():
            total = total + v * adjoint_apply(L, basis_element(cert, j, self.alphas[j]))
        return total


def partible_reduce(m: int, L: ShiftOperator, cert: PartibleCertificate, alpha=None) -> PartibleReduction:
    """Reduce w^m, w = basis_scale*(k - gamma), keeping only same-parity powers.

    Works downward from degree m in the centered coordinates: the top
    term is cancelled with L*(x_j) for j = deg - d, whose expansion at
    the center contains only powers of matching parity.  The surviving
    coefficients below degree d are the u_i.  The decomposition is
    reassembled and compared with w^m before returning.
    """
    if m < 0:
        raise ValueError("power must be nonnegative")
    if not _certificate_holds(L, cert):
        raise NotPartible(f"{L!r} is not power-partible for center {cert.gamma}")
    d = cert.d
    gamma = cert.gamma
    if alpha is None:
        alpha = default_alpha(gamma)
    beta = center_scale(gamma)

    # coefficient vector of w^m in powers of (k - gamma)
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[m] = Fraction(beta) ** m
    v_coeffs: dict = {}
    alphas: dict = {}
    for target in range(m, max(d, 0) - 1, -1):
        c = coeffs[target]
        if not c:
            continue
        if (m - target) % 2:
            raise NotPartible(
                f"parity leak at degree {target} while reducing power {m}"
            )
        j = target - d
        a_j = alpha(j)
        image = adjoint_apply(L, basis_element(cert, j, a_j))
        centered = image.shift(gamma).coeffs
        if len(centered) - 1 != target:
            raise NotPartible(
                f"L*(x_{j}) has degree {len(centered) - 1}, expected {target}"
            )
        vj = c / centered[target]
        v_coeffs[j] = vj
        alphas[j] = a_j
        for idx, pc in enumerate(centered):
            coeffs[idx] = coeffs[idx] - vj * pc

    u_coeffs = {}
    for i in range(min(len(coeffs), max(d, 0))):
        if coeffs[i]:
            if (m - i) % 2:
                raise NotPartible(
                    f"parity leak at degree {i} while reducing power {m}"
                )
            u_coeffs[i] = coeffs[i] / Fraction(beta) ** i
    for i in range(max(d, 0), len(coeffs)):
        if coeffs[i]:
            raise AssertionError("reduction left a term above the remainder degree")

    result = PartibleReduction(m, gamma, beta, u_coeffs, v_coeffs, alphas)
    lin = Polynomial((-gamma, 1))
    if result.reassemble(L, cert) != (beta * lin) ** m:
        raise AssertionError("reduction identity failed exactness audit")
    return result


def expand_adjoint_basis(L: ShiftOperator, cert: PartibleCertificate, s: int, alpha_s=None) -> list:
    """Coefficients of L*(x_s) in powers of 2(k - gamma).

    For the half-integral centers of the built-in operators this is the
    (2k+1)-power basis.
    """
    if not _certificate_holds(L, cert):
        raise NotPartible(f"{L!r} is not power-partible for center {cert.gamma}")
    if alpha_s is None:
        alpha_s = default_alpha(cert.gamma)(s)
    image = adjoint_apply(L, basis_element(cert, s, alpha_s))
    centered = image.shift(cert.gamma).coeffs
    return [c / Fraction(2) ** i for i, c in enumerate(centered)]
