"""Dense univariate polynomials in k over an exact coefficient field.

Coefficients are Fraction (field Q) or RationalFunction (field Q(z)) and
may mix within one polynomial; all arithmetic stays exact.  The same
class also serves for polynomials in other formal variables (the
indicator variable s, the symmetry-center unknown), since the variable
name only matters when printing.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ratfunc import RationalFunction, Z

#: degree of the zero polynomial
NEG_INF = float("-inf")


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, RationalFunction)):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    """Coefficient tuple indexed by degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs,))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls((0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Polynomial):
            n = max(len(self.coeffs), len(other.coeffs))
            return Polynomial(
                self.coefficient(i) + other.coefficient(i) for i in range(n)
            )
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self + Polynomial((other,))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        out = self + (-other if isinstance(other, Polynomial) else -_coerce(other))
        return out

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction, RationalFunction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        if self.degree < db:
            return Polynomial(), self
        rem = list(self.coeffs)
        inv = 1 / other.leading
        quo = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv
            if c:
                quo[i - db] = c
                for j, bc in enumerate(other.coeffs):
                    rem[i - db + j] = rem[i - db + j] - c * bc
        return Polynomial(quo), Polynomial(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- evaluation and substitution -----------------------------------------

    def eval(self, v):
        """Exact Horner evaluation; the zero polynomial gives 0."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def subst_linear(self, a, b) -> "Polynomial":
        """The polynomial k |-> p(a*k + b), computed by Horner."""
        lin = Polynomial((b, a))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def shift(self, c) -> "Polynomial":
        """Exact Taylor shift: the polynomial k |-> p(k + c)."""
        return self.subst_linear(1, c)

    def hasse_derivative(self, t: int) -> "Polynomial":
        """sum_j C(j, t) a_j k^(j-t) (the t-th divided derivative)."""
        return Polynomial(
            math.comb(j, t) * self.coeffs[j]
            for j in range(t, len(self.coeffs))
        )

    def __repr__(self):
        return f"Polynomial[{poly_to_text(self)}]"

    def __str__(self):
        return poly_to_text(self)


def poly_shift(p: Polynomial, c) -> Polynomial:
    return p.shift(c)


def poly_eval(p: Polynomial, v):
    return p.eval(v)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the coefficient field."""
    while g:
        f, g = g, f % g
    if f:
        f = f * (1 / f.leading)
    return f


def expand_in_center(p: Polynomial, gamma) -> list:
    """Coefficients c_i with p(k) = sum c_i (k - gamma)^i."""
    return list(p.shift(gamma).coeffs)


def assemble_from_center(coeffs, gamma) -> Polynomial:
    """Inverse of expand_in_center."""
    shifted = Polynomial((-gamma, 1))
    acc = Polynomial()
    for c in reversed(list(coeffs)):
        acc = acc * shifted + c
    return acc


def parity_support(coeffs) -> str:
    """Which index parities carry nonzero coefficients: even/odd/mixed/zero."""
    has_even = any(c for i, c in enumerate(coeffs) if i % 2 == 0)
    has_odd = any(c for i, c in enumerate(coeffs) if i % 2 == 1)
    if has_even and has_odd:
        return "mixed"
    if has_even:
        return "even"
    if has_odd:
        return "odd"
    return "zero"


def falling_factorial_value(s, ell: int):
    """s(s-1)...(s-ell+1); the empty product for ell = 0 is 1."""
    if ell < 0:
        raise ValueError("falling factorial needs a nonnegative length")
    acc = Fraction(1)
    for i in range(ell):
        acc = acc * (s - i)
    return acc


# -- text form --------------------------------------------------------------


class PolynomialSyntaxError(ValueError):
    """Parse failure with a 1-based column position."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


_TOKEN_CHARS = {"+", "-", "*", "/", "^", "(", ")"}


class _Parser:
    def __init__(self, text: str, field: str):
        if field not in ("Q", "Q(z)"):
            raise ValueError(f"unknown field {field!r}")
        self.text = text
        self.field = field
        self.pos = 0

    def error(self, message):
        raise PolynomialSyntaxError(message, self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch == "/":
                self.pos += 1
                at = self.pos
                divisor = self.factor()
                if divisor.degree > 0:
                    self.pos = at
                    self.error("division by a non-constant polynomial")
                if divisor.is_zero:
                    self.pos = at
                    self.error("division by zero")
                value = value * (1 / divisor.coefficient(0))
            else:
                return value

    def factor(self) -> Polynomial:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "+":
            self.pos += 1
            return self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            if self.peek() == "":
                self.error("missing exponent")
            n = self.integer()
            return base ** n
        return base

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch.isdigit():
            return Polynomial.constant(Fraction(self.integer()))
        if ch == "k":
            self.pos += 1
            return Polynomial.variable()
        if ch == "z":
            if self.field != "Q(z)":
                self.error("variable 'z' is not available over Q")
            self.pos += 1
            return Polynomial.constant(Z)
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_polynomial(text: str, field: str = "Q") -> Polynomial:
    """Parse `(k+2)^3`-style text into a polynomial over Q or Q(z)."""
    return _Parser(text, field).parse()


def _coeff_piece(c):
    """(sign, body) for one coefficient; body never starts with a sign."""
    if isinstance(c, RationalFunction) and c.is_constant():
        c = c.as_fraction()
    if isinstance(c, Fraction):
        return ("-", str(-c)) if c < 0 else ("+", str(c))
    text = str(c)
    # "(num)/(den)" is already unambiguous inside a product; bare numerators
    # like "2*z + 1" need wrapping
    if not text.startswith("("):
        text = f"({text})"
    return "+", text


def poly_to_text(p: Polynomial, var: str = "k") -> str:
    """Canonical text form, highest degree first; parse_polynomial inverts it."""
    if p.is_zero:
        return "0"
    pieces = []
    for deg in range(int(p.degree), -1, -1):
        c = p.coefficient(deg)
        if not c:
            continue
        sign, body = _coeff_piece(c)
        if deg == 0:
            term = body
        else:
            vp = var if deg == 1 else f"{var}^{deg}"
            term = vp if body == "1" else f"{body}*{vp}"
        if not pieces:
            pieces.append(term if sign == "+" else f"-{term}")
        else:
            pieces.append(f" {sign} {term}")
    return "".join(pieces)


__all__ = [
    "NEG_INF",
    "Polynomial",
    "PolynomialSyntaxError",
    "assemble_from_center",
    "expand_in_center",
    "falling_factorial_value",
    "parity_support",
    "parse_polynomial",
    "poly_eval",
    "poly_gcd",
    "poly_shift",
    "poly_to_text",
]
