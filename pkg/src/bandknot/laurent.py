"""Exact integer Laurent polynomials in one variable.

Coefficients are arbitrary-precision integers and every operation is exact;
there is no floating point anywhere in this package.  A polynomial is stored
sparsely as a dict mapping exponent -> nonzero coefficient, so the zero
polynomial is the empty dict.  Instances are immutable and hashable.
"""

from __future__ import annotations


class LaurentPolynomial:
    """A Laurent polynomial with integer coefficients.

    The variable is purely formal; ``variable`` only affects printing
    (Alexander polynomials print in ``t``, Conway polynomials in ``z``).
    """

    __slots__ = ("coeffs", "variable")

    def __init__(self, coeffs=None, variable="t"):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    clean[int(e)] = int(c)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "variable", variable)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variable="t"):
        return cls({}, variable)

    @classmethod
    def one(cls, variable="t"):
        return cls({0: 1}, variable)

    @classmethod
    def monomial(cls, coeff, exponent, variable="t"):
        return cls({exponent: coeff}, variable)

    @classmethod
    def var(cls, variable="t"):
        return cls({1: 1}, variable)

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, exponent):
        return self.coeffs.get(exponent, 0)

    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs)

    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def span(self):
        """max exponent minus min exponent (0 for the zero polynomial)."""
        if not self.coeffs:
            return 0
        return self.max_exp() - self.min_exp()

    def is_symmetric(self):
        """True if p(x) = p(1/x)."""
        return all(self.coeffs.get(-e) == c for e, c in self.coeffs.items())

    def exponents(self):
        return sorted(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other}, self.variable)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.variable)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()},
                                 self.variable)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, self.variable)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPolynomial.one(self.variable)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by variable**k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()},
                                 self.variable)

    def reverse(self):
        """Substitute 1/x for x."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()},
                                 self.variable)

    def compose_power(self, k):
        """Substitute x**k for x (k a nonzero integer)."""
        if k == 0:
            raise ValueError("cannot substitute x**0")
        return LaurentPolynomial({e * k: c for e, c in self.coeffs.items()},
                                 self.variable)

    def exact_div(self, other):
        """Exact division; raises ArithmeticError if not divisible."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.variable)
        # Shift both to ordinary polynomials and long-divide from the top.
        num = {e - self.min_exp(): c for e, c in self.coeffs.items()}
        dlo = other.min_exp()
        den = {e - dlo: c for e, c in other.coeffs.items()}
        dmax = max(den)
        dlead = den[dmax]
        quo = {}
        while num:
            nmax = max(num)
            if nmax < dmax:
                raise ArithmeticError("inexact polynomial division")
            c = num[nmax]
            if c % dlead != 0:
                raise ArithmeticError("inexact polynomial division")
            q = c // dlead
            k = nmax - dmax
            quo[k] = q
            for e, dc in den.items():
                ne = e + k
                val = num.get(ne, 0) - q * dc
                if val:
                    num[ne] = val
                else:
                    num.pop(ne, None)
        shift = self.min_exp() - dlo
        return LaurentPolynomial({e + shift: c for e, c in quo.items()},
                                 self.variable)

    def evaluate_unit(self, x):
        """Evaluate exactly at x = 1 or x = -1."""
        if x not in (1, -1):
            raise ValueError("exact evaluation is supported at x = 1, -1 only")
        if x == 1:
            return sum(self.coeffs.values())
        return sum(c if e % 2 == 0 else -c for e, c in self.coeffs.items())

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if isinstance(other, LaurentPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- printing / serialization ------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in self.exponents():
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                v = self.variable if e == 1 else "%s^%d" % (self.variable, e)
                body = v if mag == 1 else "%d*%s" % (mag, v)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPolynomial(%r)" % (str(self),)

    def to_pairs(self):
        """Sparse [exponent, coefficient] pairs, exponents ascending."""
        return [[e, self.coeffs[e]] for e in self.exponents()]

    @classmethod
    def from_pairs(cls, pairs, variable="t"):
        out = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out, variable)

    def with_variable(self, variable):
        return LaurentPolynomial(self.coeffs, variable)


def parse_poly(text, variable="t"):
    """Parse the human-readable form, e.g. ``-3 + 4*t + 4*t^-1 - 2*t^2``."""
    text = text.replace("-", "+-").replace("^+-", "^-").replace("e+-", "e-")
    out = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        chunk = chunk.replace(" ", "")
        if variable in chunk:
            head, _, tail = chunk.partition(variable)
            head = head.rstrip("*")
            if head in ("", "-"):
                coeff = -1 if head == "-" else 1
            else:
                coeff = int(head)
            exp = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coeff = int(chunk)
            exp = 0
        out[exp] = out.get(exp, 0) + coeff
    return LaurentPolynomial(out, variable)
