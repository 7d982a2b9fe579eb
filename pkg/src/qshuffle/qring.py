"""Exact arithmetic in the ring of integer Laurent polynomials in q.

Everything downstream (words, shuffle products, generating series) keeps its
coefficients in this ring. Identities proved exactly here hold under every
specialization of q to a nonzero scalar, so no field arithmetic is needed.

Coefficients are arbitrary-precision Python ints; products of q-factorials
grow quickly and silent overflow is not an option.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    Callers only divide by polynomials that provably divide the numerator
    (for instance q - q^-1 in the one-step recurrence), so this exception
    always indicates a bug upstream, never a legitimate runtime state.
    """


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients, stored sparsely.

    ``terms`` maps exponent -> nonzero coefficient; the zero polynomial is
    the empty map, so equality is plain map equality. Instances are treated
    as immutable: every operation returns a fresh object and nothing here
    mutates ``terms`` after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # Internal fast path: caller guarantees no zero coefficients.
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff}) if coeff else cls._raw({})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls.monomial(0, n)

    # -- ring structure -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({e * n: c if n % 2 else 1})
            raise ValueError("negative powers only defined for unit monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure beyond the ring ------------------------------------------

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k (exponent translation)."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def bar(self) -> "LaurentPoly":
        """The substitution q -> q^-1 (negate every exponent)."""
        return LaurentPoly._raw({-e: c for e, c in self.terms.items()})

    def eval_at(self, v) -> Fraction:
        """Substitute q = v exactly; v must be a nonzero int or Fraction."""
        v = Fraction(v)
        if v == 0:
            raise ValueError("cannot evaluate at q = 0: negative exponents")
        return sum((c * v**e for e, c in self.terms.items()), Fraction(0))

    def max_coeff_bits(self) -> int:
        """Bit length of the largest absolute coefficient (0 for zero)."""
        return max((abs(c).bit_length() for c in self.terms.values()), default=0)

    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    # -- text format ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                body = qpow if mag == 1 else f"{mag}{qpow}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    _TERM_RE = re.compile(r"(?:(\d+)\s*\*?\s*)?(q(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the rendering produced by ``str``, e.g. "q^2 + 2 + q^-2"."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls.zero()
        terms: dict[int, int] = {}
        for sign, chunk in _signed_chunks(s):
            m = cls._TERM_RE.fullmatch(chunk.strip())
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse polynomial term {chunk!r}")
            mag = int(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                e = 0
            elif m.group(3) is None:
                e = 1
            else:
                e = int(m.group(3))
            terms[e] = terms.get(e, 0) + sign * mag
        return cls(terms)


def _signed_chunks(s: str):
    """Split a polynomial string into (sign, term) pieces.

    A '-' directly after '^' is an exponent sign, not a separator.
    """
    out = []
    sign = 1
    cur = []
    prev = ""
    for ch in s:
        if ch in "+-" and prev != "^":
            if "".join(cur).strip():
                out.append((sign, "".join(cur)))
            sign = 1 if ch == "+" else -1
            cur = []
        else:
            cur.append(ch)
        if not ch.isspace():
            prev = ch
    if "".join(cur).strip():
        out.append((sign, "".join(cur)))
    if not out:
        raise ValueError(f"cannot parse polynomial {s!r}")
    return out


q = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """The q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0."""
    if n < 0:
        raise ValueError(f"q_int requires n >= 0, got {n}")
    return LaurentPoly._raw({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_fact(n: int) -> LaurentPoly:
    """The q-factorial [n]! = [n][n-1]...[1]; [0]! = 1."""
    if n < 0:
        raise ValueError(f"q_fact requires n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_fact(n - 1) * q_int(n)


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with a = b*c, or raise InexactDivisionError.

    Works over the Laurent ring: powers of q are units, so only the shape
    of the coefficient sequence matters.
    """
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.terms:
        return ZERO
    va, vb = a.min_exponent(), b.min_exponent()
    da, db = a.max_exponent(), b.max_exponent()
    if da - va < db - vb:
        raise InexactDivisionError(f"({a}) is not divisible by ({b})")
    A = [a.terms.get(e, 0) for e in range(va, da + 1)]
    B = [b.terms.get(e, 0) for e in range(vb, db + 1)]
    lead = B[-1]
    n, m = len(A), len(B)
    Q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = A[i + m - 1]
        if c == 0:
            continue
        quot, rem = divmod(c, lead)
        if rem:
            raise InexactDivisionError(f"({a}) is not divisible by ({b})")
        Q[i] = quot
        for j in range(m):
            A[i + j] -= quot * B[j]
    if any(A):
        raise InexactDivisionError(f"({a}) is not divisible by ({b})")
    off = va - vb
    return LaurentPoly._raw({off + i: c for i, c in enumerate(Q) if c})
