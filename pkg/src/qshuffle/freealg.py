"""Words over {x, y} and the q-shuffle algebra on them.

A word is a plain Python string over the letters "x" and "y"; the empty
string is the trivial word and renders as "1". An Element is a finite
linear combination of words with LaurentPoly coefficients, stored as a
sparse map word -> coefficient.

The letters carry signs (x bar = +1, y bar = -1) and the pairing
<u, v> = 2 * sign(u) * sign(v), which drives the q-powers in the shuffle
product. The word-level product is computed by the left-letter recursion

    u * v = u1((u2...ur) * v) + v1(u * (v2...vs)) q^(2 sign(v1) sigma(u))

where sigma(u) is the total letter sign of u, memoized on the word pair.
The other defining rules of the product are exercised as test oracles
against this single code path.
"""

from __future__ import annotations

from .qring import ONE, InexactDivisionError, LaurentPoly, divide_exact

LETTERS = "xy"
TRIVIAL = ""

_SGN = {"x": 1, "y": -1}


def letter_sign(letter: str) -> int:
    """+1 for x, -1 for y."""
    return _SGN[letter]


def pairing(a: str, b: str) -> int:
    """The letter pairing: <x,x> = <y,y> = 2, <x,y> = <y,x> = -2."""
    return 2 * _SGN[a] * _SGN[b]


def sign_sum(word: str) -> int:
    """Sum of letter signs over the word (number of x minus number of y)."""
    return 2 * word.count("x") - len(word)


def is_word(s: str) -> bool:
    return all(ch in _SGN for ch in s)


def word_key(word: str) -> tuple[int, str]:
    """Canonical sort key: length first, then lexicographic with x < y."""
    return (len(word), word)


def render_word(word: str) -> str:
    return word if word else "1"


def parse_word(text: str) -> str:
    s = text.strip()
    if s == "1":
        return TRIVIAL
    if not s or not is_word(s):
        raise ValueError(f"not a word over x,y: {text!r}")
    return s


def zeta_word(word: str) -> str:
    """Swap x <-> y and reverse; an involution on words."""
    return word.translate(_ZETA_TABLE)[::-1]


_ZETA_TABLE = str.maketrans("xy", "yx")


class Element:
    """A finite linear combination of words with LaurentPoly coefficients.

    ``terms`` maps word -> nonzero coefficient; the zero element is the
    empty map. Instances are immutable by convention and safe to share.
    Scalar multiplication is available through ``*``; the two algebra
    products live in the module functions :func:`shuffle` and
    :func:`concat`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, LaurentPoly] | None = None):
        self.terms = {w: c for w, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, terms: dict[str, LaurentPoly]) -> "Element":
        el = cls.__new__(cls)
        el.terms = terms
        return el

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({TRIVIAL: ONE})

    @classmethod
    def from_word(cls, word: str, coeff: LaurentPoly | int = 1) -> "Element":
        if not is_word(word):
            raise ValueError(f"not a word over x,y: {word!r}")
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        return cls._raw({word: coeff} if coeff else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for w, c in b.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return Element._raw(out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar) -> "Element":
        if isinstance(scalar, int):
            scalar = LaurentPoly.from_int(scalar)
        if not isinstance(scalar, LaurentPoly):
            return NotImplemented
        if not scalar:
            return Element._raw({})
        return Element._raw({w: c * scalar for w, c in self.terms.items()})

    __rmul__ = __mul__

    def coeff(self, word: str) -> LaurentPoly:
        """Coefficient of a word (zero if absent)."""
        return self.terms.get(word, LaurentPoly.zero())

    def support(self) -> list[str]:
        """Words with nonzero coefficient, in canonical order."""
        return sorted(self.terms, key=word_key)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """True if every word has the same length (the given one, if any)."""
        lengths = {len(w) for w in self.terms}
        if degree is None:
            return len(lengths) <= 1
        return lengths <= {degree}

    def degree(self) -> int | None:
        """Common word length for a homogeneous element, else None."""
        lengths = {len(w) for w in self.terms}
        if not lengths:
            return 0
        if len(lengths) == 1:
            return lengths.pop()
        return None

    def max_coeff_bits(self) -> int:
        return max((c.max_coeff_bits() for c in self.terms.values()), default=0)

    # -- text and structured formats ----------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w in self.support():
            c = self.terms[w]
            if c == 1:
                pieces.append(render_word(w))
            elif c == -1:
                pieces.append("-" + render_word(w))
            else:
                cs = str(c)
                if " " in cs:
                    cs = f"({cs})"
                pieces.append(f"{cs}*{render_word(w)}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"Element.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Element":
        """Parse the rendering produced by ``str``."""
        s = text.strip()
        if s == "0":
            return cls.zero()
        terms: dict[str, LaurentPoly] = {}
        for piece in _split_terms(s):
            piece = piece.strip()
            neg = False
            if piece.startswith("-") and not piece[1:].lstrip().startswith("("):
                # a bare "-word" or "-1"; parenthesized coefficients keep
                # their sign inside the parentheses
                inner = piece[1:].lstrip()
                if is_word(inner) or inner == "1":
                    neg = True
                    piece = inner
            star = _top_level_star(piece)
            if star is None:
                word = parse_word(piece)
                coeff = LaurentPoly.from_int(-1 if neg else 1)
            else:
                cs = piece[:star].strip()
                if cs.startswith("(") and cs.endswith(")"):
                    cs = cs[1:-1]
                coeff = LaurentPoly.parse(cs)
                word = parse_word(piece[star + 1 :])
            prev = terms.get(word)
            terms[word] = coeff if prev is None else prev + coeff
        return cls(terms)

    def to_obj(self) -> list[dict]:
        """Structured form: a list of {word, coeff} entries in canonical
        order, coefficients as maps from exponent string to integer string."""
        out = []
        for w in self.support():
            c = self.terms[w]
            coeff = {str(e): str(c.terms[e]) for e in sorted(c.terms, reverse=True)}
            out.append({"word": render_word(w), "coeff": coeff})
        return out

    @classmethod
    def from_obj(cls, obj: list[dict]) -> "Element":
        terms: dict[str, LaurentPoly] = {}
        for entry in obj:
            word = parse_word(entry["word"])
            coeff = LaurentPoly({int(e): int(c) for e, c in entry["coeff"].items()})
            prev = terms.get(word)
            terms[word] = coeff if prev is None else prev + coeff
        return cls(terms)


def _split_terms(s: str):
    """Split an element string on " + " at parenthesis depth zero."""
    out = []
    depth = 0
    start = 0
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and s.startswith(" + ", i):
            out.append(s[start:i])
            i += 3
            start = i
            continue
        i += 1
    out.append(s[start:])
    return out


def _top_level_star(s: str) -> int | None:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            return i
    return None


def as_element(value) -> Element:
    """Coerce a word string or Element to an Element."""
    if isinstance(value, Element):
        return value
    if isinstance(value, str):
        return Element.from_word(value)
    raise TypeError(f"expected Element or word string, got {type(value).__name__}")


# -- the q-shuffle product ----------------------------------------------------

# Memo table for word-pair shuffles. Values are internal result dicts that
# are never mutated after insertion; under the GIL a plain dict behaves as
# an insert-if-absent cache, and correctness never depends on a hit.
_PAIR_CACHE: dict[tuple[str, str], dict[str, LaurentPoly]] = {}
_PAIR_CACHE_MAX = 300_000


def clear_shuffle_cache() -> None:
    """Drop the word-pair memo table (useful for cold benchmarks)."""
    _PAIR_CACHE.clear()


def _shuffle_pair(u: str, v: str) -> dict[str, LaurentPoly]:
    """Shuffle two words; returns a word -> coefficient dict (shared, do not
    mutate). Left-letter recursion; the q-power of the right branch is
    2 * sign(v[0]) * sigma(u), computed from the whole remaining u."""
    key = (u, v)
    hit = _PAIR_CACHE.get(key)
    if hit is not None:
        return hit
    if not u:
        out = {v: ONE}
    elif not v:
        out = {u: ONE}
    else:
        out = {}
        a = u[0]
        for w, p in _shuffle_pair(u[1:], v).items():
            out[a + w] = p
        b = v[0]
        e = 2 * _SGN[b] * (2 * u.count("x") - len(u))
        for w, p in _shuffle_pair(u, v[1:]).items():
            k = b + w
            p2 = p.shift(e)
            cur = out.get(k)
            out[k] = p2 if cur is None else cur + p2
    if len(_PAIR_CACHE) < _PAIR_CACHE_MAX:
        _PAIR_CACHE[key] = out
    return out


def shuffle(a, b) -> Element:
    """The q-shuffle product, extended bilinearly to Elements.

    Accepts Elements or word strings. The trivial word is the identity;
    the product of homogeneous elements of degrees l1 and l2 is
    homogeneous of degree l1 + l2.
    """
    a = as_element(a)
    b = as_element(b)
    if not a.terms or not b.terms:
        return Element.zero()
    out: dict[str, LaurentPoly] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            scaled = c != 1
            for w, p in _shuffle_pair(u, v).items():
                cp = c * p if scaled else p
                cur = out.get(w)
                if cur is None:
                    out[w] = cp
                else:
                    s = cur + cp
                    if s:
                        out[w] = s
                    else:
                        del out[w]
    return Element._raw(out)


def concat(a, b) -> Element:
    """The concatenation (free algebra) product, extended bilinearly."""
    a = as_element(a)
    b = as_element(b)
    out: dict[str, LaurentPoly] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            c = cu * cv
            cur = out.get(w)
            s = c if cur is None else cur + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return Element._raw(out)


def bilinear_form(a, b) -> LaurentPoly:
    """The symmetric bilinear form with the words as an orthonormal family.

    For a single word w, bilinear_form(w, b) is the coefficient of w in b.
    """
    a = as_element(a)
    b = as_element(b)
    if len(b.terms) < len(a.terms):
        a, b = b, a
    total = LaurentPoly.zero()
    for w, ca in a.terms.items():
        cb = b.terms.get(w)
        if cb is not None:
            total = total + ca * cb
    return total


def zeta(a) -> Element:
    """Linear extension of swap-the-letters-and-reverse.

    An antiautomorphism for both the concatenation product and the
    q-shuffle product.
    """
    a = as_element(a)
    return Element._raw({zeta_word(w): c for w, c in a.terms.items()})


def strip_right_y(a) -> Element:
    """Remove the rightmost letter of every word; all must end in y."""
    a = as_element(a)
    out: dict[str, LaurentPoly] = {}
    for w, c in a.terms.items():
        if not w or w[-1] != "y":
            raise ValueError(f"word {render_word(w)!r} does not end in y")
        k = w[:-1]
        cur = out.get(k)
        s = c if cur is None else cur + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return Element._raw(out)


def strip_left_x(a) -> Element:
    """Remove the leftmost letter of every word; all must start with x."""
    a = as_element(a)
    out: dict[str, LaurentPoly] = {}
    for w, c in a.terms.items():
        if not w or w[0] != "x":
            raise ValueError(f"word {render_word(w)!r} does not start with x")
        k = w[1:]
        cur = out.get(k)
        s = c if cur is None else cur + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return Element._raw(out)


def divide_coeffs(a: Element, d: LaurentPoly) -> Element:
    """Divide every coefficient exactly by d; raises InexactDivisionError
    if any coefficient is not divisible (always a caller bug)."""
    return Element._raw({w: divide_exact(c, d) for w, c in a.terms.items()})
