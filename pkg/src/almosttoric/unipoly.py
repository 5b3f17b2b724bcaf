"""Univariate polynomials over Q in the variable ``x``.

A :class:`UPoly` is an immutable tuple of :class:`~fractions.Fraction`
coefficients, lowest degree first, with no trailing zeros.  The zero
polynomial is the empty tuple and has degree -1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

MAX_EXPONENT = 100_000


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _strip(coeffs) -> Tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _kronecker_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    # pack both integer coefficient lists into one big int, multiply, unpack
    bound = max(abs(x) for x in a) * max(abs(x) for x in b) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    pa = sum(x << (bits * i) for i, x in enumerate(a))
    pb = sum(x << (bits * i) for i, x in enumerate(b))
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = prod & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        prod = (prod - r) >> bits
    return out


def int_poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Product of two integer coefficient lists (low degree first)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < 16:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    return _kronecker_mul(a, b)


@dataclass(frozen=True)
class UPoly:
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UPoly(tuple(c / lc for c in self.coeffs))

    def integer_form(self) -> Tuple[List[int], int]:
        """Return (integer coefficients, denominator) with self = ints / den."""
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        return [int(c * den) for c in self.coeffs], den

    def __add__(self, other: "UPoly") -> "UPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "UPoly":
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return UPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UPoly()
        ia, da = self.integer_form()
        ib, db = other.integer_form()
        den = da * db
        return UPoly(tuple(Fraction(c, den) for c in int_poly_mul(ia, ib)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        lc = other.lc
        if len(rem) - 1 < dg:
            return UPoly(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1 - dg, -1, -1):
            q = rem[k + dg] / lc
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return UPoly(tuple(quot)), UPoly(tuple(rem[:dg]))

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def derivative(self) -> "UPoly":
        return UPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x0) -> Fraction:
        return eval_at(self, x0)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"UPoly({format_poly(self)!r})"


def eval_at(f: UPoly, x0) -> Fraction:
    """Horner evaluation at a rational point."""
    acc = Fraction(0)
    x0 = Fraction(x0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def eval_int(coeffs: Sequence[int], x0: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x0 + c
    return acc


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd; gcd(f, 0) is f made monic."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
        b = b.monic()
    return a.monic()


def squarefree_part(f: UPoly) -> UPoly:
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UPoly.const(1)
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: UPoly) -> List[UPoly]:
    """Yun's algorithm: monic squarefree, pairwise coprime s_1, s_2, ... with
    f = lc(f) * prod_k s_k^k (entry k-1 holds s_k; some may be 1)."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    out = []
    while b.degree > 0:
        d = c - b.derivative()
        s = poly_gcd(b, d)
        out.append(s)
        b = b // s
        c = d // s
    return out


def multiplicity(f: UPoly, g: UPoly) -> int:
    """Largest e with g^e dividing f."""
    if g.degree < 1:
        raise ValueError("multiplicity with respect to a constant")
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    e = 0
    q, r = f.divmod(g)
    while r.is_zero():
        e += 1
        f = q
        q, r = f.divmod(g)
    return e


def _basis_key(g: UPoly):
    return (g.degree, g.coeffs)


@dataclass(frozen=True)
class CoprimeBasis:
    """Pairwise coprime monic squarefree ``elements`` with
    f_i = leading[i] * prod_j elements[j] ** exponents[i][j]."""

    elements: Tuple[UPoly, ...]
    leading: Tuple[Fraction, ...]
    exponents: Tuple[Tuple[int, ...], ...]

    def reconstruct(self, i: int) -> UPoly:
        out = UPoly.const(self.leading[i])
        for g, e in zip(self.elements, self.exponents[i]):
            if e:
                out = out * g ** e
        return out


def coprime_basis(fs: Iterable[UPoly]) -> CoprimeBasis:
    """Gcd-free basis refining the squarefree decompositions of ``fs``.

    Seeding with the Yun components (not just the squarefree parts) makes
    every basis element divide each f_i to a single well-defined power.
    """
    fs = list(fs)
    for i, f in enumerate(fs):
        if f.is_zero():
            raise ValueError(f"f_{i} is the zero polynomial")
    work = [s for f in fs for s in squarefree_decomposition(f) if s.degree > 0]
    changed = True
    while changed:
        changed = False
        # dedupe identical entries first; they are never coprime
        uniq: Dict[tuple, UPoly] = {}
        for g in work:
            uniq.setdefault(g.coeffs, g)
        work = list(uniq.values())
        for a in range(len(work)):
            for b in range(a + 1, len(work)):
                h = poly_gcd(work[a], work[b])
                if h.degree > 0:
                    p, q = work[a], work[b]
                    rest = [w for k, w in enumerate(work) if k != a and k != b]
                    pieces = [h, (p // h).monic(), (q // h).monic()]
                    work = rest + [g for g in pieces if g.degree > 0]
                    changed = True
                    break
            if changed:
                break
    elements = tuple(sorted(work, key=_basis_key))
    exps = tuple(tuple(multiplicity(f, g) for g in elements) for f in fs)
    leading = tuple(f.lc for f in fs)
    return CoprimeBasis(elements, leading, exps)


# --- text form -------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: UPoly, var: str = "x") -> str:
    """Print with explicit '*' and '^', highest degree first."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def uint(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ParseError(f"expected integer, found {found!r}", start)
        return int(self.text[start:self.pos])

    def expr(self) -> UPoly:
        # a leading sign is accepted so that printed negative polynomials reparse
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> UPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> UPoly:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            at = self.pos
            e = self.uint()
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", at)
            return base ** e
        return base

    def base(self) -> UPoly:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return UPoly.x()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        if ch.isdigit():
            num = self.uint()
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", at)
                return UPoly.const(Fraction(num, den))
            return UPoly.const(num)
        raise ParseError(f"unexpected {ch or 'end of input'!r}", self.pos)


def parse_poly(text: str) -> UPoly:
    p = _Parser(text)
    out = p.expr()
    if p.peek():
        raise ParseError(f"trailing input {p.text[p.pos:]!r}", p.pos)
    return out
