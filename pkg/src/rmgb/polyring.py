"""Sparse multivariate polynomials over GF(2).

A monomial in ``m`` variables is an exponent tuple ``(e1, ..., em)``;
the monomial ``x1^2*x3`` in three variables is ``(2, 0, 1)``.  Since
the coefficient field is GF(2), a polynomial is fully described by its
support, the set of monomials appearing with coefficient 1, and
addition is symmetric difference of supports.

Two monomial orders are supported, both with precedence
``x1 > x2 > ... > xm``:

* ``lex``: compare exponent tuples left to right.
* ``grlex``: compare total degree first, ties broken by lex.

Exponents are capped at ``EXPONENT_CAP``.  The intended ambient rings
here are quotients by ``x_i^2 - 1``, so exponents above 2 only occur
transiently (for instance inside a product before reduction), and the
cap guards against runaway inputs rather than limiting real use.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

Monomial = tuple  # exponent tuple, one entry per variable

LEX = "lex"
GRLEX = "grlex"
ORDERS = (LEX, GRLEX)
DEFAULT_ORDER = GRLEX

EXPONENT_CAP = 4
MAX_VARS = 16


def monomial_key(order: str):
    """Return a sort key function realizing the given monomial order."""
    if order == LEX:
        return lambda mono: mono
    if order == GRLEX:
        return lambda mono: (sum(mono), mono)
    raise ValueError(f"unknown monomial order {order!r}, expected one of {ORDERS}")


def mono_degree(mono: Monomial) -> int:
    return sum(mono)


def mono_cmp(a: Monomial, b: Monomial, order: str = DEFAULT_ORDER) -> int:
    """Three-way comparison of monomials: -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("cannot compare monomials in different variable counts")
    key = monomial_key(order)
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise ValueError("cannot multiply monomials in different variable counts")
    prod = tuple(x + y for x, y in zip(a, b))
    if any(e > EXPONENT_CAP for e in prod):
        raise ValueError(f"exponent overflow: product {prod} exceeds cap {EXPONENT_CAP}")
    return prod


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial ``a`` divides monomial ``b``."""
    if len(a) != len(b):
        raise ValueError("cannot compare monomials in different variable counts")
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """Quotient ``b / a``.  Raises ValueError when ``a`` does not divide ``b``."""
    if not mono_divides(a, b):
        raise ValueError(f"monomial {a} does not divide {b}")
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise ValueError("cannot compare monomials in different variable counts")
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Immutable polynomial over GF(2), stored as a frozenset of monomials.

    Supports ``+`` (which is also subtraction in characteristic 2),
    ``*``, equality, hashing, and truthiness (zero polynomial is falsy).
    """

    __slots__ = ("m", "support")

    def __init__(self, m: int, monomials: Iterable[Monomial] = ()):
        if not 1 <= m <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {m}")
        support: set = set()
        for mono in monomials:
            mono = tuple(mono)
            if len(mono) != m:
                raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {m}")
            for e in mono:
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"bad exponent in monomial {mono}")
                if e > EXPONENT_CAP:
                    raise ValueError(f"exponent {e} exceeds cap {EXPONENT_CAP}")
            support ^= {mono}  # coefficients are mod 2, duplicates cancel
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "support", frozenset(support))

    @classmethod
    def _make(cls, m: int, support: frozenset) -> "Poly":
        # internal fast path: support is already a validated frozenset
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "support", support)
        return self

    @classmethod
    def zero(cls, m: int) -> "Poly":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "Poly":
        return cls(m, [(0,) * m])

    @classmethod
    def monomial(cls, m: int, mono: Monomial) -> "Poly":
        return cls(m, [mono])

    @classmethod
    def variable(cls, m: int, i: int) -> "Poly":
        """The polynomial ``x_i`` (1-based index)."""
        if not 1 <= i <= m:
            raise ValueError(f"variable index {i} out of range 1..{m}")
        return cls(m, [tuple(1 if j == i - 1 else 0 for j in range(m))])

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.m == other.m and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.m, self.support))

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        return Poly._make(self.m, self.support ^ other.support)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        acc: set = set()
        for a in self.support:
            for b in other.support:
                acc ^= {mono_mul(a, b)}
        return Poly._make(self.m, frozenset(acc))

    def _check_compatible(self, other) -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def leading(self, order: str = DEFAULT_ORDER) -> Monomial:
        """Leading monomial.  Over GF(2) this is also the leading term."""
        if not self.support:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.support, key=monomial_key(order))

    def total_degree(self) -> int:
        """Largest total degree of a monomial in the support, -1 for zero."""
        if not self.support:
            return -1
        return max(sum(mono) for mono in self.support)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for mono in self.support for e in mono)

    def sorted_monomials(self, order: str = DEFAULT_ORDER, reverse: bool = True) -> list:
        return sorted(self.support, key=monomial_key(order), reverse=reverse)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_monomials())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.m}, {format_poly(self)!r})"


def multideg(f: Poly, order: str = DEFAULT_ORDER) -> Monomial:
    """Multidegree of ``f``: the exponent tuple of its leading monomial."""
    return f.leading(order)


def leading(f: Poly, order: str = DEFAULT_ORDER) -> Monomial:
    return f.leading(order)


_FACTOR_RE = re.compile(r"[xXyY](\d+)(?:\^(\d+))?")


def parse_poly(text: str, m: int) -> Poly:
    """Parse polynomial text like ``"x1*x2^2 + x3 + 1"`` into a Poly.

    Grammar: terms are joined by ``+``, each term is a ``*``-separated
    product of factors ``1`` or ``x<i>`` or ``x<i>^<e>``.  The string
    ``"0"`` denotes the zero polynomial.  Whitespace is ignored, the
    variable letter is case-insensitive and ``y`` is accepted as an
    alias for ``x``.  A ``-`` is treated as ``+`` since -1 = 1 mod 2.
    """
    stripped = "".join(text.split())
    if not stripped:
        raise ValueError("empty polynomial text")
    stripped = stripped.replace("-", "+")
    monomials = []
    for term in stripped.split("+"):
        if term == "":
            raise ValueError(f"empty term in polynomial text {text!r}")
        if term == "0":
            continue
        exps = [0] * m
        for factor in term.split("*"):
            if factor == "1":
                continue
            match = _FACTOR_RE.fullmatch(factor)
            if match is None:
                raise ValueError(f"cannot parse factor {factor!r} in term {term!r}")
            idx = int(match.group(1))
            exp = int(match.group(2)) if match.group(2) else 1
            if not 1 <= idx <= m:
                raise ValueError(f"variable index {idx} out of range 1..{m}")
            exps[idx - 1] += exp
        monomials.append(tuple(exps))
    return Poly(m, monomials)


def format_poly(f: Poly, order: str = DEFAULT_ORDER, var: str = "x") -> str:
    """Render a Poly as text, terms in descending monomial order."""
    if not f:
        return "0"
    terms = []
    for mono in f.sorted_monomials(order):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(f"{var}{i + 1}")
            elif e > 1:
                factors.append(f"{var}{i + 1}^{e}")
        terms.append("*".join(factors) if factors else "1")
    return " + ".join(terms)
