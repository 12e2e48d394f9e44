"""Multivariate division with remainder over GF(2).

Division of ``f`` by an ordered list of divisors ``(f1, ..., fs)``
produces quotients ``a1, ..., as`` and a remainder ``r`` with

    f = a1*f1 + ... + as*fs + r

where no monomial of ``r`` is divisible by any leading monomial of the
divisors, and multideg(ai*fi) <= multideg(f) whenever ``ai*fi`` is
nonzero.  The scan policy is the classical one: at each step the
leading monomial of the working polynomial is tested against the
divisors in their given order and the first match is used; if none
matches, that monomial moves to the remainder.

The remainder generally depends on the divisor order unless the
divisors form a Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import (
    DEFAULT_ORDER,
    Poly,
    mono_div,
    mono_divides,
    mono_mul,
    monomial_key,
)


@dataclass(frozen=True)
class DivisionResult:
    quotients: tuple
    remainder: Poly

    def reconstruct(self, divisors) -> Poly:
        """Recompute ``sum(quotient * divisor) + remainder``."""
        acc = self.remainder
        for q, d in zip(self.quotients, divisors):
            acc = acc + q * d
        return acc


def divide(f: Poly, divisors, order: str = DEFAULT_ORDER) -> DivisionResult:
    """Divide ``f`` by an ordered sequence of nonzero divisors."""
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    for d in divisors:
        if not isinstance(d, Poly) or d.m != f.m:
            raise ValueError("divisors must be Poly in the same variables as f")
        if not d:
            raise ValueError("cannot divide by the zero polynomial")
    key = monomial_key(order)
    leads = [d.leading(order) for d in divisors]

    work = set(f.support)
    quotients = [set() for _ in divisors]
    rem: set = set()
    while work:
        lead = max(work, key=key)
        for i, dlead in enumerate(leads):
            if mono_divides(dlead, lead):
                q = mono_div(lead, dlead)
                quotients[i] ^= {q}
                # subtract q * divisor; in GF(2) that is a symmetric difference,
                # and it cancels `lead` itself since q * dlead == lead
                work ^= {mono_mul(q, mono) for mono in divisors[i].support}
                break
        else:
            rem.add(lead)
            work.remove(lead)
    return DivisionResult(
        quotients=tuple(Poly._make(f.m, frozenset(q)) for q in quotients),
        remainder=Poly._make(f.m, frozenset(rem)),
    )


def remainder(f: Poly, divisors, order: str = DEFAULT_ORDER) -> Poly:
    """Remainder of ``f`` on division by the given divisors."""
    return divide(f, divisors, order).remainder
