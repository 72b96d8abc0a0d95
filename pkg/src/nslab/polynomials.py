"""Dense integer-coefficient polynomials and cyclotomic factor peeling."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInput

__all__ = ["IntegerPolynomial", "cyclotomic", "CyclotomicFactorization", "peel_cyclotomic"]


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients; coeffs[k] is the z^k coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntegerPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntegerPolynomial(tuple(out))

    def exact_div(self, other: "IntegerPolynomial"):
        """Quotient when ``other`` divides exactly over the integers, else None."""
        b = other.coeffs
        if not b:
            raise InvalidInput("division by the zero polynomial")
        a = list(self.coeffs)
        if len(a) < len(b):
            return None if self else IntegerPolynomial(())
        lead = b[-1]
        q = [0] * (len(a) - len(b) + 1)
        for k in range(len(q) - 1, -1, -1):
            head = a[k + len(b) - 1]
            if head % lead:
                return None
            q[k] = head // lead
            if q[k]:
                for j, bj in enumerate(b):
                    a[k + j] -= q[k] * bj
        if any(a[: len(b) - 1]):
            return None
        return IntegerPolynomial(tuple(q))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _totient(n: int) -> int:
    out = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntegerPolynomial:
    """The d-th cyclotomic polynomial, via exact division of z^d - 1."""
    if d < 1:
        raise InvalidInput(f"cyclotomic index must be >= 1: {d}")
    num = IntegerPolynomial((-1,) + (0,) * (d - 1) + (1,))
    for q in range(1, d):
        if d % q == 0:
            num = num.exact_div(cyclotomic(q))
            if num is None:  # pragma: no cover - mathematically impossible
                raise InvalidInput(f"cyclotomic recursion failed at {d}")
    return num


@dataclass(frozen=True)
class CyclotomicFactorization:
    is_cyclotomic: bool
    factors: tuple[int, ...] | None  # sorted multiset of indices d, or None

    def to_json_dict(self) -> dict:
        if not self.is_cyclotomic:
            return {"cyclotomic": False}
        return {"cyclotomic": True, "factors": [{"d": d} for d in self.factors]}


def peel_cyclotomic(P: IntegerPolynomial) -> CyclotomicFactorization:
    """Factor P into cyclotomic polynomials, or report that it is impossible.

    Peels indices in ascending order, allowing multiplicity, using exact
    integer division only.  P must be monic with constant term +-1 (both hold
    for semigroup numerators); P == 1 factors as the empty product.
    """
    if not P or P.coeffs[-1] != 1:
        raise InvalidInput("polynomial must be monic")
    if P.coeffs[0] not in (1, -1):
        raise InvalidInput("constant term must be +-1")
    factors = []
    # phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2*deg^2; phi is not
    # monotone, so the whole range must be scanned rather than stopped early.
    cap = 2 * P.degree * P.degree + 2
    d = 1
    while P.degree > 0 and d <= cap:
        if _totient(d) <= P.degree:
            q = P.exact_div(cyclotomic(d))
            if q is not None:
                factors.append(d)
                P = q
                continue  # same index again: multiplicities are allowed
        d += 1
    if P.degree > 0:
        return CyclotomicFactorization(False, None)
    return CyclotomicFactorization(True, tuple(factors))
