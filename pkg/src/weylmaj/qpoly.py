"""Exact integer polynomials in one variable ``q`` and the product formulas.

Coefficients are Python integers, so nothing ever overflows.  A polynomial
is stored densely, ascending by exponent, with trailing zeros removed.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls([0] * exponent + [coeff])

    @classmethod
    def one(cls) -> "QPoly":
        return cls([1])

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly([other])
        return QPoly(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly([other])
        return self + (-other)

    def __rsub__(self, other: int) -> "QPoly":
        return QPoly([other]) - self

    def __mul__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            return QPoly(other * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        out = QPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def substitute_power(self, k: int) -> "QPoly":
        """``p(q^k)``."""
        if k < 1:
            raise ValueError("power must be positive")
        out = [0] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QPoly(out)

    def exponents(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def first_mismatch(self, other: "QPoly") -> int | None:
        for k in range(max(len(self.coeffs), len(other.coeffs))):
            if self[k] != other[k]:
                return k
        return None

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return render_text(self)


def _term(c: int, k: int, var: str, first: bool, power_fmt: str) -> str:
    mag = abs(c)
    if k == 0:
        body = str(mag)
    else:
        body = ("" if mag == 1 else str(mag)) + (var if k == 1 else power_fmt.format(var=var, k=k))
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def render_text(p: QPoly, var: str = "q") -> str:
    """Canonical text form, e.g. ``1 - q^2 + 3q^5``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c:
            parts.append(_term(c, k, var, not parts, "{var}^{k}"))
    return "".join(parts)


def render_latex(p: QPoly, var: str = "q") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c:
            parts.append(_term(c, k, var, not parts, "{var}^{{{k}}}"))
    return "".join(parts)


def q_int(n: int, sign: int = 1) -> QPoly:
    """``[n]_q`` for ``sign=+1`` and ``[n]_{-q}`` for ``sign=-1``; ``[0]`` is zero."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return QPoly(sign**k for k in range(n))


def substitute_neg_q(p: QPoly) -> QPoly:
    """``p(-q)``."""
    return QPoly(-c if k % 2 else c for k, c in enumerate(p.coeffs))


def neg_q_correction(n: int) -> QPoly:
    """``[n]_q - [n]_{-q}``: twice the odd-exponent part of ``[n]_q``.

    Equals ``2(q + q^3 + ... + q^{n-1})`` for even ``n`` and
    ``2(q + q^3 + ... + q^{n-2})`` for odd ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return QPoly(2 if k % 2 else 0 for k in range(n))


# Each closed form is a list of factors; a factor is
# ("qint", m, sign, power) meaning [m] evaluated at sign*q^power,
# or ("binom", e) meaning 1 - q^e.
Factor = tuple


def _alt(k: int) -> int:
    return -1 if k % 2 else 1


def _factors_poincare_s(n):
    return [("qint", i, 1, 1) for i in range(1, n + 1)]


def _factors_gessel_simion(n):
    return [("qint", i, _alt(i - 1), 1) for i in range(1, n + 1)]


def _factors_poincare_b(n):
    return [("qint", 2 * i, 1, 1) for i in range(1, n + 1)]


def _factors_agr(n):
    return [("qint", 2 * i, _alt(i), 1) for i in range(1, n + 1)]


def _factors_b_negparity(n):
    return [("qint", 2 * i, -1, 1) for i in range(1, n + 1)]


def _factors_b_abssign(n):
    return [("qint", 2 * i, _alt(i - 1), 1) for i in range(1, n + 1)]


def _factors_poincare_d(n):
    return [("qint", 2 * i, 1, 1) for i in range(1, n)] + [("qint", n, 1, 1)]


def _factors_signed_mahonian_d(n):
    return _factors_agr(n - 1) + [("qint", n, 1, 1)]


def _factors_delta_even(n):
    if n % 2:
        raise ValueError("delta-even needs an even rank")
    return _factors_agr(n - 1) + [("qint", n, 1, 1)]


def _factors_delta_odd(n):
    if n % 2 == 0:
        raise ValueError("delta-odd needs an odd rank")
    return _factors_agr(n - 1) + [("qint", n, -1, 1)]


def _factors_b2n_product(n):
    return _factors_agr(2 * n)


def _factors_b2n_recursion_rhs(n):
    return [("binom", 4 * i - 2) for i in range(1, n + 1)] + [
        ("qint", 2 * i, 1, 2) for i in range(1, n + 1)
    ]


_FORMULAS = {
    "poincare-s": _factors_poincare_s,
    "gessel-simion": _factors_gessel_simion,
    "poincare-b": _factors_poincare_b,
    "agr": _factors_agr,
    "b-negparity": _factors_b_negparity,
    "b-abssign": _factors_b_abssign,
    "poincare-d": _factors_poincare_d,
    "signed-mahonian-d": _factors_signed_mahonian_d,
    "delta-even": _factors_delta_even,
    "delta-odd": _factors_delta_odd,
    "b2n-product": _factors_b2n_product,
    "b2n-recursion-rhs": _factors_b2n_recursion_rhs,
}

FORMULA_NAMES = tuple(_FORMULAS)


def formula_factors(name: str, n: int) -> list[Factor]:
    try:
        build = _FORMULAS[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}") from None
    if n < 0:
        raise ValueError("n must be nonnegative")
    return build(n)


def _expand(f: Factor) -> QPoly:
    if f[0] == "binom":
        return QPoly.one() - QPoly.monomial(f[1])
    _, m, sign, power = f
    return q_int(m, sign).substitute_power(power)


def formula(name: str, n: int) -> QPoly:
    """Expand the named closed-form product at rank ``n``."""
    out = QPoly.one()
    for f in formula_factors(name, n):
        out = out * _expand(f)
    return out


def formula_latex(name: str, n: int) -> str:
    """Bracket notation, e.g. ``[2]_{-q}[4]_{q}``."""
    parts = []
    for f in formula_factors(name, n):
        if f[0] == "binom":
            parts.append(f"(1 - q^{{{f[1]}}})")
            continue
        _, m, sign, power = f
        var = "q" if power == 1 else f"q^{{{power}}}"
        parts.append(f"[{m}]_{{{'-' if sign < 0 else ''}{var}}}")
    return "".join(parts) or "1"
