"""Coefficient rings: an ordered variable list over Q or a small prime field.

Coefficients are exact everywhere: `fractions.Fraction` in characteristic 0,
plain ints reduced into [0, p) in characteristic p.  No floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharacteristicError, ContractError, DimensionError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")

_MAX_PRIME = 97


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingCtx:
    """A polynomial ring context: variable names plus the coefficient field.

    characteristic 0 means Q; a prime p <= 97 means the field F_p.
    """

    variables: tuple[str, ...]
    characteristic: int = 0

    def __post_init__(self):
        if not self.variables:
            raise ContractError("a ring needs at least one variable")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ContractError(f"bad variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ContractError("variable names must be distinct")
        p = self.characteristic
        if p != 0 and (not _is_prime(p) or p > _MAX_PRIME):
            raise ContractError(f"characteristic must be 0 or a prime <= {_MAX_PRIME}, got {p}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ContractError(f"unknown variable {name!r}") from None

    def coeff(self, value):
        """Normalize a number into this ring's coefficient field.

        Floats are rejected: the toolkit is exact, and Fraction(0.1) is not
        the rational 1/10.
        """
        if isinstance(value, float):
            raise ContractError("floating-point values are not exact; use int or Fraction")
        if self.characteristic == 0:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise CharacteristicError(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def coeff_inv(self, value):
        value = self.coeff(value)
        if not value:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / value
        return pow(value, -1, self.characteristic)

    def point(self, coords) -> tuple:
        """Normalize a coordinate vector; length must match the variable count."""
        coords = tuple(coords)
        if len(coords) != self.nvars:
            raise DimensionError(
                f"point has {len(coords)} coordinates, ring has {self.nvars} variables"
            )
        return tuple(self.coeff(c) for c in coords)

    def extend(self, new_vars) -> "RingCtx":
        new_vars = tuple(new_vars)
        for v in new_vars:
            if v in self.variables:
                raise ContractError(f"variable {v!r} already in ring")
        return RingCtx(self.variables + new_vars, self.characteristic)

    def __str__(self) -> str:
        field = "Q" if self.characteristic == 0 else f"F{self.characteristic}"
        return f"{field}[{','.join(self.variables)}]"


_RING_RE = re.compile(r"\s*(Q|F(\d+))\s*\[\s*([^\]]*)\]\s*\Z")


def parse_ring(text: str) -> RingCtx:
    """Parse a ring spec like "Q[x,y,z]" or "F5[x,y]"."""
    m = _RING_RE.match(text)
    if not m:
        raise ContractError(f"cannot parse ring spec {text!r} (expected e.g. Q[x,y])")
    char = 0 if m.group(1) == "Q" else int(m.group(2))
    names = tuple(v.strip() for v in m.group(3).split(",") if v.strip())
    return RingCtx(names, char)


def parse_scalar(text) -> Fraction:
    """Parse a rational scalar given as int, Fraction, or a string like "-3/4"."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ContractError(f"cannot parse rational scalar {text!r}") from exc
