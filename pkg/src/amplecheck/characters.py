"""Exact Chern character arithmetic and Riemann-Roch.

A character is a triple ``(rank, c1, ch2)`` with positive rank, integral
``c1`` and exact rational ``ch2`` subject to the integrality of the second
Chern class ``c2 = c1^2/2 - ch2``.  The logarithmic invariants

    mu = (c1.H) / (rank * H^2),   nu = c1 / rank,
    delta = nu^2 / 2 - ch2 / rank

are invariant under scaling the character, and ``delta`` is additionally
invariant under twisting by any divisor class.  The Euler characteristic is
computed by Riemann-Roch in the form

    chi = rank * (P(nu) - delta)

with ``P`` the Hilbert polynomial of the structure sheaf; it is an integer
for every valid character.

The canonical textual form used by the CLI and reports is ``r:c1:ch2`` with
``c1`` rendered as ``a`` (plane) or ``a,b`` (meaning ``aE + bF``) and
``ch2`` as ``p/q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCharacterError, InvalidDivisorError
from .rationals import Rational, format_rational, is_integer, parse_rational, rat
from .surfaces import DivisorClass, Surface, hilbert_polynomial


@dataclass(frozen=True)
class LogInvariants:
    """Slope, total slope and discriminant of a character."""

    mu: Fraction
    nu: DivisorClass
    delta: Fraction


@dataclass(frozen=True)
class ChernCharacter:
    rank: int
    c1: DivisorClass
    ch2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ch2", rat(self.ch2))
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidCharacterError(f"rank must be a positive integer, got {self.rank}")
        if not self.c1.is_integral:
            raise InvalidCharacterError(f"c1 must be integral, got {self.c1}")
        c2 = self.c1.self_intersection / 2 - self.ch2
        if not is_integer(c2):
            raise InvalidCharacterError(
                f"c1^2/2 - ch2 = {c2} is not an integer (c2 must be integral)"
            )

    @property
    def surface(self) -> Surface:
        return self.c1.surface

    @property
    def c2(self) -> int:
        return int(self.c1.self_intersection / 2 - self.ch2)

    @property
    def nu(self) -> DivisorClass:
        return self.c1 * Fraction(1, self.rank)

    @property
    def mu(self) -> Fraction:
        h = self.surface.polarization
        return self.c1.dot(h) / (self.rank * h.self_intersection)

    @property
    def delta(self) -> Fraction:
        nu = self.nu
        return nu.self_intersection / 2 - self.ch2 / self.rank

    def log_invariants(self) -> LogInvariants:
        return LogInvariants(self.mu, self.nu, self.delta)

    def euler_characteristic(self) -> int:
        chi = self.rank * (hilbert_polynomial(self.nu) - self.delta)
        if not is_integer(chi):
            raise InvalidCharacterError(f"non-integral Euler characteristic {chi} for {self}")
        return int(chi)

    def twist(self, d: DivisorClass) -> "ChernCharacter":
        """Tensor with the line bundle O(d), d integral."""
        if not d.is_integral:
            raise InvalidDivisorError(f"twists are by integral classes, got {d}")
        return ChernCharacter(
            self.rank,
            self.c1 + self.rank * d,
            self.ch2 + self.c1.dot(d) + self.rank * d.self_intersection / 2,
        )

    def dual(self) -> "ChernCharacter":
        return ChernCharacter(self.rank, -self.c1, self.ch2)

    def scale(self, n: int) -> "ChernCharacter":
        if not isinstance(n, int) or n < 1:
            raise InvalidCharacterError(f"scaling factor must be a positive integer, got {n}")
        return ChernCharacter(n * self.rank, n * self.c1, n * self.ch2)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        """Character of a direct sum."""
        return ChernCharacter(self.rank + other.rank, self.c1 + other.c1, self.ch2 + other.ch2)

    def __str__(self) -> str:
        coords = ",".join(format_rational(c) for c in self.c1.coords)
        return f"{self.rank}:{coords}:{format_rational(self.ch2)}"


def make_character(
    rank: int, c1: DivisorClass, ch2: Rational, surface: Surface | None = None
) -> ChernCharacter:
    """Validated constructor; ``surface`` (if given) must match ``c1``."""
    if surface is not None and c1.surface != surface:
        raise InvalidCharacterError(f"c1 lives on {c1.surface}, expected {surface}")
    return ChernCharacter(rank, c1, rat(ch2))


def from_log_invariants(rank: int, nu: DivisorClass, delta: Rational) -> ChernCharacter:
    """Build a character from ``(rank, nu, delta)``, clearing denominators.

    ``rank * nu`` must be integral and the resulting ``c2`` an integer;
    otherwise no character with these invariants exists at this rank.
    """
    if not isinstance(rank, int) or rank < 1:
        raise InvalidCharacterError(f"rank must be a positive integer, got {rank}")
    c1 = rank * nu
    if not c1.is_integral:
        raise InvalidCharacterError(
            f"rank {rank} does not clear the denominators of nu = {nu}"
        )
    ch2 = rank * (nu.self_intersection / 2 - rat(delta))
    return ChernCharacter(rank, c1, ch2)


def line_bundle_character(d: DivisorClass) -> ChernCharacter:
    """Character ``(1, d, d^2/2)`` of the line bundle O(d)."""
    if not d.is_integral:
        raise InvalidDivisorError(f"line bundles need integral classes, got {d}")
    return ChernCharacter(1, d, d.self_intersection / 2)


def parse_character(text: str, surface: Surface) -> ChernCharacter:
    """Parse the canonical form ``r:c1:ch2``; see the module docstring."""
    pieces = text.strip().split(":")
    if len(pieces) != 3:
        raise ValueError(f"malformed character {text!r}: expected 'r:c1:ch2'")
    rank_text, c1_text, ch2_text = pieces
    try:
        rank = int(rank_text)
    except ValueError as exc:
        raise ValueError(f"malformed rank {rank_text!r}") from exc
    coord_texts = c1_text.split(",")
    if len(coord_texts) != len(surface.basis):
        raise ValueError(
            f"c1 on {surface} needs {len(surface.basis)} coordinates, got {c1_text!r}"
        )
    coords = [parse_rational(t) for t in coord_texts]
    return make_character(rank, surface.divisor(*coords), parse_rational(ch2_text))
