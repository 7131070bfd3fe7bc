"""Intersection lattices of the projective plane and Hirzebruch surfaces.

The two families of surfaces handled by this package are

* the projective plane, with Picard group ``Z*H`` generated by the class of
  a line, ``H^2 = 1``, canonical class ``-3H``;
* the Hirzebruch surface ``F_e`` (``e >= 0``), the ruled surface over the
  line with fiber class ``F`` and a section ``E`` of self-intersection
  ``-e``.  The Picard group is ``Z*E + Z*F`` with pairing ``F.F = 0``,
  ``E.E = -e``, ``E.F = 1``; the canonical class is ``-2E - (e+2)F``.

On ``F_e`` the effective cone is spanned by ``E`` and ``F`` and the nef cone
by ``E + eF`` and ``F``.  We write ``H`` for the minimal ample polarization
(``E + (e+1)F`` on ``F_e``, the line on the plane) and ``L`` for the
distinguished "small" class used throughout the decision procedures: the
line on the plane, the fiber on ``F_e``.

Divisor classes are vectors of exact rationals over the distinguished basis;
all operations are pure and exact.  Sections of line bundles are counted
through the pushforward to the base line: on ``F_e``,

    h^0(aE + bF) = sum_{i=0..a} max(0, b - i*e + 1),

which agrees with the Euler characteristic ``P(aE + bF)`` whenever the class
is nef (nef line bundles on these surfaces have no higher cohomology).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidDivisorError, SurfaceMismatchError
from .rationals import Rational, is_integer, rat


class SurfaceKind(Enum):
    PROJECTIVE_PLANE = "P2"
    HIRZEBRUCH = "F"


@dataclass(frozen=True)
class Surface:
    """The projective plane or a Hirzebruch surface ``F_e``."""

    kind: SurfaceKind
    e: int = 0

    def __post_init__(self) -> None:
        if self.kind is SurfaceKind.PROJECTIVE_PLANE and self.e != 0:
            raise ValueError("the projective plane carries no parameter e")
        if self.kind is SurfaceKind.HIRZEBRUCH and self.e < 0:
            raise ValueError(f"Hirzebruch parameter must be >= 0, got {self.e}")

    @classmethod
    def projective_plane(cls) -> "Surface":
        return cls(SurfaceKind.PROJECTIVE_PLANE)

    @classmethod
    def hirzebruch(cls, e: int) -> "Surface":
        return cls(SurfaceKind.HIRZEBRUCH, e)

    @property
    def is_plane(self) -> bool:
        return self.kind is SurfaceKind.PROJECTIVE_PLANE

    @property
    def name(self) -> str:
        return "P2" if self.is_plane else f"F{self.e}"

    @property
    def basis(self) -> tuple[str, ...]:
        return ("H",) if self.is_plane else ("E", "F")

    def divisor(self, *coords: Rational) -> "DivisorClass":
        return DivisorClass(self, tuple(rat(c) for c in coords))

    @property
    def zero(self) -> "DivisorClass":
        return self.divisor(*([0] * len(self.basis)))

    @property
    def polarization(self) -> "DivisorClass":
        """The minimal ample class H: the line, or ``E + (e+1)F``."""
        if self.is_plane:
            return self.divisor(1)
        return self.divisor(1, self.e + 1)

    @property
    def fiber_class(self) -> "DivisorClass":
        """The class L: the line on the plane, the fiber F on ``F_e``."""
        if self.is_plane:
            return self.divisor(1)
        return self.divisor(0, 1)

    @property
    def canonical(self) -> "DivisorClass":
        if self.is_plane:
            return self.divisor(-3)
        return self.divisor(-2, -(self.e + 2))

    def pair(self, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> Fraction:
        if self.is_plane:
            return a[0] * b[0]
        # (a0 E + a1 F).(b0 E + b1 F) with E.E = -e, E.F = 1, F.F = 0
        return -self.e * a[0] * b[0] + a[0] * b[1] + a[1] * b[0]

    def __str__(self) -> str:
        return self.name


def parse_surface(text: str) -> Surface:
    """Parse ``"P2"`` or ``"F<e>"`` (e.g. ``"F0"``, ``"F3"``)."""
    token = text.strip()
    if token.upper() == "P2":
        return Surface.projective_plane()
    if token and token[0].upper() == "F":
        tail = token[1:]
        if tail.isdigit():
            return Surface.hirzebruch(int(tail))
    raise ValueError(f"malformed surface {text!r}: expected 'P2' or 'F<e>'")


@dataclass(frozen=True)
class DivisorClass:
    """An element of the rational Picard group, in the distinguished basis."""

    surface: Surface
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        expected = len(self.surface.basis)
        if len(self.coords) != expected:
            raise InvalidDivisorError(
                f"{self.surface} divisor needs {expected} coordinates, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(rat(c) for c in self.coords))

    def _check_same_surface(self, other: "DivisorClass") -> None:
        if self.surface != other.surface:
            raise SurfaceMismatchError(
                f"cannot combine classes on {self.surface} and {other.surface}"
            )

    @property
    def is_integral(self) -> bool:
        return all(is_integer(c) for c in self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_surface(other)
        return DivisorClass(
            self.surface, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-c for c in self.coords))

    def __mul__(self, scalar: Rational) -> "DivisorClass":
        q = rat(scalar)
        return DivisorClass(self.surface, tuple(q * c for c in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "DivisorClass") -> Fraction:
        self._check_same_surface(other)
        return self.surface.pair(self.coords, other.coords)

    @property
    def self_intersection(self) -> Fraction:
        return self.dot(self)

    def __str__(self) -> str:
        parts = []
        for c, name in zip(self.coords, self.surface.basis):
            if c == 0:
                continue
            if c == 1:
                term = name
            elif c == -1:
                term = f"-{name}"
            elif c.denominator == 1:
                term = f"{c}{name}"
            else:
                term = f"({c}){name}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += f" + {term}" if not term.startswith("-") else f" - {term[1:]}"
        return out


def intersect(d1: DivisorClass, d2: DivisorClass) -> Fraction:
    """Intersection pairing; symmetric and bilinear, exact."""
    return d1.dot(d2)


def canonical_class(surface: Surface) -> DivisorClass:
    return surface.canonical


def is_nef(d: DivisorClass) -> bool:
    """Nef cone membership: pairs >= 0 with every curve class."""
    if d.surface.is_plane:
        return d.coords[0] >= 0
    fiber = d.surface.fiber_class
    section = d.surface.divisor(1, 0)
    return d.dot(fiber) >= 0 and d.dot(section) >= 0


def is_effective(d: DivisorClass) -> bool:
    """Effective cone membership: nonnegative coordinates in {H} resp. {E, F}."""
    return all(c >= 0 for c in d.coords)


def is_big_and_nef(d: DivisorClass) -> bool:
    """Nef with positive self-intersection (bigness for nef surface classes)."""
    return is_nef(d) and d.self_intersection > 0


def is_irreducible_curve_class(d: DivisorClass) -> bool:
    """Whether the general member of |d| is an irreducible curve.

    On the plane: positive multiples of the line.  On ``F_e``: the section
    ``E``, the fiber ``F``, and ``aE + bF`` with ``a >= 1`` and ``b >= ae``;
    on ``F_0`` the last family additionally needs ``b >= 1``, since a class
    ``aE`` with ``a >= 2`` is a union of rulings there.
    """
    if not d.is_integral:
        raise InvalidDivisorError(f"irreducibility is asked of integral classes, got {d}")
    if d.surface.is_plane:
        return d.coords[0] >= 1
    a, b = int(d.coords[0]), int(d.coords[1])
    e = d.surface.e
    if (a, b) in ((1, 0), (0, 1)):  # E and F
        return True
    if a >= 1 and b >= a * e:
        return e >= 1 or b >= 1
    return False


def hilbert_polynomial(nu: DivisorClass) -> Fraction:
    """Euler characteristic of O(nu), as a polynomial in rational classes.

    This is ``chi(O) + (nu^2 - nu.K)/2``, which works out to
    ``(x^2 + 3x + 2)/2`` on the plane and ``(x+1)(y + 1 - ex/2)`` for
    ``nu = xE + yF`` on ``F_e``.
    """
    surface = nu.surface
    if surface.is_plane:
        x = nu.coords[0]
        return (x * x + 3 * x + 2) / Fraction(2)
    x, y = nu.coords
    return (x + 1) * (y + 1 - Fraction(surface.e) * x / 2)


def h0_line_bundle(d: DivisorClass) -> int:
    """Number of global sections of the line bundle O(d).

    Plane: ``(n+1)(n+2)/2`` for ``n >= 0``.  On ``F_e`` the pushforward to
    the base line splits off one summand of degree ``b - ie`` per
    ``0 <= i <= a``, each contributing ``max(0, b - ie + 1)`` sections.
    """
    if not d.is_integral:
        raise InvalidDivisorError(f"section counts are asked of integral classes, got {d}")
    if d.surface.is_plane:
        n = int(d.coords[0])
        return (n + 1) * (n + 2) // 2 if n >= 0 else 0
    a, b = int(d.coords[0]), int(d.coords[1])
    if a < 0:
        return 0
    e = d.surface.e
    return sum(max(0, b - i * e + 1) for i in range(a + 1))
