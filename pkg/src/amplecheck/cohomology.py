"""Cohomology of the general bundle via weak Brill-Noether.

For a character with ``delta >= 0`` on the plane, or with ``delta >= 0``,
``nu.F >= -1`` and ``nu.E >= -1`` on a Hirzebruch surface, the general
prioritary bundle has at most one nonzero cohomology group (and no ``h^2``
on the Hirzebruch side).  Its cohomology is therefore read off from the
Euler characteristic:

    (h0, h1, h2) = (max(chi, 0), max(-chi, 0), 0).

All statements concern the general member of the (irreducible) stack of
prioritary sheaves; nothing is claimed about an individual sheaf.

``nonspecial_all_twists`` packages the slope bookkeeping used by the
ampleness certificate: under the sharp slope hypotheses, for *every*
irreducible curve class D the twist ``v(K+D)`` satisfies the bounds above,
because ``D.F >= 0`` and ``D.E >= -e`` give

    nu(v(K+D)).F = nu.F - 2 + D.F  > 1 - 2 + 0  = -1,
    nu(v(K+D)).E = nu.E + (e-2) + D.E >= 1 + (e-2) - e = -1,

with ``delta`` unchanged by twisting.  The trace records the worst-case
margins of these estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import ChernCharacter
from .errors import PreconditionError
from .positivity import slope_conditions
from .surfaces import Surface


@dataclass(frozen=True)
class WbnApplicability:
    """Whether the weak Brill-Noether hypotheses hold, with reasons."""

    applicable: bool
    delta_ok: bool
    fiber_ok: bool = True
    section_ok: bool = True
    converse_note: str | None = None

    def __bool__(self) -> bool:
        return self.applicable

    @property
    def failures(self) -> tuple[str, ...]:
        out = []
        if not self.delta_ok:
            out.append("delta < 0")
        if not self.fiber_ok:
            out.append("nu.F < -1")
        if not self.section_ok:
            out.append("nu.E < -1")
        return tuple(out)


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int


def wbn_applicable(v: ChernCharacter) -> WbnApplicability:
    """Check the weak Brill-Noether hypotheses for the character ``v``."""
    delta_ok = v.delta >= 0
    if v.surface.is_plane:
        return WbnApplicability(delta_ok, delta_ok)
    nu = v.nu
    fiber_ok = nu.dot(v.surface.fiber_class) >= -1
    section_ok = nu.dot(v.surface.divisor(1, 0)) >= -1
    note = None
    if not section_ok and v.euler_characteristic() >= 0:
        # The converse direction: with chi >= 0, cohomology of the general
        # bundle is chi-determined only when nu.E >= -1.
        note = (
            "chi >= 0 with nu.E < -1: the general bundle genuinely has more "
            "than one nonzero cohomology group"
        )
    return WbnApplicability(
        delta_ok and fiber_ok and section_ok, delta_ok, fiber_ok, section_ok, note
    )


def wbn_cohomology(v: ChernCharacter) -> CohomologyTriple:
    """Cohomology of the general prioritary bundle, chi-determined.

    Raises ``PreconditionError`` when the weak Brill-Noether hypotheses do
    not hold for ``v``.
    """
    applicability = wbn_applicable(v)
    if not applicability:
        raise PreconditionError(
            f"weak Brill-Noether hypotheses fail for {v}: "
            + ", ".join(applicability.failures)
        )
    chi = v.euler_characteristic()
    return CohomologyTriple(max(chi, 0), max(-chi, 0), 0)


@dataclass(frozen=True)
class NonspecialTrace:
    """Symbolic certificate that every twist v(K+D) is weak-Brill-Noether.

    Margins are distances from the worst case to the failure threshold; a
    trace is only produced when they are all nonnegative (strictly positive
    where the estimate is strict).
    """

    surface: Surface
    delta: Fraction
    fiber_margin: Fraction | None = None    # (nu.F - 2) - (-1) = nu.F - 1
    section_margin: Fraction | None = None  # (nu.E - 2) - (-1) = nu.E - 1
    note: str = ""

    @property
    def holds(self) -> bool:
        if self.delta < 0:
            return False
        if self.fiber_margin is not None and self.fiber_margin <= 0:
            return False
        if self.section_margin is not None and self.section_margin < 0:
            return False
        return True


def nonspecial_all_twists(v: ChernCharacter) -> NonspecialTrace:
    """Verify symbolically that v(K+D) is nonspecial for all irreducible D.

    Requires the sharp slope hypotheses (and ``delta >= 0``); the general
    member then has chi-determined cohomology after twisting by ``K + D``
    for every irreducible curve class D at once.  The conclusion for the
    general member (a single bundle good for all D simultaneously) rests on
    the finiteness of the curve classes with negative twisted chi.
    """
    if v.delta < 0:
        raise PreconditionError(f"delta = {v.delta} < 0: no semistable bundle exists")
    conditions = slope_conditions(v)
    failed = [c.id for c in conditions if not c.holds]
    if failed:
        raise PreconditionError(
            f"slope hypotheses fail for {v}: {', '.join(failed)}"
        )
    if v.surface.is_plane:
        return NonspecialTrace(
            v.surface,
            v.delta,
            note="plane case: delta >= 0 is twist-invariant, nothing else is needed",
        )
    nu = v.nu
    fiber_margin = nu.dot(v.surface.fiber_class) - 1
    section_margin = nu.dot(v.surface.divisor(1, 0)) - 1
    return NonspecialTrace(
        v.surface,
        v.delta,
        fiber_margin=fiber_margin,
        section_margin=section_margin,
        note=(
            "worst case over irreducible D: D.F >= 0 and D.E >= -e, so the "
            "twisted slopes stay above the -1 thresholds by the recorded margins"
        ),
    )
