"""Necessary conditions for ampleness and the global-generation classification.

Two kinds of verdict live here.

*Obstructions.*  A stable ample bundle of rank >= 2 must satisfy, besides
the Bogomolov inequality ``delta >= 0`` and the Fulton-Lazarsfeld bound

    nu^2 / 2 > delta / (rank + 1),

sharp slope inequalities coming from restriction to rational curves:
``nu.H > 1 + 1/rank`` on the plane (with the tangent bundle as the unique
exception), and ``nu.F > 1`` together with ``nu.E >= 1`` (``> 1`` on
``F_0``) on Hirzebruch surfaces.  A stable bundle with ``nu.F = 1`` is
forced to be a line bundle, so for rank >= 2 that equality is itself an
obstruction.  Stability of the input character is an assumption recorded in
the report, never a computed fact.

*Global generation.*  For ``delta >= 0`` and rank >= 2 the characters whose
general prioritary bundle is globally generated are classified by a short
case list per surface; the dispatch below mirrors those lists exactly,
comparing the character-identity cases by exact equality.  A uniform
sufficient criterion: if ``nu`` is big and nef and ``chi(v(-L)) >= 0``, the
general bundle is globally generated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .characters import ChernCharacter
from .errors import PreconditionError
from .rationals import Rational, rat
from .surfaces import DivisorClass, is_big_and_nef, is_nef


def tangent_bundle_character(surface) -> ChernCharacter | None:
    """The plane's tangent bundle character (2, 3H, 3/2); None elsewhere."""
    if not surface.is_plane:
        return None
    return ChernCharacter(2, surface.divisor(3), Fraction(3, 2))


@dataclass(frozen=True)
class Condition:
    """One checked inequality with its exact margin (negative = violated)."""

    id: str
    text: str
    holds: bool
    margin: Fraction


class ObstructionVerdict(Enum):
    UNOBSTRUCTED = "unobstructed"
    OBSTRUCTED = "obstructed"
    EXCEPTIONAL_TANGENT_BUNDLE = "exceptional-tangent-bundle"


@dataclass(frozen=True)
class ObstructionReport:
    conditions: tuple[Condition, ...]
    verdict: ObstructionVerdict
    stability_assumed: bool
    note: str | None = None

    @property
    def failed(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.holds)


def bogomolov_check(v: ChernCharacter) -> bool:
    """Semistability forces delta >= 0."""
    return v.delta >= 0


def fulton_lazarsfeld_margin(rank: int, nu: DivisorClass, delta: Rational) -> Fraction:
    """Exact margin ``nu^2/2 - delta/(rank+1)`` of the ampleness bound.

    Positive margin means the strict inequality holds.  Stated on the
    logarithmic invariants so thresholds can be probed at rationals that do
    not lift to an integral character at this rank.
    """
    return nu.self_intersection / 2 - rat(delta) / (rank + 1)


def fulton_lazarsfeld_check(v: ChernCharacter) -> tuple[bool, Fraction]:
    margin = fulton_lazarsfeld_margin(v.rank, v.nu, v.delta)
    return margin > 0, margin


def slope_conditions(v: ChernCharacter, *, asymptotic: bool = False) -> tuple[Condition, ...]:
    """The sharp per-surface slope inequalities for ampleness verdicts.

    ``asymptotic=True`` selects the plane threshold ``nu.H > 1`` used when
    the character may be scaled; the default is the fixed-rank threshold
    ``nu.H > 1 + 1/rank``.  The Hirzebruch conditions do not depend on the
    mode: ``nu.F > 1`` and ``nu.E > 1`` on ``F_0``, ``nu.E >= 1`` for
    ``e >= 1``.
    """
    nu = v.nu
    surface = v.surface
    if surface.is_plane:
        slope = nu.dot(surface.polarization)
        if asymptotic:
            return (
                Condition("slope-exceeds-one", "nu.H > 1", slope > 1, slope - 1),
            )
        threshold = 1 + Fraction(1, v.rank)
        return (
            Condition(
                "slope-exceeds-one-plus-inverse-rank",
                "nu.H > 1 + 1/rank",
                slope > threshold,
                slope - threshold,
            ),
        )
    fiber = nu.dot(surface.fiber_class)
    section = nu.dot(surface.divisor(1, 0))
    conditions = [
        Condition("fiber-slope-exceeds-one", "nu.F > 1", fiber > 1, fiber - 1)
    ]
    if surface.e == 0:
        conditions.append(
            Condition("section-slope-exceeds-one", "nu.E > 1", section > 1, section - 1)
        )
    else:
        conditions.append(
            Condition("section-slope-at-least-one", "nu.E >= 1", section >= 1, section - 1)
        )
    return tuple(conditions)


def slope_conditions_hold(v: ChernCharacter, *, asymptotic: bool = False) -> bool:
    return all(c.holds for c in slope_conditions(v, asymptotic=asymptotic))


def necessary_obstructions(v: ChernCharacter) -> ObstructionReport:
    """Checklist of every known numerical obstruction to ampleness.

    The verdict concerns stable bundles: OBSTRUCTED means no stable ample
    bundle of this character exists.  The one exception on the plane is the
    tangent bundle, flagged separately.
    """
    nu = v.nu
    surface = v.surface
    delta = v.delta
    fl_holds, fl_margin = fulton_lazarsfeld_check(v)
    conditions: list[Condition] = [
        Condition("bogomolov", "delta >= 0", delta >= 0, delta),
        Condition(
            "fulton-lazarsfeld", "nu^2/2 > delta/(rank+1)", fl_holds, fl_margin
        ),
    ]
    if surface.is_plane:
        conditions.append(
            Condition("slope-at-least-one", "mu >= 1", v.mu >= 1, v.mu - 1)
        )
    else:
        fiber = nu.dot(surface.fiber_class)
        section = nu.dot(surface.divisor(1, 0))
        conditions.append(
            Condition("fiber-slope-at-least-one", "nu.F >= 1", fiber >= 1, fiber - 1)
        )
        conditions.append(
            Condition(
                "section-slope-at-least-one", "nu.E >= 1", section >= 1, section - 1
            )
        )
    if v.rank >= 2:
        conditions.extend(slope_conditions(v))
        if not surface.is_plane:
            fiber = nu.dot(surface.fiber_class)
            conditions.append(
                Condition(
                    "line-bundle-forcing",
                    "nu.F != 1 (a stable bundle with nu.F = 1 is a line bundle)",
                    fiber != 1,
                    fiber - 1,
                )
            )

    note = None
    if v == tangent_bundle_character(surface):
        verdict = ObstructionVerdict.EXCEPTIONAL_TANGENT_BUNDLE
        note = (
            "the tangent bundle of the plane: the unique stable ample bundle "
            "with slope at most 1 + 1/rank; it is globally generated and ample"
        )
    elif all(c.holds for c in conditions):
        verdict = ObstructionVerdict.UNOBSTRUCTED
    else:
        verdict = ObstructionVerdict.OBSTRUCTED
    return ObstructionReport(tuple(conditions), verdict, stability_assumed=True, note=note)


@dataclass(frozen=True)
class GGClassification:
    """Outcome of the global-generation case dispatch for the general bundle."""

    globally_generated: bool
    case: int | None = None
    description: str = ""
    failed_condition: str | None = None
    chi: int | None = None
    chi_twist: int | None = None
    chi_twist_second: int | None = None
    balanced_split: tuple[int, int] | None = None  # (a, m)


def _require_gg_hypotheses(v: ChernCharacter) -> None:
    if v.rank < 2:
        raise PreconditionError(f"global generation is classified for rank >= 2, got {v.rank}")
    if v.delta < 0:
        raise PreconditionError(f"delta = {v.delta} < 0: no semistable bundle exists")
    if not v.surface.is_plane and not is_nef(v.nu):
        raise PreconditionError(f"nu = {v.nu} is not nef on {v.surface}")


def _balanced_fiber_split(v: ChernCharacter, direction: DivisorClass) -> tuple[int, int] | None:
    """Solve ``v = (rank-m) ch O(aD) + m ch O((a+1)D)`` for integers a, m >= 0.

    ``direction`` is E or F with self-intersection 0, so the split exists
    iff ``ch2 = 0`` and ``c1 = c*D`` with ``c >= 0``; then ``(a, m)`` is the
    division of ``c`` by the rank.  Balanced direct sums of twists along a
    ruling, including the trivial ones ``rank * ch O(aD)``, are all globally
    generated, so nonnegative ``a, m`` (with ``m < rank``) is the right
    solvability range.
    """
    if v.ch2 != 0:
        return None
    along = direction.coords.index(1)
    if any(c != 0 for i, c in enumerate(v.c1.coords) if i != along):
        return None
    c = int(v.c1.coords[along])
    if c < 0:
        return None
    a, m = divmod(c, v.rank)
    return a, m


def classify_global_generation(v: ChernCharacter) -> GGClassification:
    """Exact case dispatch of the global-generation classification.

    Requires ``delta >= 0`` and rank >= 2 (and ``nu`` nef on Hirzebruch
    surfaces); exactly one case fires for a positive verdict.
    """
    _require_gg_hypotheses(v)
    surface = v.surface
    r = v.rank
    chi = v.euler_characteristic()
    if surface.is_plane:
        h = surface.polarization
        mu = v.mu
        if mu < 0:
            return GGClassification(False, failed_condition="negative slope", chi=chi)
        if mu == 0:
            if v.c1 == surface.zero and v.ch2 == 0:
                return GGClassification(
                    True, 1, "trivial character: rank * ch O", chi=chi,
                    balanced_split=(0, 0),
                )
            return GGClassification(
                False, failed_condition="slope zero but not rank * ch O", chi=chi
            )
        chi_twist = v.twist(-h).euler_characteristic()
        if chi_twist >= 0:
            return GGClassification(
                True, 2, "chi(v(-H)) >= 0", chi=chi, chi_twist=chi_twist
            )
        if chi >= r + 2:
            return GGClassification(
                True, 3, "chi(v) >= rank + 2", chi=chi, chi_twist=chi_twist
            )
        # special character (rank+1) ch O - ch O(-2H) = (rank, 2H, -2)
        if chi == r + 1 and v == ChernCharacter(r, 2 * h, Fraction(-2)):
            return GGClassification(
                True, 4, "chi(v) = rank + 1 and v = (rank+1) ch O - ch O(-2H)",
                chi=chi, chi_twist=chi_twist,
            )
        if chi == r + 1:
            return GGClassification(
                False, failed_condition="chi(v) = rank + 1 but v is not the special character",
                chi=chi, chi_twist=chi_twist,
            )
        return GGClassification(
            False, failed_condition="chi(v(-H)) < 0 and chi(v) <= rank + 1",
            chi=chi, chi_twist=chi_twist,
        )

    e = surface.e
    fiber = surface.fiber_class
    section = surface.divisor(1, 0)
    nu_f = v.nu.dot(fiber)
    nu_e = v.nu.dot(section)
    if e == 0:
        if nu_e == 0 or nu_f == 0:
            # nu.E = 0 forces c1 along E; nu.F = 0 forces c1 along F
            direction = section if nu_e == 0 else fiber
            split = _balanced_fiber_split(v, direction)
            if split is not None:
                return GGClassification(
                    True, 1, "balanced sum of line bundles along a ruling",
                    chi=chi, balanced_split=split,
                )
            return GGClassification(
                False,
                failed_condition="degenerate slope but not a balanced sum along a ruling",
                chi=chi,
            )
        chi_e = v.twist(-section).euler_characteristic()
        chi_f = v.twist(-fiber).euler_characteristic()
        if chi_e >= 0 or chi_f >= 0:
            return GGClassification(
                True, 2, "chi(v(-E)) >= 0 or chi(v(-F)) >= 0",
                chi=chi, chi_twist=chi_f, chi_twist_second=chi_e,
            )
        if chi >= r + 2:
            return GGClassification(
                True, 3, "chi(v) >= rank + 2",
                chi=chi, chi_twist=chi_f, chi_twist_second=chi_e,
            )
        return GGClassification(
            False, failed_condition="both ruling twists have chi < 0 and chi(v) <= rank + 1",
            chi=chi, chi_twist=chi_f, chi_twist_second=chi_e,
        )

    if nu_f == 0:
        split = _balanced_fiber_split(v, fiber)
        if split is not None:
            return GGClassification(
                True, 1, "balanced sum of line bundles pulled back from the base",
                chi=chi, balanced_split=split,
            )
        return GGClassification(
            False,
            failed_condition="fiber degree zero but not a balanced sum of fiber twists",
            chi=chi,
        )
    chi_twist = v.twist(-fiber).euler_characteristic()
    if chi_twist >= 0:
        return GGClassification(True, 2, "chi(v(-F)) >= 0", chi=chi, chi_twist=chi_twist)
    if chi >= r + 2:
        return GGClassification(True, 3, "chi(v) >= rank + 2", chi=chi, chi_twist=chi_twist)
    if (
        e == 1
        and chi == r + 1
        and v == ChernCharacter(r, surface.divisor(2, 2), Fraction(-2))
    ):
        # (rank+1) ch O - ch O(-2E-2F) = (rank, 2E+2F, -2) on F_1
        return GGClassification(
            True, 4, "chi(v) = rank + 1 and v = (rank+1) ch O - ch O(-2E-2F)",
            chi=chi, chi_twist=chi_twist,
        )
    return GGClassification(
        False, failed_condition="chi(v(-F)) < 0 and chi(v) <= rank + 1",
        chi=chi, chi_twist=chi_twist,
    )


def gg_quick_criterion(v: ChernCharacter) -> bool:
    """Sufficient criterion: ``chi(v(-L)) >= 0`` forces global generation.

    One-sided: False means the criterion is silent, not that the general
    bundle fails to be globally generated.  Requires ``delta >= 0``,
    rank >= 2 and ``nu`` big and nef.
    """
    if v.rank < 2:
        raise PreconditionError(f"the criterion needs rank >= 2, got {v.rank}")
    if v.delta < 0:
        raise PreconditionError(f"delta = {v.delta} < 0: no semistable bundle exists")
    if not is_big_and_nef(v.nu):
        raise PreconditionError(f"nu = {v.nu} is not big and nef")
    return v.twist(-v.surface.fiber_class).euler_characteristic() >= 0
