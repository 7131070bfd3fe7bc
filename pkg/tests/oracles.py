"""Independent brute-force oracles for the decision procedures.

Everything here deliberately avoids the library's closed forms: bad curves
are found by scanning a coordinate box with the irreducibility predicate
and a direct Euler-characteristic evaluation, and minimal multipliers by
stepping n upward until the kernel discriminant turns nonnegative.
"""

from __future__ import annotations

from amplecheck import (
    ChernCharacter,
    Surface,
    is_irreducible_curve_class,
    kernel_character,
)

SCAN_CAP = 10_000


def chi_of_twist(v: ChernCharacter, d) -> int:
    return v.twist(v.surface.canonical + d).euler_characteristic()


def matches_bad_curve_shape(surface: Surface, coords: tuple) -> bool:
    """The per-surface shape list for classes that can obstruct ampleness."""
    if surface.is_plane:
        return coords[0] in (1, 2)
    a, b = int(coords[0]), int(coords[1])
    e = surface.e
    if e == 0:
        return (a == 1 and b >= 0) or (b == 1 and a >= 0)
    if e == 1:
        return (a, b) == (0, 1) or (a, b) == (2, 2) or (a == 1 and b >= 0)
    return (a, b) in ((0, 1), (1, 0)) or (a == 1 and b >= e)


def naive_family_cutoff(v: ChernCharacter) -> int:
    """Largest coordinate at which twisted chi could still be negative.

    Found by naive upward iteration along each family of the shape list,
    with no reliance on the library's exact cutoff computation.
    """
    surface = v.surface
    if surface.is_plane:
        return 2
    largest = 2
    families = [lambda b: surface.divisor(1, b)]
    b0 = surface.e if surface.e >= 2 else 0
    if surface.e == 0:
        families.append(lambda b: surface.divisor(b, 1))
    for member in families:
        b = b0
        while chi_of_twist(v, member(b)) < 0:
            b += 1
            if b - b0 > SCAN_CAP:
                raise AssertionError("runaway family scan")
        largest = max(largest, b)
    if surface.e == 1:
        largest = max(largest, 2)  # the 2E+2F singleton
    return largest


def brute_force_bad_curves(v: ChernCharacter, box: int) -> set[tuple]:
    """All irreducible classes with negative twisted chi in a coordinate box."""
    surface = v.surface
    out = set()
    if surface.is_plane:
        candidates = [surface.divisor(n) for n in range(1, box + 1)]
    else:
        candidates = [
            surface.divisor(a, b) for a in range(0, box + 1) for b in range(0, box + 1)
        ]
    for d in candidates:
        if not is_irreducible_curve_class(d):
            continue
        if chi_of_twist(v, d) < 0:
            out.add(d.coords)
    return out


def brute_min_multiplier(base: ChernCharacter, s: int, cap: int = 5000) -> int:
    """Least n >= 1 with nonnegative kernel discriminant, by direct search."""
    n = 1
    while kernel_character(base, n, s).delta < 0:
        n += 1
        if n > cap:
            raise AssertionError("runaway multiplier search")
    return n
