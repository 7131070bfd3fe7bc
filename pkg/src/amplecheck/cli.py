"""Command-line front end.

Subcommands map to the decision procedures one-to-one::

    amplecheck invariants  --surface P2 --ch 2:3:3/2
    amplecheck obstructions --surface P2 --ch 2:3:1/2
    amplecheck gg          --surface F1 --ch 2:2,4:3
    amplecheck ample-gg    --surface P2 --ch 2:4:0
    amplecheck asymptotic  --surface P2 --ch 2:20:-142 --direct
    amplecheck bad-curves  --surface F1 --ch 2:3,5:5/2
    amplecheck gieseker    --d 12
    amplecheck report      --surface P2 --ch 2:3:1/2

Characters are written ``r:c1:ch2`` with ``c1 = a`` on the plane or
``a,b`` (meaning ``aE + bF``) on ``F_e``, rationals as ``p/q``.  The
``--log-ch r:nu:delta`` alternative accepts the logarithmic form and
clears denominators.  ``--format structured`` emits the stable JSON tree
with every rational as ``{"num": ..., "den": ...}``.

Exit status: 0 for any completed report, 2 for malformed input, 3 when the
hypotheses of the requested procedure fail for the given character.
"""

from __future__ import annotations

import argparse
import sys

from . import report as rpt
from .ampleness import ample_gg_verdict, asymptotic_ample_certificate
from .characters import ChernCharacter, from_log_invariants, parse_character
from .errors import AmplecheckError, EnumerationLimitError, PreconditionError
from .positivity import necessary_obstructions
from .rationals import parse_rational
from .surfaces import Surface, parse_surface

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _add_character_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--surface", required=True, help="P2 or F<e>")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--ch", help="character r:c1:ch2")
    group.add_argument("--log-ch", help="character r:nu:delta (logarithmic form)")


def _add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amplecheck",
        description="exact positivity verdicts for Chern characters on rational surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("invariants", "obstructions", "gg", "ample-gg", "asymptotic", "bad-curves", "report"):
        p = sub.add_parser(name)
        _add_character_args(p)
        _add_format_arg(p)
        if name in ("asymptotic", "report"):
            p.add_argument("--s", type=int, default=2, help="kernel rank parameter (>= 2)")
            p.add_argument(
                "--direct",
                action="store_true",
                help="run the multiplier bound on the character as given, without normalizing",
            )
    p = sub.add_parser("gieseker")
    p.add_argument("--d", type=int, required=True, help="cokernel parameter (>= 4)")
    _add_format_arg(p)
    return parser


def _parse_inputs(args: argparse.Namespace) -> tuple[Surface, ChernCharacter]:
    surface = parse_surface(args.surface)
    if args.ch is not None:
        return surface, parse_character(args.ch, surface)
    pieces = args.log_ch.strip().split(":")
    if len(pieces) != 3:
        raise ValueError(f"malformed logarithmic character {args.log_ch!r}: expected 'r:nu:delta'")
    rank = int(pieces[0])
    coords = [parse_rational(t) for t in pieces[1].split(",")]
    if len(coords) != len(surface.basis):
        raise ValueError(
            f"nu on {surface} needs {len(surface.basis)} coordinates, got {pieces[1]!r}"
        )
    return surface, from_log_invariants(rank, surface.divisor(*coords), parse_rational(pieces[2]))


def _single_section_report(command: str, surface: Surface, v: ChernCharacter, section_key: str, section: dict, verdict: str) -> dict:
    return {
        "schema_version": rpt.SCHEMA_VERSION,
        "command": command,
        "surface": surface.name,
        "character": rpt.character_to_json(v),
        section_key: section,
        "verdict": verdict,
    }


def _build_report(args: argparse.Namespace) -> dict:
    if args.command == "gieseker":
        return rpt.gieseker_report(args.d)
    surface, v = _parse_inputs(args)
    if args.command == "invariants":
        section = rpt.invariants_section(v)
        section_cohomology = rpt.cohomology_section(v)
        out = _single_section_report("invariants", surface, v, "invariants", section, "computed")
        out["general_cohomology"] = section_cohomology
        # keep the verdict last for readability of the structured form
        out["verdict"] = out.pop("verdict")
        return out
    if args.command == "obstructions":
        section = rpt.obstructions_section(necessary_obstructions(v))
        return _single_section_report(
            "obstructions", surface, v, "obstructions", section, section["verdict"]
        )
    if args.command == "gg":
        section = rpt.gg_section(v)
        if "skipped" in section:
            raise PreconditionError(section["skipped"])
        verdict = (
            f"globally-generated(case {section['case']})"
            if section["globally_generated"]
            else f"not-globally-generated: {section['failed_condition']}"
        )
        return _single_section_report("gg", surface, v, "global_generation", section, verdict)
    if args.command == "ample-gg":
        cert = ample_gg_verdict(v)
        section = rpt.ample_gg_to_json(cert)
        return _single_section_report("ample-gg", surface, v, "ample_gg", section, cert.verdict)
    if args.command == "asymptotic":
        cert = asymptotic_ample_certificate(v, args.s, direct=args.direct)
        section = rpt.asymptotic_to_json(cert)
        return _single_section_report(
            "asymptotic", surface, v, "asymptotic", section, section["verdict"]
        )
    if args.command == "bad-curves":
        return rpt.bad_curves_report(surface, v)
    if args.command == "report":
        return rpt.run_report(surface, v, s=args.s, direct=args.direct)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        report = _build_report(args)
    except (PreconditionError, EnumerationLimitError) as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, AmplecheckError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.format == "structured":
        sys.stdout.buffer.write(rpt.render_structured(report))
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(rpt.render_text(report))
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
