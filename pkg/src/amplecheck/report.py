"""Report assembly: one deterministic, exactly-rational view of all verdicts.

Reports are plain dicts of JSON-native values built in a fixed key order,
so the structured rendering is byte-identical across runs and round-trips
through ``json.loads``.  Every rational is rendered as ``{"num", "den"}``;
no floating point value ever appears.  Each section carries a ``tag``
naming the criterion that backs its verdict, drawn from ``VERDICT_TAGS``.

Sections are omitted only when their preconditions fail, and then the
failing precondition is named in a ``skipped`` entry.
"""

from __future__ import annotations

import json

from .ampleness import (
    AmpleGGCertificate,
    AsymptoticCertificate,
    BadCurve,
    ample_gg_verdict,
    asymptotic_ample_certificate,
    enumerate_bad_curves,
    gieseker_character,
)
from .characters import ChernCharacter
from .cohomology import NonspecialTrace, WbnApplicability, wbn_applicable, wbn_cohomology
from .errors import PreconditionError
from .positivity import (
    Condition,
    GGClassification,
    ObstructionReport,
    classify_global_generation,
    gg_quick_criterion,
    necessary_obstructions,
)
from .rationals import rational_to_json
from .surfaces import DivisorClass, Surface

SCHEMA_VERSION = "1"

VERDICT_TAGS = frozenset(
    {
        "riemann-roch",
        "weak-brill-noether",
        "ampleness-obstructions",
        "gg-classification",
        "gg-quick-criterion",
        "nonspecial-twists",
        "bad-curves",
        "dimension-count",
        "ample-globally-generated",
        "asymptotic-ampleness",
        "kernel-discriminant",
    }
)


def divisor_to_json(d: DivisorClass) -> dict:
    return {
        "basis": list(d.surface.basis),
        "coords": [rational_to_json(c) for c in d.coords],
        "text": str(d),
    }


def character_to_json(v: ChernCharacter) -> dict:
    return {
        "rank": v.rank,
        "c1": divisor_to_json(v.c1),
        "ch2": rational_to_json(v.ch2),
        "c2": v.c2,
        "text": str(v),
    }


def condition_to_json(c: Condition) -> dict:
    return {
        "id": c.id,
        "text": c.text,
        "holds": c.holds,
        "margin": rational_to_json(c.margin),
    }


def _wbn_to_json(w: WbnApplicability) -> dict:
    out = {
        "applicable": w.applicable,
        "failures": list(w.failures),
    }
    if w.converse_note:
        out["converse_note"] = w.converse_note
    return out


def invariants_section(v: ChernCharacter) -> dict:
    inv = v.log_invariants()
    return {
        "tag": "riemann-roch",
        "mu": rational_to_json(inv.mu),
        "nu": divisor_to_json(inv.nu),
        "delta": rational_to_json(inv.delta),
        "euler_characteristic": v.euler_characteristic(),
    }


def cohomology_section(v: ChernCharacter) -> dict:
    applicability = wbn_applicable(v)
    if not applicability:
        return {
            "tag": "weak-brill-noether",
            "skipped": "hypotheses fail: " + ", ".join(applicability.failures),
        }
    triple = wbn_cohomology(v)
    return {
        "tag": "weak-brill-noether",
        "general_bundle": "cohomology of the general prioritary bundle",
        "h0": triple.h0,
        "h1": triple.h1,
        "h2": triple.h2,
    }


def obstructions_section(report: ObstructionReport) -> dict:
    out = {
        "tag": "ampleness-obstructions",
        "stability_assumed": report.stability_assumed,
        "conditions": [condition_to_json(c) for c in report.conditions],
        "verdict": report.verdict.value,
    }
    if report.note:
        out["note"] = report.note
    return out


def gg_section(v: ChernCharacter) -> dict:
    try:
        gg = classify_global_generation(v)
    except PreconditionError as exc:
        return {"tag": "gg-classification", "skipped": str(exc)}
    out = gg_to_json(gg)
    try:
        out["quick_criterion"] = {
            "tag": "gg-quick-criterion",
            "sufficient": gg_quick_criterion(v),
        }
    except PreconditionError as exc:
        out["quick_criterion"] = {"tag": "gg-quick-criterion", "skipped": str(exc)}
    return out


def gg_to_json(gg: GGClassification) -> dict:
    out: dict = {"tag": "gg-classification", "globally_generated": gg.globally_generated}
    if gg.globally_generated:
        out["case"] = gg.case
        out["case_description"] = gg.description
    else:
        out["failed_condition"] = gg.failed_condition
    if gg.chi is not None:
        out["chi"] = gg.chi
    if gg.chi_twist is not None:
        out["chi_twist"] = gg.chi_twist
    if gg.chi_twist_second is not None:
        out["chi_twist_second"] = gg.chi_twist_second
    if gg.balanced_split is not None:
        out["balanced_split"] = {"a": gg.balanced_split[0], "m": gg.balanced_split[1]}
    return out


def nonspecial_to_json(trace: NonspecialTrace) -> dict:
    out: dict = {"tag": "nonspecial-twists", "delta": rational_to_json(trace.delta)}
    if trace.fiber_margin is not None:
        out["fiber_margin"] = rational_to_json(trace.fiber_margin)
    if trace.section_margin is not None:
        out["section_margin"] = rational_to_json(trace.section_margin)
    out["note"] = trace.note
    out["holds"] = trace.holds
    return out


def bad_curve_to_json(bad: BadCurve) -> dict:
    return {
        "tag": "dimension-count",
        "curve": divisor_to_json(bad.curve),
        "chi_twist": bad.chi_twist,
        "d": bad.d,
        "c": rational_to_json(bad.c),
        "passes": bad.passes,
    }


def ample_gg_to_json(cert: AmpleGGCertificate) -> dict:
    out: dict = {
        "tag": "ample-globally-generated",
        "slope_conditions": [condition_to_json(c) for c in cert.slope_conditions],
    }
    if cert.gg is not None:
        out["global_generation"] = gg_to_json(cert.gg)
    if cert.nonspecial is not None:
        out["nonspecial_twists"] = nonspecial_to_json(cert.nonspecial)
    out["bad_curves"] = {
        "tag": "bad-curves",
        "classes": [bad_curve_to_json(b) for b in cert.bad_curves],
    }
    out["verdict"] = cert.verdict
    if cert.failure_reason:
        out["failure_reason"] = cert.failure_reason
    out["notes"] = list(cert.notes)
    return out


def asymptotic_to_json(cert: AsymptoticCertificate) -> dict:
    out = {
        "tag": "asymptotic-ampleness",
        "mode": cert.mode,
        "slope_conditions": [condition_to_json(c) for c in cert.slope_conditions],
        "base_character": character_to_json(cert.base),
        "twist_used": divisor_to_json(cert.twist_used),
        "s": cert.s,
        "B": divisor_to_json(cert.b),
        "B_squared": rational_to_json(cert.b.self_intersection),
        "bound": rational_to_json(cert.bound),
        "n_min": cert.n_min,
        "kernel": {
            "tag": "kernel-discriminant",
            "character": character_to_json(cert.kernel),
            "delta": rational_to_json(cert.delta_kernel),
            "delta_at_previous_n": (
                rational_to_json(cert.delta_kernel_prev)
                if cert.delta_kernel_prev is not None
                else None
            ),
        },
        "chi_dual_twist": cert.chi_dual_twist,
        "chi_kernel_dual_twist": cert.chi_kernel_dual_twist,
        "kernel_twist_nu": divisor_to_json(cert.kernel_twist_nu),
        "kernel_twist_globally_generated": cert.kernel_twist_gg,
        "wbn_kernel_dual_twist": _wbn_to_json(cert.wbn_kernel),
        "notes": list(cert.notes),
        "verdict": f"asymptotically-ample(n_min={cert.n_min})",
    }
    return out


def _skipped(tag: str, exc: Exception) -> dict:
    return {"tag": tag, "skipped": str(exc)}


def run_report(surface: Surface, v: ChernCharacter, *, s: int = 2, direct: bool = False) -> dict:
    """The full pipeline: invariants, obstructions, gg, ampleness, asymptotics."""
    report: dict = {
        "schema_version": SCHEMA_VERSION,
        "command": "report",
        "surface": surface.name,
        "character": character_to_json(v),
        "invariants": invariants_section(v),
        "general_cohomology": cohomology_section(v),
        "obstructions": obstructions_section(necessary_obstructions(v)),
        "global_generation": gg_section(v),
    }
    ample = ample_gg_verdict(v)
    report["ample_gg"] = ample_gg_to_json(ample)
    try:
        cert = asymptotic_ample_certificate(v, s, direct=direct)
        report["asymptotic"] = asymptotic_to_json(cert)
    except PreconditionError as exc:
        report["asymptotic"] = _skipped("asymptotic-ampleness", exc)
    report["warnings"] = [
        "stability of the input character is assumed, not verified",
    ]
    report["verdict"] = report["ample_gg"]["verdict"]
    return report


def bad_curves_report(surface: Surface, v: ChernCharacter) -> dict:
    bad = enumerate_bad_curves(v)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "bad-curves",
        "surface": surface.name,
        "character": character_to_json(v),
        "bad_curves": {
            "tag": "bad-curves",
            "classes": [bad_curve_to_json(b) for b in bad],
        },
        "verdict": (
            f"{len(bad)} bad curve class(es); "
            + ("all dimension counts pass" if all(b.passes for b in bad) else "some dimension count fails")
        ),
    }


def gieseker_report(d: int, s: int = 2) -> dict:
    v = gieseker_character(d)
    cert = asymptotic_ample_certificate(v, s, direct=True)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "gieseker",
        "d": d,
        "surface": v.surface.name,
        "character": character_to_json(v),
        "invariants": invariants_section(v),
        "asymptotic": asymptotic_to_json(cert),
        "verdict": f"asymptotically-ample(n_min={cert.n_min})",
    }


def render_structured(report: dict) -> bytes:
    """Stable machine-readable rendering; deterministic field order."""
    return (json.dumps(report, indent=2, ensure_ascii=True) + "\n").encode("ascii")


def parse_structured(payload: bytes) -> dict:
    return json.loads(payload.decode("ascii"))


def _fmt_rat(value: dict) -> str:
    if value["den"] == 1:
        return str(value["num"])
    return f"{value['num']}/{value['den']}"


def _render_lines(node, indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    if isinstance(node, dict):
        if set(node) == {"num", "den"}:
            lines.append(pad + _fmt_rat(node))
            return
        for key, value in node.items():
            if key == "verdict":
                # the one "verdict:" line is printed at the end; nested
                # section outcomes are labelled differently
                if indent > 0:
                    lines.append(f"{pad}outcome: {value}")
                continue
            if isinstance(value, dict) and set(value) == {"num", "den"}:
                lines.append(f"{pad}{key}: {_fmt_rat(value)}")
            elif isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                _render_lines(value, indent + 1, lines)
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(node, list):
        for item in node:
            if isinstance(item, dict) and set(item) == {"num", "den"}:
                lines.append(f"{pad}- {_fmt_rat(item)}")
            elif isinstance(item, (dict, list)):
                lines.append(pad + "-")
                _render_lines(item, indent + 1, lines)
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{node}")


def render_text(report: dict) -> str:
    """Human-readable rendering with exactly one final verdict line."""
    lines: list[str] = []
    _render_lines(report, 0, lines)
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"
