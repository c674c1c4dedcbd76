"""Plain-data reports for the command line.

Every function returns nested dicts and lists built in a fixed key order,
so ``json.dumps`` of the result is byte-stable.  Rationals are written as
``{"num": p, "den": q}``; vertices appear under their labels and faces
under their integer ids.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from . import configuration, cycles, discharging
from .choosability import ChoosabilityResult, ListAssignment
from .gadgets import GadgetReport
from .plane_graph import PlaneGraph, degree_histogram

SCHEMA_VERSION = 1


def rational(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def element(G: PlaneGraph, e: discharging.Element) -> str:
    return f"v:{G.label(e.id)}" if e.kind == "v" else f"f:{e.id}"


def _labels(G: PlaneGraph, vs) -> list:
    return [G.label(v) for v in vs]


def _edge(G: PlaneGraph, e) -> list:
    return _labels(G, e)


def _cycle(G: PlaneGraph, c: cycles.Cycle) -> list:
    return _labels(G, c.vertices)


def _face(G: PlaneGraph, f: int) -> dict:
    return {"id": f, "boundary": _labels(G, G.face(f).vertices)}


def _sort_labels(labels) -> list:
    return sorted(labels, key=lambda x: (type(x).__name__, x))


def lists_out(L: ListAssignment | None, label=lambda v: v):
    if L is None:
        return None
    rows = [(label(v), sorted(cs)) for v, cs in L.items()]
    return {k: cs for k, cs in sorted(rows, key=lambda r: (type(r[0]).__name__, r[0]))}


def graph_summary(G: PlaneGraph, name: str | None = None) -> dict:
    return {
        "name": name,
        "vertices": G.n,
        "edges": len(G.edges),
        "faces": len(G.faces),
        "vertex_degrees": {str(k): v for k, v in degree_histogram(G.degree_sequence()).items()},
        "face_degrees": {str(k): v for k, v in degree_histogram(G.face_degrees()).items()},
    }


def hypothesis_out(G: PlaneGraph, rep: cycles.HypothesisReport, limit: int = 10) -> dict:
    return {
        "i": rep.i,
        "holds": rep.holds,
        "witness_count": len(rep.witnesses),
        "witnesses": [
            {"cycle": _cycle(G, w.cycle), "partners": [_cycle(G, p) for p in w.partners]}
            for w in rep.witnesses[:limit]
        ],
    }


def prop2_out(G: PlaneGraph, findings: list[cycles.Prop2Finding]) -> list:
    return [
        {
            "item": f.item,
            "anchor": _cycle(G, f.anchor),
            "config_edges": [_edge(G, e) for e in sorted(f.config_edges)],
            "partners": [{"reading": r, "cycle": _cycle(G, c)} for r, c in f.partners],
            "face": f.face,
            "hub": None if f.hub is None else G.label(f.hub),
        }
        for f in findings
    ]


_VERTEX_KEYS = {"vertex", "source", "hub", "violations"}


def _structural(G: PlaneGraph, obj, key=None):
    if isinstance(obj, dict):
        return {k: _structural(G, v, k) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_structural(G, v, key) for v in obj]
    if key in _VERTEX_KEYS and isinstance(obj, int) and not isinstance(obj, bool):
        return G.label(obj)
    return obj


def taxonomy_out(G: PlaneGraph, tax: configuration.Taxonomy) -> dict:
    return {
        "flaw_vertices": _sort_labels(G.label(v) for v in tax.flaw),
        "trios": [
            {"worst": G.label(t.v), "worse": _labels(G, (t.x, t.y)), "bad": _labels(G, (t.u, t.w)), "faces": list(t.faces)}
            for t in tax.trios
        ],
        "w5": [{"hub": G.label(w.hub), "rim": _labels(G, w.rim), "faces": list(w.faces)} for w in tax.wheels],
        "poor_5faces": [_face(G, f) for f in tax.poor_faces],
        "clusters": [{"kind": c.kind, "faces": list(c.faces)} for c in tax.clusters],
        # roles and rules only see facial triangles; separating ones are listed here
        "non_facial_triangles": [_cycle(G, c) for c in cycles.enumerate_cycles(G, 3) if not c.is_face_boundary],
        "structural_checks": _structural(G, configuration.structural_checks(G, tax)),
    }


def _match(G, m: discharging.CaseMatch) -> dict:
    return {
        "element": element(G, m.element),
        "case": m.case,
        "final": rational(m.value),
        "claim": m.claim,
        "agrees": m.agrees,
        "cluster_total": None if m.cluster_total is None else rational(m.cluster_total),
    }


def audit_out(G: PlaneGraph, audit: discharging.CaseAudit) -> dict:
    cases: dict[str, int] = {}
    for m in audit.matches:
        cases[m.case] = cases.get(m.case, 0) + 1
    return {
        "matched": len(audit.matches),
        "uncovered": [{"element": element(G, e), "reason": r} for e, r in audit.uncovered],
        "cases": dict(sorted(cases.items())),
        "disagreements": [_match(G, m) for m in audit.disagreements],
    }


def discharge_summary(G: PlaneGraph, res: discharging.DischargeResult) -> dict:
    return {
        "initial_sum": rational(sum(res.ledger.initial.values(), Fraction(0))),
        "final_sum": rational(res.final.total),
        "transfers": len(res.ledger.entries),
        "negative": [
            {"element": element(G, e), "final": rational(res.final.charges[e])} for e in res.final.negative
        ],
        "case_audit": audit_out(G, res.audit),
    }


def ledger_out(G: PlaneGraph, res: discharging.DischargeResult, name: str | None = None) -> dict:
    led = res.ledger
    return {
        "schema": "discharge",
        "version": SCHEMA_VERSION,
        "graph": graph_summary(G, name),
        "initial": [{"element": element(G, e), "charge": rational(c)} for e, c in sorted(led.initial.items())],
        "transfers": [
            {"rule": t.rule, "from": element(G, t.source), "to": element(G, t.target), "amount": rational(t.amount)}
            for t in led.entries
        ],
        "redistributions": [
            {"kind": r.kind, "faces": list(r.faces), "total": rational(r.total), "share": rational(r.share)}
            for r in led.redistributions
        ],
        "notes": [
            {"element": element(G, a.element), "face": element(G, a.face), "rule": a.rule, "reason": a.reason}
            for a in led.audit
        ],
        "final": [{"element": element(G, e), "charge": rational(c)} for e, c in sorted(res.final.charges.items())],
        "summary": discharge_summary(G, res),
    }


def gadget_out(r: GadgetReport) -> dict:
    return {
        "name": r.name,
        "description": r.description,
        "sizes": {k: r.sizes[k] for k in _sort_labels(r.sizes)},
        "distinct_lists_only": r.distinct,
        "claim": r.expected,
        "always_colorable": r.always,
        "agrees": r.agrees,
        "counterexample": lists_out(r.counterexample),
    }


def gadgets_out(reports: list[GadgetReport]) -> dict:
    return {
        "schema": "gadgets",
        "version": SCHEMA_VERSION,
        "gadgets": [gadget_out(r) for r in reports],
        "all_claims_agree": all(r.agrees is not False for r in reports),
    }


def choosable_out(G: PlaneGraph, k: int, res: ChoosabilityResult, name=None, smoke=None, given=None) -> dict:
    return {
        "schema": "choosable",
        "version": SCHEMA_VERSION,
        "graph": graph_summary(G, name),
        "k": k,
        "choosable": res.choosable,
        "searched_core_size": res.core_size,
        "bad_assignment": lists_out(res.bad_assignment, G.label),
        "smoke_check": smoke,
        "given_lists": given,
    }


_FLAT_ARRAY = re.compile(r"\[\n\s+([^\[\]{}]*?)\n\s*\]")


def dumps(obj) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    # encoded strings never contain a raw newline, so ",\n" only separates items
    text = _FLAT_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",\n")) + "]", text)
    return text + "\n"


# human-readable rendering


def _is_rational(x) -> bool:
    return isinstance(x, dict) and set(x) == {"num", "den"}


def _scalar(x, notes: list) -> str:
    if _is_rational(x):
        if x["den"] == 1:
            return str(x["num"])
        notes.append(True)
        return f"{x['num']}/{x['den']} (~{x['num'] / x['den']:.4f})"
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _compact(x) -> bool:
    return not isinstance(x, (dict, list)) or _is_rational(x) or (
        isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)
    )


def _render(x, indent: int, out: list, notes: list):
    pad = "  " * indent
    if isinstance(x, dict) and not _is_rational(x):
        for k, v in x.items():
            if _compact(v):
                val = "[" + ", ".join(map(str, v)) + "]" if isinstance(v, list) else _scalar(v, notes)
                out.append(f"{pad}{k}: {val}")
            else:
                out.append(f"{pad}{k}:")
                _render(v, indent + 1, out, notes)
    elif isinstance(x, list):
        if not x:
            out.append(f"{pad}(none)")
        for item in x:
            if _compact(item):
                out.append(f"{pad}- {_scalar(item, notes) if not isinstance(item, list) else item}")
            else:
                sub: list = []
                _render(item, indent + 1, sub, notes)
                sub[0] = pad + "- " + sub[0].lstrip()
                out.extend(sub)
    else:
        out.append(pad + _scalar(x, notes))


def render_text(obj) -> str:
    out: list = []
    notes: list = []
    _render(obj, 0, out, notes)
    if notes:
        out.append("")
        out.append("Decimals in parentheses are approximations of exact rationals; use --format json for exact values.")
    return "\n".join(out) + "\n"
