"""Exact-rational discharging.

Initial charges are ``2 d(v) - 6`` on vertices and ``d(f) - 6`` on faces,
summing to -12 on every connected plane graph.  Rules R1-R4 move charge
from vertices to incident 3-, 4- and 5-faces, R5 moves 1/8 from 7+-faces
into the triangles of a W5, and R6 then averages the charge over each
cluster of edge-adjacent triangles.  No floating point is used here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .configuration import Taxonomy, classify, face_vertex_degrees, matches_pattern
from .plane_graph import PlaneGraph

TOTAL_CHARGE = Fraction(-12)
RULE_DENOMINATOR = 120  # lcm of every R1-R5 constant's denominator
RULES = ("R1.1", "R1.2", "R2.1", "R2.2", "R2.3", "R3.1", "R3.2", "R4.1", "R4.2", "R4.3", "R4.4", "R5", "R6")

F = Fraction


class ConflictingClassification(RuntimeError):
    """Two mutually exclusive branches of one rule matched the same incidence."""


class InvariantViolation(RuntimeError):
    pass


class Element(NamedTuple):
    kind: str  # "v" or "f"
    id: int

    def __str__(self):
        return f"{self.kind}{self.id}"


def V(i: int) -> Element:
    return Element("v", i)


def Fc(i: int) -> Element:
    return Element("f", i)


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class AuditNote:
    element: Element
    face: Element
    rule: str
    reason: str


@dataclass(frozen=True)
class Redistribution:
    kind: str
    faces: tuple[int, ...]
    total: Fraction
    share: Fraction


@dataclass(frozen=True)
class Ledger:
    initial: dict[Element, Fraction]
    entries: tuple[Transfer, ...]
    audit: tuple[AuditNote, ...] = ()
    redistributions: tuple[Redistribution, ...] = ()

    def balances(self, upto_rule: str | None = None) -> dict[Element, Fraction]:
        bal = dict(self.initial)
        for t in self.entries:
            if upto_rule is not None and t.rule == upto_rule:
                break
            bal[t.source] -= t.amount
            bal[t.target] += t.amount
        return bal


def initial_charges(G: PlaneGraph) -> dict[Element, Fraction]:
    out = {V(v): F(2 * G.vertex_degree(v) - 6) for v in G.vertices}
    out.update({Fc(f.id): F(f.degree - 6) for f in G.faces})
    return out


def _pick(rule, v, f, branches, otherwise=None):
    hits = [(amount, label) for amount, label, ok in branches if ok]
    if len(hits) > 1:
        raise ConflictingClassification(
            f"{rule}: vertex {v} / face {f} matches {[label for _, label in hits]}"
        )
    if hits:
        return hits[0][0]
    return otherwise


def _triangle_rule(G, tax: Taxonomy, v, f):
    d = G.vertex_degree(v)
    degs = face_vertex_degrees(G, f)
    flaw = tax.flaw
    if f in tax.isolated_triangles:
        if d == 4:
            is_flaw = v in flaw
            return "R1.1", _pick("R1.1", v, f, [
                (F(3, 5), "flaw, (4,5+,5+)-face", is_flaw and matches_pattern(degs, (4, "5+", "5+"))),
                (F(4, 5), "flaw, (4,4,5+)-face", is_flaw and matches_pattern(degs, (4, 4, "5+"))),
            ], otherwise=F(1))
        fours = [x for x in G.face(f).vertex_set if G.vertex_degree(x) == 4]
        nflaw = sum(1 for x in fours if x in flaw)
        return "R1.2", _pick("R1.2", v, f, [
            (F(7, 5), "(4,4,5+)-face, both 4-vertices flaw", matches_pattern(degs, (4, 4, "5+")) and nflaw == 2),
            (F(6, 5), "(4,4+,5+)-face, one flaw 4-vertex", matches_pattern(degs, (4, "4+", "5+")) and nflaw == 1),
        ], otherwise=F(1))

    role = tax.role(v, f)
    if d == 4:
        hub = v in tax.hubs and f in tax.hubs[v].faces
        return "R2.1", _pick("R2.1", v, f, [
            (F(1, 2), "hub of W5", hub),
            (F(1), "good, bad or worse face", not hub and role in ("good", "bad", "worse")),
            (F(2, 3), "worst face", not hub and role == "worst"),
        ])
    if d == 5:
        return "R2.2", _pick("R2.2", v, f, [
            (F(1), "good or worst face", role in ("good", "worst")),
            (F(3, 2), "bad face", role == "bad"),
            (F(5, 4), "worse face", role == "worse"),
        ])
    return "R2.3", _pick("R2.3", v, f, [
        (F(1), "good or worst face", role in ("good", "worst")),
        (F(3, 2), "bad or worse face", role in ("bad", "worse")),
    ])


def _quad_rule(G, tax, v, f):
    if G.vertex_degree(v) == 4:
        return "R3.1", F(1, 3)
    degs = face_vertex_degrees(G, f)
    return "R3.2", _pick("R3.2", v, f, [
        (F(1), "(4,4,4,5+)-face", matches_pattern(degs, (4, 4, 4, "5+"))),
    ], otherwise=F(2, 3))


def _pentagon_rule(G, tax, v, f):
    d = G.vertex_degree(v)
    degs = face_vertex_degrees(G, f)
    if d == 4:
        is_flaw = v in tax.flaw
        nbr_degs = [G.vertex_degree(w) for w in G.neighbors(v)]
        big = sum(1 for x in nbr_degs if x >= 5)
        return "R4.1", _pick("R4.1", v, f, [
            (F(0), "flaw, all neighbours 4-vertices", is_flaw and all(x == 4 for x in nbr_degs)),
            (F(1, 10), "flaw, one 5+-neighbour", is_flaw and big == 1),
            (F(1, 5), "flaw, two or more 5+-neighbours", is_flaw and big >= 2),
            (F(1, 3), "not flaw", not is_flaw),
        ])
    if d == 5:
        fives = sorted(x for x in G.face(f).vertex_set if G.vertex_degree(x) == 5)
        joined = len(fives) == 2 and G.has_edge(*fives)
        return "R4.2", _pick("R4.2", v, f, [
            (F(2, 5), "(4,4,4,5,5)-face, adjacent 5-vertices", matches_pattern(degs, (4, 4, 4, 5, 5)) and joined),
            (F(1, 3), "(4,4,4,4,5)-face", matches_pattern(degs, (4, 4, 4, 4, 5))),
        ], otherwise=F(3, 10))
    if d == 6:
        return "R4.3", _pick("R4.3", v, f, [
            (F(4, 5), "(4,4,4,4,6)-face", matches_pattern(degs, (4, 4, 4, 4, 6))),
        ], otherwise=F(2, 5))
    return "R4.4", F(4, 5)


_FACE_RULES = {3: _triangle_rule, 4: _quad_rule, 5: _pentagon_rule}


def redistribute(balances: dict[Element, Fraction], clusters) -> tuple[list[Transfer], list[Redistribution]]:
    """Average each cluster's triangle charges.  Returns the transfers (surplus
    faces paying deficit faces in id order) and a per-cluster summary."""
    entries, summary = [], []
    for c in clusters:
        faces = sorted(c.faces)
        total = sum((balances[Fc(f)] for f in faces), F(0))
        share = total / len(faces)
        summary.append(Redistribution(c.kind, tuple(faces), total, share))
        donors = [[f, balances[Fc(f)] - share] for f in faces if balances[Fc(f)] > share]
        takers = [[f, share - balances[Fc(f)]] for f in faces if balances[Fc(f)] < share]
        i = j = 0
        while i < len(donors) and j < len(takers):
            amt = min(donors[i][1], takers[j][1])
            entries.append(Transfer(Fc(donors[i][0]), Fc(takers[j][0]), amt, "R6"))
            donors[i][1] -= amt
            takers[j][1] -= amt
            if donors[i][1] == 0:
                i += 1
            if takers[j][1] == 0:
                j += 1
    return entries, summary


def apply_rules(G: PlaneGraph, taxonomy: Taxonomy | None = None) -> Ledger:
    tax = taxonomy or classify(G)
    entries: list[Transfer] = []
    audit: list[AuditNote] = []

    for v in G.vertices:
        d = G.vertex_degree(v)
        for f in sorted(set(G.incident_faces(v))):
            fd = G.face_degree(f)
            rule_fn = _FACE_RULES.get(fd)
            if rule_fn is None:
                continue
            if d < 4:
                audit.append(AuditNote(V(v), Fc(f), f"R{fd - 2}", f"no rule for a {d}-vertex"))
                continue
            rule, amount = rule_fn(G, tax, v, f)
            if amount is None:
                audit.append(AuditNote(V(v), Fc(f), rule, "no_branch"))
                continue
            entries.append(Transfer(V(v), Fc(f), amount, rule))

    wheel_faces = tax.wheel_faces
    for f in G.faces:
        if f.degree < 7:
            continue
        for g in G.adjacent_faces(f.id):
            if g in wheel_faces and len(G.shared_edges(f.id, g)) == 1:
                entries.append(Transfer(Fc(f.id), Fc(g), F(1, 8), "R5"))

    entries.sort(key=lambda t: (t.source, t.target, RULES.index(t.rule)))
    ledger = Ledger(initial_charges(G), tuple(entries), tuple(audit))
    r6, summary = redistribute(ledger.balances(), tax.clusters)
    return Ledger(ledger.initial, ledger.entries + tuple(r6), ledger.audit, tuple(summary))


@dataclass(frozen=True)
class FinalCharges:
    charges: dict[Element, Fraction]
    total: Fraction
    negative: tuple[Element, ...]


def final_charges(G: PlaneGraph, ledger: Ledger) -> FinalCharges:
    bal = ledger.balances()
    total = sum(bal.values(), F(0))
    if total != TOTAL_CHARGE:
        raise InvariantViolation(f"final charges sum to {total}, expected {TOTAL_CHARGE}")
    neg = tuple(sorted(e for e, c in bal.items() if c < 0))
    return FinalCharges(bal, total, neg)


@dataclass(frozen=True)
class CaseMatch:
    element: Element
    case: str
    value: Fraction
    claim: str  # "=0" or ">=0"
    agrees: bool
    cluster_total: Fraction | None = None


@dataclass(frozen=True)
class CaseAudit:
    matches: tuple[CaseMatch, ...]
    uncovered: tuple[tuple[Element, str], ...]

    @property
    def disagreements(self) -> list[CaseMatch]:
        return [m for m in self.matches if not m.agrees]


def _vertex_case(G, tax: Taxonomy, v):
    d = G.vertex_degree(v)
    if d < 4:
        return None, f"vertex of degree {d} < 4"
    faces = G.incident_faces(v)
    if d == 4:
        if v in tax.flaw:
            exact = all(G.vertex_degree(w) == 4 for w in G.neighbors(v))
            return ("1.1", "=0" if exact else ">=0"), None
        tris = [f for f in faces if G.face_degree(f) == 3]
        rest = [G.face_degree(f) for f in faces if G.face_degree(f) != 3]
        if len(tris) <= 1:
            return ("1.2", ">=0"), None
        if len(tris) == 2 and all(x >= 6 for x in rest):
            return ("1.2", "=0"), None
        if len(tris) == 3 and all(x >= 6 for x in rest) and all(tax.role(v, f) == "worst" for f in tris):
            return ("1.2", "=0"), None
        if len(tris) == 4 and v in tax.hubs:
            return ("1.2", "=0"), None
        return None, f"4-vertex with {len(tris)} triangles outside the enumerated shapes"
    touchy = any(
        G.face_degree(f) == 3 and (f not in tax.isolated_triangles or tax.role(v, f) == "bad") for f in faces
    )
    major = {5: "2", 6: "3"}.get(d, "4")
    return (f"{major}.{1 if touchy else 2}", ">=0"), None


def _face_case(G, tax: Taxonomy, f):
    face = G.face(f)
    d = face.degree
    if d >= 6:
        return ("6+-face", ">=0"), None
    if d < 3 or not face.is_simple:
        return None, f"face of degree {d} with a non-simple boundary"
    if any(G.vertex_degree(x) < 4 for x in face.vertex_set):
        return None, "face touches a vertex of degree < 4"
    if d == 3:
        if f in tax.isolated_triangles:
            return ("5", "=0"), None
        c = tax.cluster_of[f]
        if c.kind == "trio":
            return ("6.2", ">=0"), None
        if c.kind == "w5":
            return ("6.3", ">=0"), None
        if not any(g in t.faces for g in c.faces for t in tax.all_trios):
            return ("6.1", ">=0"), None
        return None, f"triangle cluster of {len(c.faces)} faces is neither a trio nor a W5"
    if d == 4:
        return ("7", ">=0"), None
    big = sum(1 for x in face.vertex_set if G.vertex_degree(x) >= 5)
    return (f"8.{1 if big >= 3 else 2 if big == 2 else 3}", ">=0"), None


def case_audit(G: PlaneGraph, charges: FinalCharges, taxonomy: Taxonomy | None = None) -> CaseAudit:
    """Match every element against the enumerated final-charge cases and
    compare its final charge with the claimed value or bound."""
    tax = taxonomy or classify(G)
    matches, uncovered = [], []
    totals = {}
    for c in tax.clusters:
        totals[c] = sum((charges.charges[Fc(f)] for f in c.faces), F(0))
    items = [(V(v), _vertex_case(G, tax, v)) for v in G.vertices]
    items += [(Fc(f.id), _face_case(G, tax, f.id)) for f in G.faces]
    for el, (hit, reason) in items:
        if hit is None:
            uncovered.append((el, reason))
            continue
        case, claim = hit
        val = charges.charges[el]
        ok = val == 0 if claim == "=0" else val >= 0
        ct = totals.get(tax.cluster_of.get(el.id)) if el.kind == "f" and case.startswith("6.") else None
        matches.append(CaseMatch(el, case, val, claim, ok, ct))
    return CaseAudit(tuple(matches), tuple(uncovered))


@dataclass
class DischargeResult:
    taxonomy: Taxonomy
    ledger: Ledger
    final: FinalCharges
    audit: CaseAudit = field(repr=False)


def discharge(G: PlaneGraph, taxonomy: Taxonomy | None = None) -> DischargeResult:
    tax = taxonomy or classify(G)
    ledger = apply_rules(G, tax)
    final = final_charges(G, ledger)
    return DischargeResult(tax, ledger, final, case_audit(G, final, tax))
