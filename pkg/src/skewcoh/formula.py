"""Closed-form summand dimensions for the degree -1 part of HH^2 of
S(V) x| G, G cyclic, worked element by element:

    h = 1:            (V^G / im T)*  +  (V tensor wedge^2 V*)^G
    codim V^h = 1:    (F + V/V_h tensor (V^h)*)^{chi_h}
    codim V^h = 2:    (V/V_h)^{chi_h}
    codim V^h > 2:    0

plus the nonmodular cross-checks (coprime order: reflections contribute
nothing; split characteristic polynomial: only det(h) = 1 elements of
codimension at most 2 survive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import List, Tuple

from .group_action import CyclicGroup, chi_invariants, kron
from .linalg import char_poly, poly_splits


class WrongCaseError(ValueError):
    pass


@dataclass(frozen=True)
class SummandReport:
    element_index: int
    case: str                      # identity | codim1 | codim2 | vanishing
    pieces: Tuple[Tuple[str, int], ...]
    total: int

    def to_dict(self) -> dict:
        return {"element_index": self.element_index, "case": self.case,
                "pieces": [[name, dim] for name, dim in self.pieces],
                "total": self.total}

    @staticmethod
    def from_dict(d: dict) -> "SummandReport":
        return SummandReport(d["element_index"], d["case"],
                             tuple((p[0], int(p[1])) for p in d["pieces"]),
                             int(d["total"]))


@dataclass(frozen=True)
class CohomologyReport:
    per_element: Tuple[SummandReport, ...]
    total_dim: int

    def to_dict(self) -> dict:
        return {"per_element": [s.to_dict() for s in self.per_element],
                "total_dim": self.total_dim}

    @staticmethod
    def from_dict(d: dict) -> "CohomologyReport":
        return CohomologyReport(tuple(SummandReport.from_dict(s) for s in d["per_element"]),
                                int(d["total_dim"]))


def identity_contribution(gr: CyclicGroup) -> SummandReport:
    vg = gr.invariants()
    t = gr.transfer()
    if not vg.contains_space(t.image):
        raise AssertionError("im T not inside V^G")
    piece1 = vg.dim - t.image.dim
    act = gr.induced_action(1 % gr.order, "V_tensor_wedge2dual")
    piece2 = chi_invariants(act, gr.field.one()).dim if act.nrows else 0
    pieces = (("(V^G/im T)*", piece1), ("(V tensor wedge2 V*)^G", piece2))
    return SummandReport(0, "identity", pieces, piece1 + piece2)


def codim1_contribution(gr: CyclicGroup, i: int) -> SummandReport:
    ed = gr.element(i)
    if ed.codim != 1:
        raise WrongCaseError("element %d has codim %d, expected 1" % (i, ed.codim))
    f = gr.field
    chi = ed.chi_of_generator
    piece_f = 1 if chi == f.one() else 0
    # generator's action on V/V_h tensor (V^h)*
    quot = gr.induced_action(1 % gr.order, "quotient_by", ed.moved_space)
    dual_fix = gr.induced_action(1 % gr.order, "dual_restricted_to", ed.fixed_space)
    if quot.nrows and dual_fix.nrows:
        tens = kron(quot, dual_fix)
        piece_t = chi_invariants(tens, chi).dim
    else:
        piece_t = 0
    pieces = (("F^{chi_h}", piece_f), ("(V/V_h tensor (V^h)*)^{chi_h}", piece_t))
    return SummandReport(i, "codim1", pieces, piece_f + piece_t)


def codim2_contribution(gr: CyclicGroup, i: int) -> SummandReport:
    ed = gr.element(i)
    if ed.codim != 2:
        raise WrongCaseError("element %d has codim %d, expected 2" % (i, ed.codim))
    quot = gr.induced_action(1 % gr.order, "quotient_by", ed.moved_space)
    piece = chi_invariants(quot, ed.chi_of_generator).dim if quot.nrows else 0
    return SummandReport(i, "codim2", (("(V/V_h)^{chi_h}", piece),), piece)


def full_report(gr: CyclicGroup) -> CohomologyReport:
    out: List[SummandReport] = []
    for i in range(gr.order):
        ed = gr.element(i)
        if ed.codim == 0:
            out.append(identity_contribution(gr))
        elif ed.codim == 1:
            out.append(codim1_contribution(gr, i))
        elif ed.codim == 2:
            out.append(codim2_contribution(gr, i))
        else:
            out.append(SummandReport(i, "vanishing", (("codim > 2", 0),), 0))
    return CohomologyReport(tuple(out), sum(s.total for s in out))


@dataclass(frozen=True)
class NonmodularReport:
    prop_applicable: bool          # gcd(|G|, char F) = 1
    cor_applicable: bool           # char poly of g splits over F
    checked: int                   # how many vanishing assertions were evaluated
    violations: Tuple[str, ...]
    verdict: str                   # pass | fail | not_applicable

    def to_dict(self) -> dict:
        return {"prop_applicable": self.prop_applicable,
                "cor_applicable": self.cor_applicable,
                "checked": self.checked,
                "violations": list(self.violations),
                "verdict": self.verdict}

    @staticmethod
    def from_dict(d: dict) -> "NonmodularReport":
        return NonmodularReport(bool(d["prop_applicable"]), bool(d["cor_applicable"]),
                                int(d["checked"]), tuple(d["violations"]), d["verdict"])


def nonmodular_crosscheck(gr: CyclicGroup, report: CohomologyReport | None = None) -> NonmodularReport:
    """Cross-check the formula output against the nonmodular statements.

    Coprime case: every codimension-1 summand must vanish.  Split case
    (coprime + split characteristic polynomial): every codimension-1 or -2
    summand at an element with det(h) != 1 must vanish.  In the modular
    case neither statement applies and the verdict is not_applicable; a
    coprime group with nothing to check passes vacuously.
    """
    if report is None:
        report = full_report(gr)
    p = gr.field.char
    prop_ok = p == 0 or math.gcd(gr.order, p) == 1
    cor_ok = prop_ok and poly_splits(gr.field, char_poly(gr.generator))
    checked = 0
    violations: List[str] = []
    for s in report.per_element:
        ed = gr.element(s.element_index)
        if prop_ok and s.case == "codim1":
            checked += 1
            if s.total != 0:
                violations.append("codim-1 element %d contributes %d in the coprime case"
                                  % (s.element_index, s.total))
        if cor_ok and s.case in ("codim1", "codim2") and ed.det != gr.field.one():
            checked += 1
            if s.total != 0:
                violations.append("element %d has det != 1 but contributes %d in the split case"
                                  % (s.element_index, s.total))
    if not prop_ok:
        verdict = "not_applicable"
    else:
        verdict = "pass" if not violations else "fail"
    return NonmodularReport(prop_ok, cor_ok, checked, tuple(violations), verdict)
