"""JSON encoders for the result objects.

Each function returns a dict with a ``kind`` field; the version header is
added by the JsonRenderer for the top-level document only.
"""

import numpy as np

from . import encode, register_json_render_function
from ...certify import (
    ComponentWitness,
    DistinctnessVerdict,
    HypothesisCheck,
    InclusionCandidate,
    Inequality,
    MaxRankCertificate,
    MaxRankScope,
    PetriCertificate,
)
from ...construct import SpotLayout
from ...core import BnParams, RangeReport
from ...documents import FillingBundle
from ...series import LimitSeriesTable, LineBundleDescriptor
from ...tableau import ChainSpec, Filling, ValidationReport, WeightedFilling


@register_json_render_function(object)
def encode_plain(obj):
    if obj is None or isinstance(obj, (str, bool, int, float)):
        return obj
    raise TypeError(f"Cannot encode {type(obj).__name__} objects as JSON.")


@register_json_render_function(np.integer)
def encode_numpy_int(obj):
    return int(obj)


@register_json_render_function(list)
@register_json_render_function(tuple)
def encode_sequence(seq):
    return [encode(x) for x in seq]


@register_json_render_function(dict)
def encode_mapping(mapping):
    return {str(key): encode(val) for key, val in mapping.items()}


@register_json_render_function(BnParams)
def encode_params(p):
    return {"g": p.g, "r": p.r, "d": p.d}


@register_json_render_function(RangeReport)
def encode_ranges(report):
    return {
        "kind": "existence_ranges",
        "alpha": report.alpha,
        "beta": report.beta,
        "g": report.g,
        "e": report.e,
        "staircase": report.staircase,
        "separation": report.separation,
        "petri": report.petri,
    }


@register_json_render_function(Filling)
def encode_filling(f):
    return {
        "kind": "filling",
        "alpha": f.alpha,
        "beta": f.beta,
        "g": f.g,
        "cells": [
            {"row": row, "col": col, "index": index}
            for (row, col), index in f.boxes()
        ],
    }


@register_json_render_function(WeightedFilling)
def encode_weighted_filling(w):
    cells = [
        {"row": row, "col": col, "index": index, "weight": weight}
        for (row, col), items in w.entries.items()
        for index, weight in items
    ]
    return {
        "kind": "weighted_filling",
        "alpha": w.alpha,
        "beta": w.beta,
        "g": w.g,
        "cells": cells,
    }


@register_json_render_function(ChainSpec)
def encode_chain(chain):
    return {
        "kind": "chain",
        "g": chain.g,
        "special": [
            {"component": c, "order": order} for c, order in chain.special.items()
        ],
    }


@register_json_render_function(FillingBundle)
def encode_filling_bundle(bundle):
    doc = {
        "kind": "filling_bundle",
        "filling": encode(bundle.filling),
        "chain": encode(bundle.chain),
    }
    if bundle.params is not None:
        doc["params"] = encode(bundle.params)
    return doc


@register_json_render_function(ValidationReport)
def encode_report(report):
    violations = [
        {"kind": v.kind, "message": v.message, "cells": [list(c) for c in v.cells]}
        for v in report.violations
    ]
    return {
        "kind": "validation_report",
        "subject": report.subject,
        "valid": report.valid,
        "violations": violations,
    }


@register_json_render_function(SpotLayout)
def encode_layout(layout):
    return {
        "kind": "spot_layout",
        "alpha": layout.alpha,
        "beta": layout.beta,
        "e": layout.e,
        "t": layout.t,
        "l": layout.l,
        "eps": list(layout.eps),
        "a": list(layout.a),
        "b": list(layout.b),
        "source": layout.source,
    }


@register_json_render_function(LineBundleDescriptor)
def encode_bundle(bundle):
    if bundle.is_special:
        return {"kind": "special", "a": bundle.a, "b": bundle.b}
    return {"kind": "generic"}


@register_json_render_function(LimitSeriesTable)
def encode_series(table):
    return {
        "kind": "limit_series",
        "params": encode(table.p),
        "chain": encode(table.chain),
        "u": table.u.tolist(),
        "v": table.v.tolist(),
        "bundles": encode(table.bundles),
    }


@register_json_render_function(Inequality)
def encode_inequality(check):
    return {
        "label": check.label,
        "lhs": check.lhs,
        "relation": check.relation,
        "rhs": check.rhs,
    }


@register_json_render_function(PetriCertificate)
def encode_petri(cert):
    return {
        "kind": "petri_certificate",
        "params": encode(cert.p),
        "filling": encode(cert.f),
        "chain": encode(cert.chain),
        "products": [{"i": x.i, "j": x.j, "k": x.k} for x in cert.products],
        "checks": encode(cert.checks),
        "skipped": [{"step": step, "reason": reason} for step, reason in cert.skipped],
    }


@register_json_render_function(ComponentWitness)
def encode_witness(witness):
    return {
        "kind": "component_witness",
        "params": encode(witness.p),
        "layout": encode(witness.layout),
        "filling": encode(witness.filling),
        "chain": encode(witness.chain),
        "series": encode(witness.series),
        "certificate": encode(witness.certificate),
    }


@register_json_render_function(MaxRankCertificate)
def encode_maxrank(cert):
    steps = []
    for step in cert.steps:
        steps.append(
            {
                "k": step.k,
                "a": step.a,
                "t": step.t,
                "degree": step.degree,
                "p_threshold": step.p_threshold,
                "q_threshold": step.q_threshold,
                "pair": list(step.pair),
                "orders": list(step.orders),
                "rejected": [
                    {"pair": list(pair), "q_order": order}
                    for pair, order in step.rejected
                ],
            }
        )
    return {
        "kind": "maxrank_certificate",
        "r": cert.r,
        "g": cert.g,
        "d": cert.d,
        "scope": cert.scope,
        "filling": encode(cert.filling),
        "steps": steps,
        "checks": encode(cert.checks),
        "table_checks": encode(cert.table_checks),
        "divergences": [
            {"k": k, "pair": list(pair), "summed": summed, "table": table}
            for k, pair, summed, table in cert.divergences
        ],
    }


@register_json_render_function(MaxRankScope)
def encode_scope(scope):
    return {
        "kind": "maxrank_scope",
        "params": encode(scope.p),
        "scope": scope.kind,
        "r": scope.r,
    }


@register_json_render_function(HypothesisCheck)
def encode_hypothesis(check):
    return {
        "triple": list(check.triple),
        "case": check.case,
        "e": check.e,
        "twice_bound": check.twice_bound,
        "layout_bound": check.layout_bound,
        "holds": check.holds,
        "agrees": check.agrees,
    }


@register_json_render_function(DistinctnessVerdict)
def encode_verdict(verdict):
    return {
        "kind": "distinctness_verdict",
        "verdict": verdict.verdict.value,
        "p1": encode(verdict.p1),
        "p2": encode(verdict.p2),
        "A1": verdict.A1,
        "bound2": verdict.bound2,
        "hypothesis_report": encode(verdict.hypothesis_report),
        "reason": verdict.reason,
    }


@register_json_render_function(InclusionCandidate)
def encode_candidate(candidate):
    return {
        "kind": "inclusion_candidate",
        "family": candidate.family,
        "alpha1": candidate.alpha1,
        "loci": [list(locus) for locus in candidate.loci],
        "canonical": [list(locus) for locus in candidate.canonical],
        "status": candidate.status.value,
        "checks": encode(candidate.checks),
    }
