# flake8: noqa

from ._inequality import Inequality
from ._petri import (
    PetriProduct,
    PetriCertificate,
    petri_certificate,
    ComponentWitness,
    component_witness,
)
from ._maxrank import (
    EXACT_SQUARE,
    GENERIC_TAIL,
    EMBEDDED_SQUARE,
    corner_filling,
    section_orders,
    product_q_order,
    MaxRankStep,
    MaxRankCertificate,
    maxrank_m2_certificate,
    MaxRankScope,
    maxrank_scope,
)
from ._distinct import (
    Verdict,
    HypothesisCheck,
    DistinctnessVerdict,
    distinctness_check,
    confirm_distinct,
)
from ._inclusion import InclusionStatus, InclusionCandidate, inclusion_candidates
