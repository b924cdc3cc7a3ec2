from .construction import (
    LUTTINGER_ORDER,
    REDUCTION_SCHEDULE,
    ConstructionReport,
    ConstructionStage,
    ReductionLedger,
    ReductionStep,
    RunResult,
    reduce_to_one_torus,
    run_cp2k3,
    single_torus_family,
    six_tori_construction,
    torus_name,
)
from .family import (
    FamilyRow,
    FamilyTable,
    GluingData,
    build_family,
    canonical_gluing_data,
    shift_family,
)
from .plan import (
    ReverseEngineeringPlan,
    check_model,
    run_chain,
    sym2_model,
    sym2_plan,
)
from .report import (
    construction_summary,
    family_frame,
    format_h1,
    format_text,
    ledger_frame,
    manifolds_frame,
    seams_frame,
    to_json,
    write_report,
)

__all__ = [
    "ConstructionReport",
    "ConstructionStage",
    "FamilyRow",
    "FamilyTable",
    "GluingData",
    "LUTTINGER_ORDER",
    "REDUCTION_SCHEDULE",
    "ReductionLedger",
    "ReductionStep",
    "ReverseEngineeringPlan",
    "RunResult",
    "build_family",
    "canonical_gluing_data",
    "check_model",
    "construction_summary",
    "family_frame",
    "format_h1",
    "format_text",
    "ledger_frame",
    "manifolds_frame",
    "reduce_to_one_torus",
    "run_chain",
    "run_cp2k3",
    "seams_frame",
    "shift_family",
    "single_torus_family",
    "six_tori_construction",
    "sym2_model",
    "sym2_plan",
    "to_json",
    "torus_name",
    "write_report",
]
