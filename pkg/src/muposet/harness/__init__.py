from .campaigns import (
    LEMMA_PROPERTIES,
    Check,
    default_jobs,
    run_campaign,
    verify_basis,
    verify_conjecture1,
    verify_conjecture2,
    verify_lemmas,
    verify_theorem4,
    verify_unbounded,
)
from .report import (
    Mismatch,
    PropertyTally,
    ReportFormat,
    VerificationReport,
    decode_report,
    encode_report,
    render_report,
    report_to_csv,
    report_to_text,
)

__all__ = [
    "LEMMA_PROPERTIES",
    "Check",
    "Mismatch",
    "PropertyTally",
    "ReportFormat",
    "VerificationReport",
    "decode_report",
    "default_jobs",
    "encode_report",
    "render_report",
    "report_to_csv",
    "report_to_text",
    "run_campaign",
    "verify_basis",
    "verify_conjecture1",
    "verify_conjecture2",
    "verify_lemmas",
    "verify_theorem4",
    "verify_unbounded",
]
