from .schema import DocumentError, load_model, parse_model_document
from .report import emit_json, emit_text, parse_report, report_to_dict

__all__ = [
    "DocumentError",
    "load_model",
    "parse_model_document",
    "emit_json",
    "emit_text",
    "parse_report",
    "report_to_dict",
]
