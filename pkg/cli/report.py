import pandas as pd

from models.report import VerificationReport


SIZE_COLUMNS = ["gate_index", "label", "states", "transitions"]


def size_table(report: VerificationReport) -> pd.DataFrame:
    """Per-gate automaton sizes as a DataFrame"""
    rows = [record.to_dict() for record in report.gate_sizes]
    return pd.DataFrame(rows, columns=SIZE_COLUMNS)


def render_report(report: VerificationReport, as_json: bool = False, show_sizes: bool = False) -> str:
    """Report text for stdout: key=value lines or JSON, optionally followed by the size trace"""
    text = report.to_json() if as_json else report.to_key_values()
    if show_sizes and report.gate_sizes:
        text += "\n\n" + size_table(report).to_string(index=False)
    return text
