"""
Verification reports for tuckerbound.

This module handles bound and ratio computations and writing their
results to JSON and CSV files.
"""

from .verifier import (
    OracleResult,
    axis_aligned_oracle,
    ratio_report,
    svd_truncation_error,
    tail_energy_bound,
)
from .file_writer import FileWriter, load_json, load_tensor

__all__ = [
    'OracleResult',
    'axis_aligned_oracle',
    'ratio_report',
    'svd_truncation_error',
    'tail_energy_bound',
    'FileWriter',
    'load_json',
    'load_tensor',
]
