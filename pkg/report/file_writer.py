"""
File writer for tuckerbound.

This module handles reading tensors and instances from JSON and writing
instances, decompositions, ratio reports and sweep CSVs. Output is
byte-identical across runs with the same inputs.
"""

import csv
import json
from pathlib import Path
from typing import Iterable, Optional, Tuple

from loguru import logger

from errors import InputError
from models import (
    CSV_FIELDS,
    ConstructionInstance,
    DenseTensor,
    RatioReport,
    TuckerDecomposition,
)


class FileWriter:
    """Writer for JSON and CSV artifacts."""

    def write_json(self, payload: dict, output_path: str) -> str:
        """
        Write a JSON object.

        Floats are written with Python's shortest round-trip repr, so every
        value reads back as the identical double.

        Args:
            payload: JSON-serializable object
            output_path: Path to output file

        Returns:
            Path to written file
        """
        text = json.dumps(payload, indent=2, allow_nan=False)
        with open(output_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text + "\n")
        logger.info("Wrote {}", output_path)
        return output_path

    def write_instance(self, inst: ConstructionInstance, output_path: str) -> str:
        return self.write_json(inst.to_dict(), output_path)

    def write_decomposition(self, d: TuckerDecomposition, summary: dict, output_path: str) -> str:
        payload = d.to_dict()
        payload["summary"] = summary
        return self.write_json(payload, output_path)

    def write_report(self, report: RatioReport, output_path: str) -> str:
        return self.write_json(report.to_dict(), output_path)

    def write_csv(self, reports: Iterable[RatioReport], output_path: str) -> str:
        """Write one CSV row per report, header first."""
        with open(output_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_FIELDS)
            for report in reports:
                writer.writerow(report.to_csv_row())
        logger.info("Wrote {}", output_path)
        return output_path


def load_json(path: str) -> dict:
    """Read a JSON object, raising InputError when the content is malformed."""
    text = Path(path).read_text(encoding='utf-8')
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {path}: {e}") from e
    if not isinstance(payload, dict):
        raise InputError(f"Expected a JSON object in {path}")
    return payload


def load_tensor(path: str) -> Tuple[DenseTensor, Optional[dict]]:
    """
    Read a tensor file.

    Accepts either a bare tensor object {"shape", "data"} or an instance
    object {"tensor", "metadata"}.

    Returns:
        The tensor and the instance metadata (None for a bare tensor)
    """
    payload = load_json(path)
    if "tensor" in payload:
        return DenseTensor.from_dict(payload["tensor"]), payload.get("metadata")
    return DenseTensor.from_dict(payload), None
