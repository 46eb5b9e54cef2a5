"""Module for writing certificates and witnesses to JSON files."""

import json
from io import TextIOWrapper
from pathlib import Path
from typing import Any, cast

from ..util.logger_config import logger


def _write_json(data: Any, filename: Path) -> Path:
    filename.parent.mkdir(parents=True, exist_ok=True)
    with open(filename, "w", encoding="utf-8") as file:
        json.dump(data, cast(TextIOWrapper, file), indent=4, ensure_ascii=False)
    logger.info(f"JSON written to: {filename}")
    return filename


def generate_file_json_for_certificates(
    certificates: dict[str, Any], output_path: str | Path, filename: str = "certificates.json"
) -> Path:
    """Generate a JSON file holding a flushed certificate store.

    Args:
        certificates: Output of `CertificateStore.to_dict()`
        output_path: Directory where the file will be saved, or the file itself if it ends
            in `.json`
        filename: File name used when `output_path` is a directory

    Returns:
        Path of the written file
    """
    path = Path(output_path)
    target = path if path.suffix == ".json" else path / filename
    return _write_json(certificates, target)


def generate_file_json_for_witness(witness: dict[str, Any], output_path: str | Path) -> Path:
    """Generate a JSON file with one witness (or a NotFound record)."""
    return _write_json(witness, Path(output_path))
