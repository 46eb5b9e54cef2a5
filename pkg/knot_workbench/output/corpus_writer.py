"""Module for writing curve lists in the Gauss-code text format."""

import json
from collections.abc import Iterable
from pathlib import Path

from ..curves.curve_core import KnotProjection
from ..util.logger_config import logger


def format_curve(projection: KnotProjection) -> str:
    """One line: the JSON form, then the readable code and signs as a comment."""
    if projection.is_trivial:
        return "O"
    return f"{json.dumps(projection.to_json())}  # {projection}"


def generate_file_txt_for_corpus(
    curves: Iterable[KnotProjection], output_path: str | Path, header: str = ""
) -> Path:
    """Generate a text file with one curve per line, readable by `read_gauss_file`.

    Args:
        curves: Projections to write
        output_path: File to write
        header: Comment placed on the first line

    Returns:
        Path of the written file
    """
    target = Path(output_path)
    target.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(target, "w", encoding="utf-8") as file:
        if header:
            file.write(f"# {header}\n")
        for projection in curves:
            file.write(format_curve(projection) + "\n")
            count += 1
    logger.info(f"{count} curves written to: {target}")
    return target
