from pathlib import Path
from typing import Iterable, Optional, Union
import csv
import io
import json
import math
import sys
from coherence_kit.core.types import Point, STATE_TOL
from coherence_kit.core.errors import InvalidState
from coherence_kit.core.qubit import BlochState


def parse_state(text: str, tol: float = STATE_TOL) -> BlochState:
    """Parse 'z,r' or 'z,r,theta', checking the sphere bound against ``tol``"""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3):
        raise InvalidState(f"state must be 'z,r' or 'z,r,theta', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise InvalidState(f"state has a non-numeric coordinate: {text!r}")
    if not all(math.isfinite(v) for v in values):
        raise InvalidState(f"state has a non-finite coordinate: {text!r}")
    return BlochState.checked(*values, tol=tol)


def state_list(s: BlochState) -> list[float]:
    return [s.z, s.r, s.theta]


def format_float(x: float) -> str:
    return format(x, ".17g")


def points_csv(points: Iterable[Point]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["z", "r"])
    for z, r in points:
        writer.writerow([format_float(float(z)), format_float(float(r))])
    return buffer.getvalue()


def dumps_json(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def emit(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write to path, or to stdout when no path is given"""
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text, encoding="utf-8")
