import json
from pathlib import Path

import numpy as np
import pandas as pd

from errors import UsageError

FORMAT_CHOICES = ["json", "csv"]
DEFAULT_FORMAT = "json"


def _plain(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return value


def write_report(path, report: dict, output_format: str = DEFAULT_FORMAT) -> Path:
    """
    JSON keeps the whole report. CSV writes the scalar fields as one row and the
    residual history, when there is one, next to it as <stem>_residuals.csv.
    """
    if output_format not in FORMAT_CHOICES:
        raise UsageError(
            f"Unknown output format: {output_format}. Choose from {FORMAT_CHOICES}"
        )
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    if output_format == "json":
        with open(path, "w") as f:
            json.dump({k: _plain(v) for k, v in report.items()}, f, indent=2)
            f.write("\n")
        return path

    scalars = {
        k: _plain(v)
        for k, v in report.items()
        if k not in ("manifest", "residual_history")
    }
    pd.DataFrame([scalars]).to_csv(path, index=False)
    history = report.get("residual_history") or []
    if history:
        pd.DataFrame(
            {"iteration": np.arange(len(history)), "relative_residual": history}
        ).to_csv(path.with_name(f"{path.stem}_residuals.csv"), index=False)
    return path


def write_eigenvalues_csv(path, eigenvalues) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame({"index": np.arange(len(eigenvalues)), "eigenvalue": eigenvalues}).to_csv(
        path, index=False
    )
    return path


def write_table_csv(path, frame: pd.DataFrame) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    return path
