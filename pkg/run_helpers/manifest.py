import json
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from config import VERSION
from errors import UsageError


class RunManifest(BaseModel):
    """Everything needed to replay a run: `cli.py rerun --manifest report.json`."""

    command: str
    argv: List[str]
    parameters: Dict[str, Any]
    tol: Optional[float] = None
    seed: Optional[int] = None
    version: str = VERSION
    created: str = Field(
        default_factory=lambda: datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    )
    wall_times: Dict[str, float] = Field(default_factory=dict)


def load_manifest(path) -> RunManifest:
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"Could not read manifest {path}: {e}") from e

    # Reports embed their manifest under "manifest"
    data = data.get("manifest", data)
    try:
        return RunManifest.model_validate(data)
    except ValidationError as e:
        raise UsageError(f"{path} is not a run manifest: {e}") from e
