"""
Run configuration for the ``ogsr`` command line.

A run is described by a JSON file validated into ``RunConfig``; command-line
flags then override individual fields.
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .models.specs import StructureConstantAlgebraSpec


class ConfigError(Exception):
    """Exception raised when a configuration cannot be loaded or validated.

    Attributes:
        message: What went wrong
        location: Dotted path of the offending field, if known
    """

    def __init__(self, message: str, location: Optional[str] = None):
        self.message = message
        self.location = location
        where = location or "<root>"
        super().__init__(f"config error at {where}: {message}")


class Command(str, Enum):
    AXIOMS = "axioms"
    INVERT = "invert"
    TOPOLOGY = "topology"
    SUITE = "suite"


class DirectionChoice(str, Enum):
    RIGHT = "right"
    LEFT = "left"
    BOTH = "both"


class RunConfig(BaseModel):
    """Everything a single ``ogsr`` command needs.

    Attributes:
        command: Subcommand to run
        ring: Ring selection string, e.g. ``series:8`` or ``padic:5,4``
        seminorm: Seminorm name; selects seminormed inversion when set
        x: Element literal to invert
        witness: Upper-bound witness literal for ordered inversion
        budget: Maximal number of series terms
        seed: Seed for every sampled check
        samples: Samples per axiom suite or law check
        direction: Power nesting for inversion
        family: Comparison-family literals (ordered mode)
        family_depth: Size of the default dyadic family when ``family`` is empty
        window_depth: Number of dyadic windows in the seminorm target
        op: Topology operation name
        opens: Basic-open literals for topology queries
        a: First element argument for topology queries
        b: Second element argument for topology queries
        terms: Explicit sequence terms for convergence queries
        sequence: Named generated sequence for convergence queries
        scenario_ids: Scenario ids to run; all when empty
        report: Path the report is written to
        algebra: Inline structure-constant table for ``algebra:inline``
    """

    command: Optional[Command] = None
    ring: Optional[str] = None
    seminorm: Optional[str] = None
    x: Optional[str] = None
    witness: Optional[str] = None
    budget: int = Field(default=64, ge=1)
    seed: int = 0
    samples: int = Field(default=1000, ge=1)
    direction: DirectionChoice = DirectionChoice.RIGHT
    family: List[str] = Field(default_factory=list)
    family_depth: int = Field(default=16, ge=0)
    window_depth: int = Field(default=8, ge=0)
    op: Optional[str] = None
    opens: List[str] = Field(default_factory=list)
    a: Optional[str] = None
    b: Optional[str] = None
    terms: List[str] = Field(default_factory=list)
    sequence: Optional[str] = None
    scenario_ids: List[str] = Field(default_factory=list)
    report: Optional[str] = None
    algebra: Optional[StructureConstantAlgebraSpec] = None

    model_config = ConfigDict(frozen=True, extra="forbid")

    def require(self, *names: str) -> None:
        """Raise ConfigError for the first listed field that is unset."""
        for name in names:
            if getattr(self, name) in (None, []):
                raise ConfigError(f"{name} is required for '{self.command.value}'", name)


def _location(error: Dict[str, Any]) -> str:
    return ".".join(str(part) for part in error.get("loc", ())) or "<root>"


def validate_config(data: Dict[str, Any]) -> RunConfig:
    """Validate a raw mapping into a RunConfig.

    Raises:
        ConfigError: With the location of the first validation error
    """
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigError(first["msg"], _location(first)) from e


def load_config(path: Optional[str] = None) -> RunConfig:
    """Load a JSON config file, or the defaults when no path is given.

    Raises:
        ConfigError: If the file is missing, not JSON or fails validation
    """
    if path is None:
        return RunConfig()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON in {path}: {e.msg} (line {e.lineno})")
    if not isinstance(data, dict):
        raise ConfigError("top level must be an object")
    return validate_config(data)


def apply_overrides(config: RunConfig, overrides: Dict[str, Any]) -> RunConfig:
    """Return a copy of ``config`` with the non-empty overrides applied and revalidated."""
    update = {k: v for k, v in overrides.items() if v is not None and v != []}
    merged = config.model_dump(exclude_unset=True)
    merged.update(update)
    return validate_config(merged)
