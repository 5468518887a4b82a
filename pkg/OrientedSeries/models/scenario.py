"""
Results of the scripted scenario corpus.
"""

from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field

from .certificate import InversionCertificate


class ScenarioVerdict(str, Enum):
    """Verdict of a scenario.

    FINDING marks a scenario whose checks contradict a literal claim of the
    underlying mathematics; the discrepancy is recorded, not adjudicated.
    """

    PASS = "pass"
    FAIL = "fail"
    FINDING = "finding"


class ScenarioResult(BaseModel):
    """Outcome of one scenario.

    Attributes:
        scenario_id: Registry identifier
        expected: Verdict the scenario is expected to reach
        observed: Verdict it reached
        summary: One-line description of what was checked
        artifacts: Rendered witnesses and verdicts, in insertion order
        certificates: Inversion certificates produced along the way
        notes: Findings and caveats
    """

    scenario_id: str
    expected: ScenarioVerdict
    observed: ScenarioVerdict
    summary: str
    artifacts: Dict[str, str] = Field(default_factory=dict)
    certificates: List[InversionCertificate] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @property
    def matches(self) -> bool:
        return self.observed == self.expected
