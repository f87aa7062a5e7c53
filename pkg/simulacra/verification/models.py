from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from constants.common import VERDICT_FAIL, VERDICT_PASS


@dataclass
class Record:
    """
    One checked instance of a claim.

    `input`, `expected` and `actual` are plain strings (cone expressions, signatures or short
    verdicts such as "none") so that reports stay readable as JSON lines.
    """
    input: str
    expected: str
    actual: str
    witness: Optional[str] = None
    passed: bool = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    def serialize(self) -> Dict[str, Any]:
        retval = {"input": self.input, "expected": self.expected, "actual": self.actual}
        if self.witness is not None:
            retval["witness"] = self.witness
        return retval


@dataclass
class Report:
    claim: str
    records: List[Record] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def verdict(self) -> str:
        return VERDICT_PASS if self.passed else VERDICT_FAIL

    @property
    def failures(self) -> List[Record]:
        return [r for r in self.records if not r.passed]

    def add(self, record: Record) -> Record:
        self.records.append(record)
        return record

    def serialize(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "records": [r.serialize() for r in self.records],
            "elapsed_ms": self.elapsed_ms,
        }
