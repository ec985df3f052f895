"""
Report Data Transfer Objects
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...constants import LAWS, VERDICT_FAILS, VERDICT_HOLDS


@dataclass
class LawCounterexample:
    """One failing law instance"""
    law: str
    polymaps: Tuple[str, ...]
    positions: Tuple[int, ...]
    left: str
    right: str

    def describe(self) -> str:
        cuts = ','.join(str(p) for p in self.positions)
        return (f"{self.law} fails for ({'; '.join(self.polymaps)}) at cuts ({cuts}): "
                f"{self.left} != {self.right}")


@dataclass
class AxiomReport:
    """Outcome of an exhaustive law check"""
    polycategory: str
    bound: int
    bound_relative: bool
    instances: Dict[str, int] = field(default_factory=dict)
    counterexamples: List[LawCounterexample] = field(default_factory=list)

    def __post_init__(self):
        for law in LAWS:
            self.instances.setdefault(law, 0)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def failing_laws(self) -> List[str]:
        return sorted({c.law for c in self.counterexamples}, key=LAWS.index)

    def evidence(self) -> List[str]:
        lines = [f"{law}: {self.instances[law]} instances" for law in LAWS]
        lines.extend(c.describe() for c in self.counterexamples)
        return lines


@dataclass
class CheckReport:
    """Generic pass/fail report with counted instances and named failures"""
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def evidence(self) -> List[str]:
        return [f"{self.name}: {self.checked} instances checked"] + list(self.failures)


@dataclass
class Decision:
    """A yes/no decision with canonically ordered evidence"""
    question: str
    holds: bool
    evidence: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    agreement: Optional[bool] = None
    witness: Optional[Tuple] = None

    @property
    def verdict(self) -> str:
        return VERDICT_HOLDS if self.holds else VERDICT_FAILS


@dataclass
class Report:
    """What a command prints: echo, verdict, evidence, bound notes"""
    command: str
    verdict: str
    evidence: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    value: Optional[str] = None

    def render(self) -> str:
        if self.value is not None:
            return self.value + '\n'
        lines = [f"command: {self.command}", f"verdict: {self.verdict}"]
        lines.extend(f"note: {note}" for note in self.notes)
        if self.evidence:
            lines.append('evidence:')
            lines.extend(f"  - {entry}" for entry in self.evidence)
        return '\n'.join(lines) + '\n'
