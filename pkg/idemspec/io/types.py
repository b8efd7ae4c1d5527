from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from idemspec.constants import BlockKind, CheckStatus


@dataclass
class Atom:
    text: str
    line: int
    column: int


@dataclass
class Block:
    kind: BlockKind
    name: str
    fields: Dict[str, List[List[Any]]] = field(default_factory=dict)
    over: Optional[str] = None
    line: int = 0
    column: int = 0


@dataclass
class Document:
    blocks: List[Block] = field(default_factory=list)
    objects: Dict[str, Any] = field(default_factory=dict)

    def get(self, name: str):
        return self.objects[name]

    def of_kind(self, kind: BlockKind) -> Dict[str, Any]:
        return {b.name: self.objects[b.name] for b in self.blocks if b.kind == kind}


@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    reason: Optional[str] = None
    witness: Tuple[Any, ...] = ()
    seconds: float = 0.0
    expected: CheckStatus = CheckStatus.PASS

    def to_dict(self):
        return {
            "name": self.name,
            "status": self.status.value,
            "expected": self.expected.value,
            "reason": self.reason,
            "witness": [str(w) for w in self.witness],
            "seconds": round(self.seconds, 4),
        }


@dataclass
class VerificationReport:
    suite: str
    results: List[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.status != CheckStatus.FAIL for r in self.results)

    def counts(self) -> Dict[str, int]:
        out = {status.value: 0 for status in CheckStatus}
        for r in self.results:
            out[r.status.value] += 1
        return out

    def to_dict(self):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "seconds": round(self.seconds, 4),
            "results": [r.to_dict() for r in self.results],
        }
