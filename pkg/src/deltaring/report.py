"""Check reports: verdicts plus re-checkable element witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """One labelled element taking part in a counterexample."""

    role: str
    element: int
    display: str

    def to_json(self) -> dict:
        return {"role": self.role, "element-index": int(self.element), "display": self.display}


@dataclass
class CheckReport:
    """Outcome of a predicate or per-ring theorem check.

    For a false verdict of a universally quantified class the witness list is
    non-empty and every entry can be re-verified by direct table arithmetic.
    """

    subject: str
    predicate: str
    verdict: bool
    witness: list[Witness] = field(default_factory=list)
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "predicate": self.predicate,
            "verdict": bool(self.verdict),
            "witness": [w.to_json() for w in self.witness],
            "notes": self.notes,
        }

    def __str__(self) -> str:
        head = f"{self.predicate}({self.subject}) = {str(self.verdict).lower()}"
        if self.witness:
            parts = ", ".join(f"{w.role}={w.display}" for w in self.witness)
            head += f"  [{parts}]"
        if self.notes:
            head += f"  ({self.notes})"
        return head
