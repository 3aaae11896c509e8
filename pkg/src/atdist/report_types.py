"""Small shared result records used by every distance engine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OpCounts:
    remove: int = 0
    add: int = 0
    change: int = 0
    match: int = 0

    @property
    def total(self) -> int:
        return self.remove + self.add + self.change + self.match

    def percentages(self) -> dict[str, float]:
        """Each kind as a percentage of all operations (zeros when empty)."""
        total = self.total
        if total == 0:
            return {"remove": 0.0, "add": 0.0, "change": 0.0, "match": 0.0}
        return {
            "remove": 100.0 * self.remove / total,
            "add": 100.0 * self.add / total,
            "change": 100.0 * self.change / total,
            "match": 100.0 * self.match / total,
        }

    def to_json(self) -> dict[str, int]:
        return {"remove": self.remove, "add": self.add, "change": self.change, "match": self.match}

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "OpCounts":
        return cls(**counts)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.remove, self.add, self.change, self.match)


@dataclass
class MeasureResult:
    absolute: float
    normalized: float
    ops: OpCounts = field(default_factory=OpCounts)

    def to_json(self) -> dict:
        return {
            "absolute": self.absolute,
            "normalized": self.normalized,
            "ops": self.ops.to_json(),
        }
