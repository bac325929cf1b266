from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Window:
    """Closed integer interval ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def widen(self, margin: int) -> "Window":
        return Window(self.lo - margin, self.hi + margin)

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}


def as_window(w) -> Window:
    if isinstance(w, Window):
        return w
    lo, hi = w
    return Window(int(lo), int(hi))
