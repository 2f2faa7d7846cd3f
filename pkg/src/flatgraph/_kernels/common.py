"""Status codes and result record shared by the span-loop backends."""

from dataclasses import dataclass

FOUND = 0
FRINGE_EMPTY = 1
COUNT_EXHAUSTED = 2
MALFORMED = 3
TREE_FULL = 4
FRINGE_FULL = 5

STATUS_NAMES = {
    FOUND: "found",
    FRINGE_EMPTY: "fringe-empty",
    COUNT_EXHAUSTED: "count-exhausted",
    MALFORMED: "malformed",
    TREE_FULL: "tree-full",
    FRINGE_FULL: "fringe-full",
}


@dataclass
class SpanStats:
    """How a spanning-search loop ended.

    steps counts loop iterations that consumed the termination count;
    fringe_peak is the largest fringe length observed; descent_ok is False
    only if some tree descent ran out of its own count (a corrupt tree).
    """

    status: int
    steps: int
    count_left: int
    fringe_peak: int
    descent_ok: bool

    @property
    def status_name(self) -> str:
        return STATUS_NAMES.get(self.status, str(self.status))
