"""Exception types shared across the package.

The split mirrors the harness exit-code contract: format problems are input
errors, class violations mean the graph is provably outside the class the
caller claimed, and structural-assumption failures flag a graph that is in
class but fails a property every in-class graph is supposed to have.  The
last kind is the interesting one: it either exposes a bug or a genuine
counterexample, and the harness records it instead of guessing which.
"""

from __future__ import annotations


class FiveringError(Exception):
    """Base class for everything raised deliberately by this package."""


class GraphFormatError(FiveringError):
    """Malformed graph input (graph6/DIMACS/JSON or construction data)."""


class PatternSizeError(FiveringError):
    """A pattern or isomorphism query exceeds the supported size."""


class SizeBoundError(FiveringError):
    """An exact oracle was asked about a graph above its size cap."""


class SearchBudgetError(FiveringError):
    """An exact search ran out of its node budget; the answer is unknown."""


class InvalidHoleError(FiveringError):
    """A vertex tuple does not induce the claimed hole or antihole."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class ClassViolationError(FiveringError):
    """The input graph is not in the hereditary class an operation requires."""

    def __init__(self, class_name: str, witness: tuple[int, ...] | None = None):
        super().__init__(f"graph is not {class_name}: witness {witness}")
        self.class_name = class_name
        self.witness = witness


class StructuralAssumptionError(FiveringError):
    """An in-class graph failed a property the theory guarantees.

    Carries a stable claim id so findings can be aggregated, plus the
    vertices that witness the failure.
    """

    def __init__(self, claim_id: str, witness: tuple[int, ...] | None = None,
                 detail: str = ""):
        msg = f"structural assumption {claim_id} failed"
        if witness is not None:
            msg += f" on vertices {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.claim_id = claim_id
        self.witness = witness
        self.detail = detail


class HypothesisNotApplicableError(FiveringError):
    """A lemma-shaped operation was invoked with its hypothesis absent."""


class PartialColoringError(FiveringError):
    """A full-coloring validation was handed a partial coloring."""

    def __init__(self, uncolored: tuple[int, ...]):
        super().__init__(f"vertices without a color: {uncolored}")
        self.uncolored = uncolored


class WalkStalledError(FiveringError):
    """A random membership walk reached a state with no legal single toggle."""
