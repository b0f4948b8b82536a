"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HyperhopfError(Exception):
    """Base class; the CLI turns these into machine-readable error records."""

    def record(self) -> dict:
        out = {"error": type(self).__name__, "message": str(self)}
        for key, value in vars(self).items():
            if not key.startswith("_"):
                out[key] = value
        return out


# posets


class NotAPartialOrder(HyperhopfError, ValueError):
    def __init__(self, axiom: str, witness: tuple = ()):
        self.axiom = axiom
        self.witness = list(witness)
        super().__init__(f"relation is not {axiom}: witness {tuple(witness)}")


class NotComparable(HyperhopfError, ValueError):
    pass


class NoLeastElement(HyperhopfError, ValueError):
    pass


class NoGreatestElement(HyperhopfError, ValueError):
    pass


class NotBounded(HyperhopfError, ValueError):
    pass


class SizeLimitExceeded(HyperhopfError, ValueError):
    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what}: requested {requested} exceeds cap {cap}")


# hypertrees and partitions


class InvalidHypertree(HyperhopfError, ValueError):
    pass


class EdgeTooSmall(InvalidHypertree):
    pass


class VertexOutOfRange(InvalidHypertree):
    pass


class NotConnected(InvalidHypertree):
    pass


class HasCycle(InvalidHypertree):
    pass


class SizeMismatch(HyperhopfError, ValueError):
    """Two objects living on different vertex sets were compared."""


VertexCountMismatch = SizeMismatch


class InvalidPartition(HyperhopfError, ValueError):
    pass


# profiles, coproducts, characters


class InfeasibleProfile(HyperhopfError, ValueError):
    pass


class FactorizationFailed(HyperhopfError, RuntimeError):
    pass


class MissingTable(HyperhopfError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "missing table"


# hooked partitions and words


class MalformedWord(HyperhopfError, ValueError):
    pass


class LengthMismatch(HyperhopfError, ValueError):
    pass


class InconsistentLength(HyperhopfError, ValueError):
    pass
