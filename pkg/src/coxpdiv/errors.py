"""Exception taxonomy shared by every module.

All domain failures derive from :class:`DomainError` so that callers (and the
CLI) can distinguish "the input is mathematically unsuitable" (exit code 1)
from "the input could not even be read" (:class:`ParseError`, exit code 2).
"""


class DomainError(Exception):
    """A structurally valid input that violates a mathematical precondition."""


class NotSurjective(DomainError):
    """A lattice map that was required to be surjective is not."""


class InconsistentSequence(DomainError):
    """Maps handed in as part of an exact sequence do not satisfy its identities."""


class DimensionMismatch(DomainError):
    """Operands live in different ambient spaces."""


class OriginNotContained(DomainError):
    """Polyhedral duality was requested for a polyhedron not containing 0."""


class NotConcave(DomainError):
    """A fanwise-linear function fails the concavity test."""


class NotSimplicial(DomainError):
    """A fan has a maximal cone whose rays are linearly dependent."""


class RaysDoNotSpan(DomainError):
    """The rays of a fan do not generate the ambient lattice up to finite index."""


class TorsionClassGroup(DomainError):
    """The divisor class group has torsion; only free class groups are supported."""


class NotComplete(DomainError):
    """An operation requiring a complete fan was called on a non-complete one."""


class NotSurface(DomainError):
    """A surface-only operation was called on a variety of different dimension."""


class NotBasis(DomainError):
    """The selected divisor classes do not form a basis of the class group."""


class ConeNotInFan(DomainError):
    """A cone was referenced that is not a face of the given fan."""


class NotRefinement(DomainError):
    """A fan expected to refine another one does not."""


class Infeasible(DomainError):
    """A linear program has an empty feasible region."""


class Unbounded(DomainError):
    """A linear program is unbounded below."""


class NotEffective(DomainError):
    """A divisor class lies outside the effective cone."""


class NotDelPezzo(DomainError):
    """The anticanonical class is not ample."""


class DimensionUnsupported(DomainError):
    """The requested computation is only implemented in low dimensions."""


class SectionInvalid(DomainError):
    """A user-supplied section does not split the projection."""


class ParseError(Exception):
    """An input document is syntactically or structurally malformed."""
