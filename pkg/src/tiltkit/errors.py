"""Exceptions shared across the toolkit."""


class TiltkitError(Exception):
    """Base class for all toolkit errors."""


class NonAdmissible(TiltkitError):
    """The relation ideal is not admissible (no power of the arrow ideal dies)."""


class MalformedRelation(TiltkitError):
    """A relation has non-parallel terms, short paths, or zero coefficients."""


class NotSplit(TiltkitError):
    """End(M)/rad has a simple factor of dimension > 1 over the rationals."""


class DecompositionStall(TiltkitError):
    """The seeded Fitting strategy failed within its retry budget."""


class UnsupportedAlgebra(TiltkitError):
    """An enumeration method was asked for an algebra outside its scope."""


class ActionsDontCommute(TiltkitError):
    """A left and a right operator of a bimodule fail to commute."""


class RelationViolated(TiltkitError):
    """An algebra relation acts as a nonzero operator."""


class AmbiguousBasis(TiltkitError):
    """A basis vector is not homogeneous for the idempotent decomposition."""


class NotProjectiveComponents(TiltkitError):
    """A complex operation required projective components."""
