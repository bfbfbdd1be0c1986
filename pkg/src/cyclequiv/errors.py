"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Matrix or cycle shapes do not fit the requested operation."""


class FieldMismatchError(ValueError):
    """Operands live over different scalar fields."""


class NotInvertibleError(ValueError):
    """A square matrix required to be invertible is singular."""


class InconsistentSystemError(ValueError):
    """An exact linear solve has no solution."""


class ParseError(ValueError):
    """A document or scalar literal could not be parsed."""


class InternalInvariantError(RuntimeError):
    """A structural invariant that should hold by construction failed.

    Raised instead of silently continuing; seeing this means a bug, never
    bad user input.
    """
