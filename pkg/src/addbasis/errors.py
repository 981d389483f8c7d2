"""Exception taxonomy.

Three families, mirrored by the CLI exit codes and the HTTP status codes
of the service layer:

* ``InputError`` (exit 1, HTTP 400): the request itself is malformed —
  unparsable text, an invalid set description, a bad range.
* ``PreconditionError`` (exit 2, HTTP 422): the request is well formed but
  the operation's precondition does not hold (e.g. asking for the order of
  a set that is not a basis).
* ``LawViolation`` (exit 3, HTTP 500): an internal consistency law failed.
  These laws are theorems; a violation falsifies the implementation, never
  the mathematics, so it is always a bug.
"""


class AddBasisError(Exception):
    """Base class for every error raised by this package."""


class InputError(AddBasisError):
    pass


class InvalidDescription(InputError):
    """A raw set description violates its structural constraints."""


class InvalidRange(InputError):
    """An interval argument has lo > hi or is too small for the operation."""


class InvalidInput(InputError):
    """A scalar argument is out of its documented domain."""


class ParseError(InputError):
    """Unparsable textual input. Carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GenerationExhausted(InputError):
    """The random-basis retry budget ran out for the given configuration."""


class PreconditionError(AddBasisError):
    pass


class NotABasis(PreconditionError):
    pass


class NotASubset(PreconditionError):
    pass


class NotAMember(PreconditionError):
    pass


class EqualElements(PreconditionError):
    pass


class IdenticalSubsets(PreconditionError):
    pass


class EmptySet(PreconditionError):
    pass


class LawViolation(AddBasisError):
    pass
