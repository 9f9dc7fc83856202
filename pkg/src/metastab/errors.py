"""Exception hierarchy.

Every domain failure raised by the library derives from `MetastabError`; the
CLI maps those to exit status 1 and everything else (bad JSON, missing keys)
to exit status 2.
"""


class MetastabError(Exception):
    """Base class for domain errors."""


class InvalidPolynomial(MetastabError, ValueError):
    pass


class InvalidRoot(MetastabError, ValueError):
    pass


class RankMismatch(MetastabError, ValueError):
    pass


class SingularPoint(MetastabError, ValueError):
    pass


class Unsupported(MetastabError, NotImplementedError):
    pass


class DegenerateInput(MetastabError, ValueError):
    pass


class InvalidParameter(MetastabError, ValueError):
    """A class parameter failed validation; `errors` lists every violation."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class NoCorrespondence(MetastabError, ValueError):
    pass


class NotEquiSingular(MetastabError, ValueError):
    pass


class SchemaError(ValueError):
    """Input that does not have the documented JSON shape (not a domain error)."""
