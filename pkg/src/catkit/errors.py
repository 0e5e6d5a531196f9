"""Exception hierarchy shared by all checkers."""


class CatkitError(Exception):
    """Base class for every error raised by catkit."""


class InputError(CatkitError, ValueError):
    """Malformed input: bad indices, ragged tables, wrong witness shapes."""


class ResourceError(CatkitError):
    """A brute-force search or construction would exceed the size guard."""


class StructuralError(CatkitError):
    """A structure is internally inconsistent (e.g. eval fails its universal property)."""


class ConstructionError(InputError):
    """A model constructor cannot build the requested structure."""


class EnvironmentMappingError(CatkitError, KeyError):
    """An IMLL atom has no interpretation in the environment."""

    def __str__(self):
        return Exception.__str__(self)


class ModelCompletenessError(CatkitError, KeyError):
    """A sparse structure table lacks an entry that evaluation needs."""

    def __str__(self):
        return Exception.__str__(self)


class ParseError(InputError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class ProofError(InputError):
    """A proof rule was applied outside its side conditions."""

    def __init__(self, message, path):
        super().__init__(f"{message} (at node {path})")
        self.path = path
