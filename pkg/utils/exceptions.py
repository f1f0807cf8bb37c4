"""Typed errors raised across the recognition pipeline.

The command line maps them onto exit codes (see ``main.py``).
"""


class SunflowerError(Exception):
    pass


class GraphError(SunflowerError, ValueError):
    pass


class SchemaError(SunflowerError, ValueError):
    pass


class InvalidInstanceError(SunflowerError, ValueError):

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotSunflowerError(InvalidInstanceError):
    pass


class PQTreeError(SunflowerError, ValueError):
    pass


class PreconditionError(SunflowerError, ValueError):
    pass


class CapExceededError(SunflowerError):

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class InternalInvariantError(SunflowerError, RuntimeError):

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
