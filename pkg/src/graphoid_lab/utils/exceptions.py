"""
Custom exceptions for Graphoid Lab
"""

from typing import Optional


class GraphoidLabError(Exception):
    """Base exception for all Graphoid Lab errors"""

    def __init__(self, message: str, exit_code: int = 2):
        super().__init__(message)
        self.exit_code = exit_code


class ConfigurationError(GraphoidLabError):
    """Raised when there's a configuration error"""

    def __init__(self, message: str):
        super().__init__(f"Configuration error: {message}")


class InvalidTripletError(GraphoidLabError):
    """Raised when the sets of a triplet overlap or leave the universe"""

    def __init__(self, message: str, triplet: Optional[str] = None):
        if triplet:
            full_message = f"Invalid triplet {triplet}: {message}"
        else:
            full_message = f"Invalid triplet: {message}"
        super().__init__(full_message)
        self.triplet = triplet


class CapacityError(GraphoidLabError):
    """Raised when an enumeration would exceed a configured cap"""

    def __init__(self, message: str, limit: Optional[int] = None):
        if limit is not None:
            full_message = f"Capacity exceeded: {message} (limit: {limit})"
        else:
            full_message = f"Capacity exceeded: {message}"
        super().__init__(full_message)
        self.limit = limit


class DomainError(GraphoidLabError):
    """Raised when variables or values fall outside a distribution's domain"""

    def __init__(self, message: str):
        super().__init__(f"Domain error: {message}")


class ZeroEvidenceError(GraphoidLabError):
    """Raised when conditioning on an event of probability zero"""

    def __init__(self, message: str, evidence: Optional[str] = None):
        if evidence:
            full_message = f"Zero-probability evidence {evidence}: {message}"
        else:
            full_message = f"Zero-probability evidence: {message}"
        super().__init__(full_message)
        self.evidence = evidence


class RegularityError(GraphoidLabError):
    """Raised when a Gaussian model is not regular or a block is singular"""

    def __init__(self, message: str):
        super().__init__(f"Regularity error: {message}")


class ModelLoadError(GraphoidLabError):
    """Raised when an input file cannot be turned into a model"""

    def __init__(self, message: str, path: Optional[str] = None):
        if path:
            full_message = f"Failed to load {path}: {message}"
        else:
            full_message = f"Failed to load model: {message}"
        super().__init__(full_message)
        self.path = path


class InputError(GraphoidLabError):
    """Raised for malformed orderings, arguments and other user input"""

    def __init__(self, message: str, field: Optional[str] = None):
        if field:
            full_message = f"Input error in {field}: {message}"
        else:
            full_message = f"Input error: {message}"
        super().__init__(full_message)
        self.field = field
