"""Python access to the modelhom library."""

from ._core import (
    BudgetError,
    InputError,
    Model,
    OperationError,
    barcode,
    betti,
    distance,
    fixture,
    fixture_names,
    invert,
    load_model,
    parse_model,
    rank,
    search,
    verify,
)

__all__ = [
    "BudgetError",
    "InputError",
    "Model",
    "OperationError",
    "barcode",
    "betti",
    "distance",
    "fixture",
    "fixture_names",
    "invert",
    "load_model",
    "parse_model",
    "rank",
    "search",
    "verify",
]
