"""Parity labelings of graphs: rna numbers, spectra and signed-graph balance.

Solver results are plain dicts with the same fields as the ``parsig`` CLI's
json-lines records.
"""

from ._core import (
    CapacityError,
    Error,
    Graph,
    InputError,
    MalformedRecordError,
    UnsupportedSizeError,
    adhika,
    closed_form_rna,
    enumerate_connected,
    family,
    induce_signs,
    is_balanced,
    parity_realization,
    proof_labeling,
    rna,
    rna_heuristic,
    scan,
    spectrum,
    verify,
)

__all__ = [
    "CapacityError",
    "Error",
    "Graph",
    "InputError",
    "MalformedRecordError",
    "UnsupportedSizeError",
    "adhika",
    "closed_form_rna",
    "enumerate_connected",
    "family",
    "induce_signs",
    "is_balanced",
    "parity_realization",
    "proof_labeling",
    "rna",
    "rna_heuristic",
    "scan",
    "spectrum",
    "verify",
]
