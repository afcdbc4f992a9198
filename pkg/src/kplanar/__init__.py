"""Exact-arithmetic toolkit for k-planar graphs: drawings, constructions, bounds and certificates."""

from .bounds import BoundSpec, evaluate, table_report
from .constructions import ConstructionSpec, generate
from .discharging import build_ledger, charge_sum_check, density_formula_check, discharge_feasibility
from .drawing import DrawnGraph, compute_crossings, local_crossing_number, planarize
from .experiments import SamplingConfig, removal_audit, sample_induced
from .graph import Graph, girth

__version__ = "0.1.0"

__all__ = [
    "BoundSpec",
    "ConstructionSpec",
    "DrawnGraph",
    "Graph",
    "SamplingConfig",
    "build_ledger",
    "charge_sum_check",
    "compute_crossings",
    "density_formula_check",
    "discharge_feasibility",
    "evaluate",
    "generate",
    "girth",
    "local_crossing_number",
    "planarize",
    "removal_audit",
    "sample_induced",
    "table_report",
]
