"""Indecomposable tournaments: intervals, critical vertices, census and checks."""

from .core import (
    Tournament,
    delete,
    dual,
    find_nontrivial_interval,
    induced,
    is_indecomposable,
    is_interval,
    make_tournament,
    relabel,
)
from .criticality import (
    analyze,
    critical_vertices,
    delete_one_noncritical,
    delete_two,
    extend_by_one,
    extend_by_two,
    f_value,
    indec_graph,
    outer_partition,
    strongly_critical,
)
from .enumeration import enumerate_census, filter_census
from .errors import (
    CapacityError,
    FalsificationError,
    IndecompError,
    ParseError,
    PreconditionError,
    TournamentError,
)
from .families import Family, FamilyKind, gen, recognize
from .formats import dumps, loads
from .kernels import BACKEND
from .morphisms import are_isomorphic, canonical_form, embeds
from .verify import run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacityError",
    "FalsificationError",
    "Family",
    "FamilyKind",
    "IndecompError",
    "ParseError",
    "PreconditionError",
    "Tournament",
    "TournamentError",
    "analyze",
    "are_isomorphic",
    "canonical_form",
    "critical_vertices",
    "delete",
    "delete_one_noncritical",
    "delete_two",
    "dual",
    "dumps",
    "embeds",
    "enumerate_census",
    "extend_by_one",
    "extend_by_two",
    "f_value",
    "filter_census",
    "find_nontrivial_interval",
    "gen",
    "indec_graph",
    "induced",
    "is_indecomposable",
    "is_interval",
    "loads",
    "make_tournament",
    "outer_partition",
    "recognize",
    "relabel",
    "run_all",
    "run_check",
    "strongly_critical",
]
