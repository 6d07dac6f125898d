"""Topological polynomials of ordinary, ribbon and stranded tensor graphs."""
from .errors import (ContractError, GraphInputError, OperationError, OrientabilityError, ParseError,
                     StrategyMismatchError, StructureError, TensorPolyError)
from .graph import Multigraph, multivariate_tutte, tutte, tutte_delcontr, tutte_subset_sum
from .graphio import load, load_fixture, parse, report, serialize
from .polynomial import MultiPoly
from .ribbon import RibbonGraph, br_polynomial, euler_genus, multivariate_br, trace_boundaries
from .stranded import (DEFAULT_TEMPLATE, BubbleSet, Coloring, StrandedGraph, VertexTemplate, bubbles_by_color,
                       find_coloring)
from .tpoly import (TPolyRequest, hypervariate_t, multivariate_t, t_polynomial, t_polynomial_delcontr,
                    verify_delcontr)

__version__ = "0.1.0"
