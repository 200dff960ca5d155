"""Power graphs, quotient power graphs, power-type graphs and order graphs
of the alternating groups, with exact component counts."""

from .census import closed_form_counts, procedure_count, structure_report, two_connected
from .errors import CapacityError, FormulaError, TheoremViolation
from .graphs import (
    build_order_graph,
    build_power_type_graph,
    build_proper_power_graph,
    build_quotient_power_graph,
    components,
)
from .partitions import PartitionType, type_power
from .perm import CyclicClass, Permutation, cyclic_class_of

__version__ = "0.1.0"
