from .graph import (
    Graph,
    build_graph,
    connected_components,
    empty_graph,
    induced_subgraph,
)
from .sunflower import (
    SunflowerInstance,
    ValidationReport,
    Violation,
    graphs_containing,
    instance_order,
    restrict_instance,
    shared_graph,
    split_by_components,
    union_graph,
    validate_sunflower,
)
