from .lower_bounds import (
    binary_rep_construction,
    binary_rep_hubs,
    chain_construction,
    star_singletons,
    ug_online_lb_construction,
    ug_pac_lb_construction,
    ug_pac_lb_distribution,
)
from .models import AnyGraphClass, ColumnChoiceGraphClass, Fixture
from .random_fixtures import (
    corrupt_distribution,
    random_class,
    random_fixture,
    random_graph,
    random_graph_class,
    realizable_distribution,
    superset_decoy,
)

__all__ = [
    "AnyGraphClass",
    "ColumnChoiceGraphClass",
    "Fixture",
    "binary_rep_construction",
    "binary_rep_hubs",
    "chain_construction",
    "corrupt_distribution",
    "random_class",
    "random_fixture",
    "random_graph",
    "random_graph_class",
    "realizable_distribution",
    "star_singletons",
    "superset_decoy",
    "ug_online_lb_construction",
    "ug_pac_lb_construction",
    "ug_pac_lb_distribution",
]
