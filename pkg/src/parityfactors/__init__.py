"""f-factors, (g, f)-parity factors and the deficiency criteria that decide them."""

from .criteria import (
    CriterionReport,
    Witness,
    count_odd_components,
    disjoint_pairs,
    enumerate_h_functions,
    eta_niessen,
    eta_tutte,
    has_all_parity_factors_exhaustive,
    niessen_check,
    tutte_check,
)
from .errors import SizeGuardError
from .factor import (
    DegreeSpec,
    FactorSubgraph,
    GadgetGraph,
    Infeasible,
    brute_force_factor,
    build_f_factor_gadget,
    build_parity_gadget,
    find_f_factor,
    find_parity_factor,
    validate_factor,
)
from .graph import (
    Graph,
    GraphParseError,
    clique_minus_construction,
    complete_graph,
    connected_components,
    cycle_graph,
    degree,
    delete_vertices,
    edges_between,
    parse_edge_list,
    parse_graph6,
    petersen_graph,
    random_graph,
    to_edge_list,
    to_graph6,
)
from .matching import Matching, brute_force_maximum_matching, has_perfect_matching, maximum_matching
from .theorem import (
    ExperimentReport,
    HypothesisReport,
    check_nishimura_hypotheses,
    check_theorem14_hypotheses,
    extremal_remark,
    frontier_search,
    sample_h_and_verify,
)

__version__ = "0.1.0"
