# ruff: noqa: E501

# CLI
PROG_DESCRIPTION = "Strategic classification lab: build fixtures, measure dimensions, run learners against agents."

COMMAND_HELP = {
    "construct": "Write a named construction's graph, class and manifest files.",
    "dims": "Report VC and Littlestone dimensions of a class and, with a graph, of its induced class.",
    "run": "Run one learner on one fixture for every seed and write transcripts.",
    "matrix": "Sweep learners x settings over seeds; write an aggregated CSV with pass/fail columns.",
    "learn-graph": "Learn out-neighborhoods of a fixture's true graph from simulated clicks.",
}

# Online learners need a feedback setting; batch learners need a sample size.
ONLINE_LEARNERS = {
    "soa": "Standard Optimal Algorithm played as-is (ignores manipulation).",
    "halving": "Halving played as-is (ignores manipulation).",
    "red2fi": "Reduction to online learning, fully informative feedback, inner SOA.",
    "red2pmf": "Reduction to online learning, post-manipulation feedback, inner SOA.",
    "ug-online": "Unknown-graph online learner (x_t disclosed first).",
    "ug-online-pair": "Unknown-graph online learner fed (x_t, v_t) after the round.",
    "mw-agnostic-fi": "Hedge over the expert cover of the fully informative reduction.",
}

PAC_LEARNERS = {
    "erm": "Strategic ERM under the known graph.",
    "ug-rel": "Unknown graph, realizable: consistent pair of least empirical degree.",
    "ug-agn": "Unknown graph, agnostic: proxy-loss graph, then strategic ERM.",
    "neighborlearn": "Neighborhood learning from full-probe click rounds.",
}

CONSTRUCTIONS = {
    "binrep": "Binary-representation fixture (params d, k; k a power of two).",
    "star": "Stars with singleton hypotheses over leaves (params d, k).",
    "ug-pac-lb": "Unknown-graph PAC lower-bound blocks (param n, optional i_star).",
    "ug-online-lb": "Unknown-graph online lower-bound columns (param n).",
    "chain": "A -> B -> C_i chain class (param n).",
    "random": "Seeded random realizable fixture (params n, k, class_size, seed; optional graphs, graph_shift).",
}

CONSTRUCTION_PARAMS = {
    "binrep": ("d", "k"),
    "star": ("d", "k"),
    "ug-pac-lb": ("n",),
    "ug-online-lb": ("n",),
    "chain": ("n",),
    "random": ("n", "k", "class_size", "seed"),
}

SOURCES_HELP = "Agent source: 'iid' or an adversary (fi-binrep, pmf-star, ug-online-lb, ug-chain, agn-contrarian)."
SETTING_HELP = "Feedback setting: fi, pmf-x, pmf-v, ug, ug-pair."
TIE_BREAK_HELP = "Agent tie-breaking: lexmin, uniform:<seed> or scripted:<i>,<j>,..."
NOISE_HELP = "PAC only: probability mass moved onto label-flipped agents (0 to 1)."
EPSILON_HELP = "PAC only: slack added to the exact-loss ceilings."

# Exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ASSERTION_FAILED = 2
