"""Constants and utilities related to analyzer configuration."""

# Single source of truth for the report: registry names, display names, order
ANALYZER_CONFIG = {
    "vertex_classes": {"display_name": "Vertex Classes", "order": 0},
    "condition_l": {"display_name": "Condition (L)", "order": 1},
    "condition_k": {"display_name": "Condition (K)", "order": 2},
    "isolated_cycles": {"display_name": "Isolated Cycles", "order": 3},
    "lattice": {"display_name": "Hereditary Saturated Lattice", "order": 4},
    "purely_infinite_simple": {"display_name": "Purely Infinite Simple", "order": 5},
    "pis_quotients": {"display_name": "PIS Quotients", "order": 6},
    "graph_trace": {"display_name": "Graph Trace", "order": 7},
    "isolated_cycle_decomposition": {"display_name": "H0 Decomposition", "order": 8},
    "stable_rank": {"display_name": "Stable Rank", "order": 9},
}

# Derive ANALYZER_ORDER from ANALYZER_CONFIG
ANALYZER_ORDER = [
    (config["display_name"], key) for key, config in sorted(ANALYZER_CONFIG.items(), key=lambda x: x[1]["order"])
]


def display_name(analyzer: str) -> str:
    return ANALYZER_CONFIG.get(analyzer, {}).get("display_name", analyzer.replace("_", " ").title())
