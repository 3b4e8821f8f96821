"""Expected values produced by the brute-force oracles in ``oracles.py`` and frozen.

``test_oracles.py`` recomputes each entry from scratch; every other test
compares the package against these numbers.
"""

# (instance, module) -> counts over all maps M -> M (x) H and all d x d matrices
COUNTS = {
    ("fix1", "M"): {"z1": 3, "c1": 3, "aut": 3, "h1": 1, "d1": 1, "group_z1": 3},
    ("kg_self", "M"): {"z1": 1, "c1": 1, "aut": 1, "h1": 1, "d1": 1, "group_z1": 1},
    ("f9_over_f3", "M"): {"z1": 4, "c1": 4, "aut": 8, "h1": 1, "d1": 1, "group_z1": 4},
}

# group side only: the module has too many maps for the direct search
GROUP_COUNTS = {
    ("fix1", "M2"): {"aut": 180, "group_z1": 30},
}

# (group, p) pairs whose dual passes every basis-level Hopf axiom in the oracle
GROUP_DUALS = [(g, p) for g in ("C2", "C3", "C4", "S3") for p in (2, 3, 5)]
