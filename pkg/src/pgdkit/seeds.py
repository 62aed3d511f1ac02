"""Curated block sets for small designs that have no algebraic construction.

These are seed transversal designs and witness designs for small
circulant concurrence targets, all re-verified by the test suite; the
point labels are 0-based.
"""

# Transversal design seeds keyed by (k, u, lambda).  TD_1(k, 2) for k >= 4
# cannot exist (it would need k - 2 orthogonal Latin squares of order 2),
# so lambda >= 2 seeds are the construction entry points for u = 2.
TD_SEEDS = {
    (4, 2, 2): [
        [0, 1, 2, 3], [0, 1, 3, 6], [0, 2, 5, 7], [0, 5, 6, 7],
        [1, 2, 4, 7], [1, 4, 6, 7], [2, 3, 4, 5], [3, 4, 5, 6],
    ],
    (4, 2, 3): [
        [0, 1, 2, 3], [0, 1, 3, 6], [0, 1, 6, 7], [0, 2, 3, 5],
        [0, 2, 5, 7], [0, 5, 6, 7], [1, 2, 3, 4], [1, 2, 4, 7],
        [1, 4, 6, 7], [2, 4, 5, 7], [3, 4, 5, 6], [3, 4, 5, 6],
    ],
    (5, 2, 2): [
        [0, 1, 2, 3, 4], [0, 1, 2, 8, 9], [0, 3, 4, 6, 7], [0, 6, 7, 8, 9],
        [1, 3, 5, 7, 9], [1, 4, 5, 7, 8], [2, 3, 5, 6, 9], [2, 4, 5, 6, 8],
    ],
    (5, 2, 3): [
        [0, 1, 2, 3, 4], [0, 1, 2, 3, 4], [0, 1, 7, 8, 9], [0, 2, 6, 8, 9],
        [0, 3, 6, 7, 9], [0, 4, 6, 7, 8], [1, 2, 5, 8, 9], [1, 3, 5, 7, 9],
        [1, 4, 5, 7, 8], [2, 3, 5, 6, 9], [2, 4, 5, 6, 8], [3, 4, 5, 6, 7],
    ],
    (6, 2, 2): [
        [0, 1, 2, 3, 4, 5], [0, 1, 2, 9, 10, 11], [0, 3, 4, 7, 8, 11],
        [0, 5, 7, 8, 9, 10], [1, 3, 5, 6, 8, 10], [1, 4, 6, 8, 9, 11],
        [2, 3, 6, 7, 10, 11], [2, 4, 5, 6, 7, 9],
    ],
    (6, 2, 3): [
        [0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 11], [0, 1, 5, 8, 9, 10],
        [0, 2, 5, 7, 9, 10], [0, 3, 7, 8, 10, 11], [0, 4, 7, 8, 9, 11],
        [1, 2, 6, 9, 10, 11], [1, 3, 5, 6, 8, 10], [1, 4, 6, 8, 9, 11],
        [2, 3, 6, 7, 10, 11], [2, 4, 5, 6, 7, 9], [3, 4, 5, 6, 7, 8],
    ],
}

# Witness block sets for specific circulant concurrence targets,
# keyed by (v, k, compressed first row).
WITNESS_BLOCKS = {
    (6, 3, (2, 1, 1, 0)): [
        [0, 1, 2], [0, 4, 5], [1, 3, 5], [2, 3, 4],
    ],
    (6, 3, (4, 2, 2, 0)): [
        [0, 1, 2], [0, 1, 5], [0, 2, 4], [0, 4, 5],
        [1, 2, 3], [1, 3, 5], [2, 3, 4], [3, 4, 5],
    ],
    (6, 4, (2, 1, 1, 2)): [
        [0, 1, 3, 4], [0, 2, 3, 5], [1, 2, 4, 5],
    ],
    (8, 4, (2, 1, 0, 1, 2)): [
        [0, 1, 4, 5], [1, 2, 5, 6], [2, 3, 6, 7], [0, 3, 4, 7],
    ],
    (8, 4, (3, 1, 1, 1, 3)): [
        [0, 1, 4, 5], [0, 2, 4, 6], [0, 3, 4, 7],
        [1, 2, 5, 6], [1, 3, 5, 7], [2, 3, 6, 7],
    ],
    (8, 4, (5, 2, 3, 2, 1)): [
        [0, 1, 2, 3], [0, 1, 2, 7], [0, 2, 4, 6], [0, 3, 5, 6], [0, 5, 6, 7],
        [1, 3, 4, 6], [1, 3, 5, 7], [1, 4, 6, 7], [2, 3, 4, 5], [2, 4, 5, 7],
    ],
    (8, 4, (6, 3, 2, 3, 2)): [
        [0, 1, 2, 3], [0, 1, 2, 7], [0, 1, 5, 6], [0, 3, 6, 7],
        [0, 3, 4, 5], [0, 4, 5, 7], [1, 2, 4, 5], [1, 3, 4, 6],
        [1, 4, 6, 7], [2, 3, 5, 6], [2, 3, 4, 7], [2, 5, 6, 7],
    ],
    (9, 3, (3, 1, 1, 0, 1)): [
        [0, 1, 2], [0, 4, 5], [0, 7, 8], [1, 3, 8], [1, 5, 6],
        [2, 3, 4], [2, 6, 7], [3, 5, 7], [4, 6, 8],
    ],
    (9, 3, (6, 2, 2, 0, 2)): [
        [0, 1, 2], [0, 1, 5], [0, 2, 7], [0, 4, 5], [0, 4, 8], [0, 7, 8],
        [1, 2, 6], [1, 3, 5], [1, 3, 8], [1, 6, 8], [2, 3, 4], [2, 3, 7],
        [2, 4, 6], [3, 4, 8], [3, 5, 7], [4, 5, 6], [5, 6, 7], [6, 7, 8],
    ],
    (12, 4, (4, 1, 1, 2, 1, 1, 0)): [
        [0, 1, 3, 4], [0, 2, 3, 5], [0, 7, 9, 10], [0, 8, 9, 11],
        [1, 2, 10, 11], [1, 4, 6, 9], [1, 5, 8, 10], [2, 4, 7, 11],
        [2, 5, 6, 9], [3, 6, 7, 10], [3, 6, 8, 11], [4, 5, 7, 8],
    ],
    (12, 6, (7, 3, 4, 3, 4, 3, 1)): [
        [0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 11], [0, 1, 5, 8, 9, 10],
        [0, 2, 4, 6, 8, 10], [0, 2, 5, 7, 9, 10], [0, 3, 7, 8, 10, 11],
        [0, 4, 7, 8, 9, 11], [1, 2, 6, 9, 10, 11], [1, 3, 5, 6, 8, 10],
        [1, 3, 5, 7, 9, 11], [1, 4, 6, 8, 9, 11], [2, 3, 6, 7, 10, 11],
        [2, 4, 5, 6, 7, 9], [3, 4, 5, 6, 7, 8],
    ],
    (12, 6, (6, 3, 3, 2, 3, 3, 2)): [
        [0, 1, 2, 3, 4, 8], [0, 1, 2, 6, 7, 11], [0, 1, 2, 5, 9, 10],
        [0, 3, 7, 8, 10, 11], [0, 4, 5, 7, 9, 11], [0, 4, 5, 6, 8, 10],
        [1, 3, 4, 5, 6, 11], [1, 3, 5, 7, 8, 9], [1, 6, 8, 9, 10, 11],
        [2, 3, 4, 9, 10, 11], [2, 3, 5, 6, 7, 10], [2, 4, 6, 7, 8, 9],
    ],
}

# Small 2-designs used as tensor bases.
TWO_DESIGNS = {
    (6, 3, 2): [
        [0, 1, 2], [0, 1, 3], [0, 2, 4], [0, 3, 5], [0, 4, 5],
        [1, 2, 5], [1, 3, 4], [1, 4, 5], [2, 3, 4], [2, 3, 5],
    ],
}
