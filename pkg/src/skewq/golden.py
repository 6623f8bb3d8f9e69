"""Printed (A^2)* matrices and the theta bases they are written in.

Rows follow the level-2 basis, columns the level-1 basis.  Level-2 basis
elements carry an explicit scalar, e.g. ``(I, "az")`` stands for i*az.
"""
from __future__ import annotations

from .scalars import I

PRINTED_D2 = {
    "QS1": [
        [ 0,  1,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0],
        [ 0,  1, -1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1],
        [-1,  0,  0,  1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0, -1,  0,  0,  0],
        [ 1,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  1,  0,  0,  0],
        [ 0,  2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1, -1,  0,  0, -1,  0,  0,  0,  0],
        [ 1,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0],
        [ 1,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  1,  0,  0,  0],
        [ 0,  0,  2,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  1,  0,  0,  0,  0],
        [ 0,  1,  1,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0],
        [ 0,  1, -1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0,  0,  0,  1,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  1,  1,  0,  0,  1,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  1, -1,  0,  0,  0,  1,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1],
        [ 0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  1,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0, -1,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0, -1,  0,  0,  0],
        [ 0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  1,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0, -1, -1,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0, -1, -1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0, -1,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  1,  0,  0,  1,  1,  0,  0,  1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  1,  1,  0,  0, -1,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  1, -1,  0,  0,  0, -1,  0,  1,  0,  0,  0,  1,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0, -1],
    ],
    "QS2": [
        [ 0, -1,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0],
        [ 0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1],
        [-1,  0,  0,  1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0],
        [-1,  0,  0,  1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0, -1,  0,  0,  0],
        [ 0,  2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  1,  0,  0,  1,  0,  0,  0,  0],
        [ 1,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0],
        [ 1,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  1,  0,  0,  0],
        [ 0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  1,  0,  0,  0,  0],
        [ 0,  1, -1,  0,  0,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  1, -1,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  0,  0, -1,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1],
        [ 0,  0,  0,  0,  0, -1,  1,  0,  0,  1,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0,  0,  1,  0,  0],
        [ 0,  0,  0,  0,  0,  1, -1,  0,  0,  0,  1,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1],
        [ 0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0, -1,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0, -1,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  1,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  2,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1, -1,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  1,  0,  0, -1, -1,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  1,  0,  0,  0],
        [ 0,  0,  0,  0, -1,  0,  0,  1,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0, -1,  0, -1,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0, -1,  0,  0,  1,  1,  0,  0, -1,  0,  0,  0,  0],
        [ 0,  0,  0,  0,  0,  1, -1,  0,  0,  1,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0,  0, -1,  0,  0],
        [ 0,  0,  0,  0,  0, -1,  1,  0,  0,  0,  1,  0,  1,  0,  0,  0, -1,  0,  0,  0,  0,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0, -1],
    ],
    "QS3": [
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0, -1,  0,  1,  0, -1,  0,  1,  0, -1,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  1, -1,  0,  0,  1, -1,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0,  1, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0, -1,  0,  1,  0, -1,  0,  1,  0,  1,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  1,  0,  0,  1,  1,  0,  0,  1, -1,  0,  0, -1],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0,  1, -1,  0,  0, -1,  1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  1,  0,  1,  0, -1,  0, -1,  0,  1,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1, -1,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0, -1,  1,  0,  0,  1, -1,  0,  0,  1, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  1,  0,  1,  0, -1,  0, -1,  0, -1,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  1,  0,  0,  1, -1,  0,  0, -1, -1,  0,  0, -1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1,  1,  0,  0,  1,  1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0,  1,  0, -1,  0, -1,  0,  1,  0, -1,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1, -1,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  1,  0,  1,  0, -1,  0, -1,  0,  1,  0,  1,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1, -1,  0,  0, -1,  1,  0,  0,  1, -1,  0,  0, -1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0, -1, -1,  0,  0,  1,  1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0, -1,  0, -1,  0, -1,  0, -1,  0,  1,  0,  1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  1,  0,  0, -1,  1,  0,  0, -1, -1,  0,  0,  1],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0, -1, -1,  0,  0, -1, -1,  0,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0, -1,  0, -1,  0, -1,  0, -1,  0, -1,  0, -1,  0],
        [ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1, -1,  0,  0, -1, -1,  0,  0, -1, -1,  0,  0, -1],
    ],
}

# (scalar, path label) per level-2 basis element, grouped per relation in order
_ONE = 1

THETA2 = {
    "QS1": [
        [(_ONE, "ay"), (I, "az"), (I, "aw"), (_ONE, "by"), (I, "bz"), (I, "bw")],
        [(_ONE, "ay"), (I, "az"), (I, "aw"), (_ONE, "by"), (I, "bz"), (I, "bw")],
        [(_ONE, "cy"), (I, "cz"), (I, "cw"), (_ONE, "dy"), (I, "dz"), (I, "dw")],
        [(_ONE, "cy"), (I, "cz"), (I, "cw"), (_ONE, "dy"), (I, "dz"), (I, "dw")],
    ],
    "QS2": [
        [(_ONE, "ay"), (_ONE, "az"), (I, "aw"), (_ONE, "by"), (_ONE, "bz"), (I, "bw")],
        [(_ONE, "ay"), (_ONE, "az"), (I, "aw"), (_ONE, "by"), (_ONE, "bz"), (I, "bw")],
        [(_ONE, "cy"), (_ONE, "cz"), (I, "cw"), (_ONE, "dy"), (_ONE, "dz"), (I, "dw")],
        [(_ONE, "cy"), (_ONE, "cz"), (I, "cw"), (_ONE, "dy"), (_ONE, "dz"), (I, "dw")],
    ],
    "QS3": [
        [(_ONE, f"a{s}y"), (_ONE, f"a{s}z"), (_ONE, f"a{s}w")] for s in range(1, 9)
    ],
}

# level-1 basis as (u, gamma) label pairs
_XYZW = ["x", "y", "z", "w"]
_CHAIN = [(u, g) for g in _XYZW for u in _XYZW]

THETA1 = {
    "QS1": [("a", "a"), ("b", "a"), ("a", "b"), ("b", "b"),
            ("c", "c"), ("d", "c"), ("c", "d"), ("d", "d")] + _CHAIN,
    "QS2": [("a", "a"), ("b", "a"), ("a", "b"), ("b", "b"),
            ("c", "c"), ("d", "c"), ("c", "d"), ("d", "d")] + _CHAIN,
    "QS3": [(f"a{s}", f"a{s}") for s in range(1, 9)] + _CHAIN,
}

EXPECTED_RANK = {"QS1": 15, "QS2": 20, "QS3": 15}

TABLE1 = {
    "QS1": {"dims": (4, 24, 24), "rank_d1": 3, "rank_d2": 15, "hh": (1, 6, 9)},
    "QS2": {"dims": (4, 24, 24), "rank_d1": 3, "rank_d2": 20, "hh": (1, 1, 4)},
    "QS3": {"dims": (10, 24, 24), "rank_d1": 9, "rank_d2": 15, "hh": (1, 0, 9)},
}
