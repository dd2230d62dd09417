"""Worked-example fixtures: quivers, algebras, representations and printed tables.

The quiver shapes of ``twoone``, ``qp4`` and ``ab0`` were fixed by checking
every candidate orientation against the tables below; see the README.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

from .fields import QQ, Field
from .generic import exchange_matrix
from .quiver import AlgebraBasis, Quiver, Relation, RelationSet, build_algebra
from .representation import Representation, regular_representation

Vector = Tuple[int, ...]


def _e(n: int, *terms: Tuple[int, int]) -> Vector:
    v = [0] * n
    for c, i in terms:
        v[i - 1] += c
    return tuple(v)


A2 = Quiver(2, [("a", 1, 2)])
A3 = Quiver(3, [("a", 1, 2), ("b", 2, 3)])
KRONECKER3 = Quiver(2, [("a", 1, 2), ("b", 1, 2), ("c", 1, 2)])
TWOONE = Quiver(3, [("a", 1, 2), ("b", 1, 2), ("c", 2, 3)])
QP4 = Quiver(4, [("a", 1, 4), ("b", 4, 3), ("c", 3, 1), ("x", 2, 1), ("y", 2, 3), ("z", 2, 4)])
QP4_RELATIONS = RelationSet((Relation.of("a*b"), Relation.of("b*c"), Relation.of("c*a")))
AB0 = Quiver(3, [("a", 1, 2), ("b", 2, 3), ("c", 1, 3)])
AB0_RELATIONS = RelationSet((Relation.of("a*b"),))

QUIVERS: Dict[str, Quiver] = {"A2": A2, "A3": A3, "kronecker3": KRONECKER3, "twoone": TWOONE,
                              "qp4": QP4, "ab0": AB0}


@lru_cache(maxsize=None)
def algebra(name: str) -> AlgebraBasis:
    rels = {"qp4": QP4_RELATIONS, "ab0": AB0_RELATIONS}.get(name, RelationSet())
    return build_algebra(QUIVERS[name], rels)


# three-arrow Kronecker representation with hom(d,M) = 1 but hom(2d,M) = 0
KRONECKER3_MATRICES = {
    "a": [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    "b": [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    "c": [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
}
KRONECKER3_WEIGHT = (1, -1)


def kronecker3_representation(field: Field = QQ) -> Representation:
    return Representation(algebra("kronecker3"), (3, 3), KRONECKER3_MATRICES, field)


# twoone, alpha = (3,5,2): vertex, cluster rows, mutation sequence
GENACYCLIC_ALPHA = (3, 5, 2)
GENACYCLIC_TABLE: List[Tuple[Vector, List[Vector], Tuple[int, ...]]] = [
    ((0, 3, 0), [_e(3, (-1, 1)), _e(3, (1, 2), (-1, 3)), _e(3, (-1, 3))], (2,)),
    ((0, 0, 2), [_e(3, (-1, 1)), _e(3, (-1, 2)), _e(3, (1, 3))], (3,)),
    ((0, 5, 2), [_e(3, (-1, 1)), _e(3, (1, 2), (-1, 3)), _e(3, (1, 2))], (2, 3)),
    ((2, 3, 2), [_e(3, (3, 1), (-2, 2)), _e(3, (2, 1), (-1, 2)), _e(3, (1, 3))], (3, 2, 1, 2, 1)),
]
GENACYCLIC_VERTICES = {(0, 0, 0), (0, 3, 0), (0, 0, 2), (0, 5, 2), (2, 3, 2), (3, 5, 2)}

# maximal paths of the edge quiver of N(3,5,2) with their Schur sequences
SCHUR_PATH_TABLE: List[Tuple[List[Vector], List[Vector]]] = [
    ([(0, 0, 0), (3, 5, 2)], [(3, 5, 2)]),
    ([(0, 0, 0), (0, 3, 0), (3, 5, 2)], [(0, 1, 0), (3, 2, 2)]),
    ([(0, 0, 0), (2, 3, 2), (3, 5, 2)], [(2, 3, 2), (1, 2, 0)]),
    ([(0, 0, 0), (0, 0, 2), (2, 3, 2), (3, 5, 2)], [(0, 0, 1), (2, 3, 0), (1, 2, 0)]),
    ([(0, 0, 0), (0, 3, 0), (0, 5, 2), (3, 5, 2)], [(0, 1, 0), (0, 1, 1), (1, 0, 0)]),
    ([(0, 0, 0), (0, 0, 2), (0, 5, 2), (3, 5, 2)], [(0, 0, 1), (0, 1, 0), (1, 0, 0)]),
]

# QP4, dual weight (0,-3,1,1): vertex, cluster rows, mutation sequence
QP4_DUAL_WEIGHT = (0, -3, 1, 1)
QP4_KERNEL_DIMS = (1, 1, 1, 2)
QP4_TABLE: List[Tuple[Vector, List[Vector], Tuple[int, ...]]] = [
    ((0, 0, 0, 1), [_e(4, (-1, 1)), _e(4, (-1, 2)), _e(4, (-1, 3)), _e(4, (1, 4), (-1, 3))], (4,)),
    ((0, 0, 1, 0), [_e(4, (-1, 1)), _e(4, (-1, 2)), _e(4, (1, 3), (-1, 1)), _e(4, (-1, 4))], (3,)),
    ((0, 0, 1, 2), [_e(4, (-1, 1)), _e(4, (-1, 2)), _e(4, (1, 4)), _e(4, (1, 4), (-1, 3))], (4, 3)),
    ((1, 0, 0, 1), [_e(4, (1, 1)), _e(4, (-1, 2)), _e(4, (-1, 3)), _e(4, (1, 4), (-1, 3))], (4, 1)),
    ((1, 0, 1, 1), [_e(4, (1, 1)), _e(4, (-1, 2)), _e(4, (1, 3)), _e(4, (1, 1), (-1, 4))], (1, 4, 3)),
    ((1, 0, 1, 2), [_e(4, (1, 1)), _e(4, (-1, 2)), _e(4, (1, 4)), _e(4, (1, 4), (-1, 3))], (4, 1, 3)),
]
QP4_VERTICES = {(0, 0, 0, 0), (1, 1, 1, 2)} | {row[0] for row in QP4_TABLE}

# ab=0, M = A: (components in P1, P2, P3), dimension vector, ideal generators, printed cone generators
AB0_TABLE: List[Tuple[str, Vector, str, List[Vector]]] = [
    ("(P1,S3,S3)", (1, 1, 3), "<e1,e3>", [_e(3, (1, 1)), _e(3, (-1, 2)), _e(3, (-1, 3))]),
    ("(S2+S3,P2,S3)", (0, 2, 3), "<e2,e3>", [_e(3, (-1, 1)), _e(3, (1, 2), (-1, 1)), _e(3, (-1, 3))]),
    ("(S3,S3,S3)", (0, 0, 3), "<e3>", [_e(3, (1, 1)), _e(3, (1, 2), (-1, 1)), _e(3, (-1, 3))]),
    ("(S2,P2,0)", (0, 2, 1), "<e2>", [_e(3, (-1, 1)), _e(3, (-1, 2)), _e(3, (1, 3), (-1, 2), (-1, 1))]),
    ("(P1,P2,0)", (1, 2, 2), "<e1,e2>", [_e(3, (1, 1)), _e(3, (-1, 2)), _e(3, (1, 3), (-1, 2), (-1, 1))]),
    ("(P1,0,0)", (1, 1, 1), "<e1>", [_e(3, (-1, 1)), _e(3, (1, 2), (-1, 1)), _e(3, (1, 3), (-1, 1)),
                                     _e(3, (1, 3), (-1, 2), (-1, 1))]),
    ("(S2,0,0)", (0, 1, 0), "<a>", [_e(3, (1, 1)), _e(3, (1, 3), (-1, 2), (-1, 1)), _e(3, (1, 3), (-1, 1))]),
]
AB0_CLUSTER_COUNT = 18


def ab0_regular(field: Field = QQ) -> Representation:
    return regular_representation(algebra("ab0"), field)
