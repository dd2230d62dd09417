"""Reproduction of the worked examples, shared by the CLI and the tests.

Each ``check_*`` function returns a ``CheckReport``: a pass flag and the
report lines.  Sampled numbers carry their provenance triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

import numpy as np

from . import fixtures as fx
from .cluster import cluster_search, initial_seed, mutate_along, vertex_recovery
from .fields import integer_rank
from .generic import generic_newton
from .io import format_vector
from .polytope import normal_cone
from .presentation import generic_hom_e, rigid_clusters
from .representation import random_representation
from .subreps import (newton_polytope, sampled_kernel_lattice, saturation_witness, submodule_dimvectors,
                      tropical_f)


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    lines: List[str] = field(default_factory=list)

    def record(self, ok: bool, text: str) -> bool:
        self.lines.append(f"[{'ok' if ok else 'FAIL'}] {text}")
        self.passed = self.passed and ok
        return ok

    def note(self, text: str) -> None:
        self.lines.append(f"       {text}")

    def render(self) -> str:
        return "\n".join([f"check-example {self.name}", *self.lines,
                          f"result: {'PASS' if self.passed else 'FAIL'}"]) + "\n"


def _prov(samples: int, coeff_bound: int, seed: int) -> str:
    return f"[samples={samples} coeffBound={coeff_bound} rngSeed={seed}]"


def check_kronecker3(seed: int, samples: int = 5, coeff_bound: int = 100, jobs: int = 1) -> CheckReport:
    rep = CheckReport("kronecker3")
    alg = fx.algebra("kronecker3")
    M = fx.kronecker3_representation()
    delta = fx.KRONECKER3_WEIGHT
    double = tuple(2 * x for x in delta)
    lattice = None
    for p in (5, 7):
        lattice_p = submodule_dimvectors(M, p=p, jobs=jobs)
        lattice = lattice if lattice is not None else lattice_p
        f = tropical_f(lattice_p, delta)
        rep.record(f == 0, f"f_M{format_vector(delta)} = {f} over GF({p})")
    prov = _prov(samples, coeff_bound, seed)

    def hom(w):
        return generic_hom_e(alg, w, M, samples, coeff_bound, seed).hom

    h1, h2 = hom(delta), hom(double)
    rep.record(h1 == 1, f"hom({format_vector(delta)}, M) = {h1} {prov}")
    rep.record(h2 == 0, f"hom({format_vector(double)}, M) = {h2} {prov}")
    n = saturation_witness(M, delta, hom, n_max=6, lattice=lattice)
    rep.record(n == 2, f"f_M(n delta) = hom(n delta, M) first at n = {n} {prov}")
    return rep


def check_genacyclic(seed: int, samples: int = 5, coeff_bound: int = 100, jobs: int = 1) -> CheckReport:
    rep = CheckReport("genacyclic")
    q, alpha = fx.TWOONE, fx.GENACYCLIC_ALPHA
    P = generic_newton(q, alpha)
    rep.record(set(P.vertices) == fx.GENACYCLIC_VERTICES,
               f"N{format_vector(alpha)} has {len(P.vertices)} vertices: "
               + " ".join(format_vector(v) for v in P.vertices))
    B = fx.exchange_matrix(q)
    clusters = cluster_search(B, max_depth=5, norm_bound=20)
    alg = fx.algebra("twoone")
    M = random_representation(alg, alpha, np.random.default_rng([seed, 1]), coeff_bound=coeff_bound)
    prov = _prov(samples, coeff_bound, seed)
    for vertex, rows, sequence in fx.GENACYCLIC_TABLE:
        seed_ = mutate_along(initial_seed(B), sequence)
        reached = sorted(seed_.G) == sorted(rows) and seed_.canonical() in clusters
        rep.record(reached, f"mutation {sequence} gives cluster "
                   + " ".join(format_vector(r) for r in seed_.G))
        h = [generic_hom_e(alg, r, M, samples, coeff_bound, seed).hom for r in rows]
        got = vertex_recovery(rows, h)
        rep.record(got == vertex, f"hom values {tuple(h)} recover vertex {format_vector(got)} {prov}")
    return rep


def check_qp4(seed: int, samples: int = 5, coeff_bound: int = 100, jobs: int = 1) -> CheckReport:
    rep = CheckReport("qp4")
    alg = fx.algebra("qp4")
    K, lattice = sampled_kernel_lattice(alg, fx.QP4_DUAL_WEIGHT, samples, coeff_bound, seed, jobs=jobs)
    prov = _prov(samples, coeff_bound, seed)
    rep.record(K.dims == fx.QP4_KERNEL_DIMS, f"dim Ker of dual weight {format_vector(fx.QP4_DUAL_WEIGHT)}"
               f" = {format_vector(K.dims)} over GF(11) {prov}")
    P = newton_polytope(lattice)
    rep.record(set(P.vertices) == fx.QP4_VERTICES, f"oracle polytope has {len(P.vertices)} vertices: "
               + " ".join(format_vector(v) for v in P.vertices))
    B = fx.exchange_matrix(fx.QP4)
    for vertex, rows, sequence in fx.QP4_TABLE:
        s = mutate_along(initial_seed(B), sequence)
        in_cone = vertex in P.vertices and all(normal_cone(P, vertex).contains(r) for r in s.G)
        rep.record(sorted(s.G) == sorted(rows) and in_cone,
                   f"mutation {sequence} lands in the normal cone of {format_vector(vertex)}")
    return rep


def check_ab0(seed: int, samples: int = 2, coeff_bound: int = 100, jobs: int = 1) -> CheckReport:
    rep = CheckReport("ab0")
    A = fx.ab0_regular()
    P = newton_polytope(submodule_dimvectors(A, jobs=jobs))
    expected = {v for _, v, _, _ in fx.AB0_TABLE} | {(0, 0, 0), A.dims}
    rep.record(set(P.vertices) == expected, f"oracle polytope of A has {len(P.vertices)} vertices")
    for label, vertex, ideal, gens in fx.AB0_TABLE:
        if vertex not in P.vertices:
            rep.record(False, f"{label}: {format_vector(vertex)} is not a vertex")
            continue
        cone = normal_cone(P, vertex)
        inside = all(cone.contains(g) for g in gens)
        rep.record(inside and integer_rank(gens) == 3,
                   f"{label} {ideal}: printed generators in the normal cone of {format_vector(vertex)}")
    flipped = []
    for label, vertex, ideal, gens in fx.AB0_TABLE:
        hits = [v for v in P.vertices if all(normal_cone(P, v).contains(tuple(-x for x in g)) for g in gens)]
        flipped.append(f"{label}->{'/'.join(format_vector(v) for v in hits) or 'none'}")
    rep.note("negated generators lie in the cones of: " + " ".join(flipped))
    found = rigid_clusters(fx.algebra("ab0"), box=2, samples=samples, coeff_bound=coeff_bound, rng_seed=seed)
    g = found.exchange_graph()
    regular = all(deg == 3 for _, deg in g.degree())
    rep.record(len(found.clusters) == fx.AB0_CLUSTER_COUNT and regular,
               f"sampled-rigidity enumeration: {len(found.clusters)} clusters, {g.number_of_edges()} exchanges,"
               f" {len(found.indecomposables)} indecomposable rigid weights {_prov(samples, coeff_bound, seed)}")
    return rep


CHECKS = {"kronecker3": check_kronecker3, "genacyclic": check_genacyclic, "qp4": check_qp4, "ab0": check_ab0}
