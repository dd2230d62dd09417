"""Command-line driver.

Every subcommand reads one input file in the ``quivertrop 1`` format (see
``quivertrop.io``) and writes a plain-text report.  Exit status: 0 on
success, 1 when a check fails, 2 for bad input, 3 when a budget is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .checks import CHECKS
from .cluster import cluster_search, exchange_quiver, generic_newton_via_clusters
from .errors import EmptyInput, InputError, NotAcyclic, QuiverTropError
from .generic import fg_pairing_acyclic, generic_newton, maximal_paths_bijection
from .io import Document, format_vector, load
from .polytope import LatticePolytope, edge_quiver, normal_fan
from .fields import GF
from .presentation import generic_e, generic_hom_e, kernel, rigid_clusters, sample_injective_presentation
from .representation import random_representation
from .subreps import (DEFAULT_BUDGET, SAMPLING_PRIME, newton_polytope, sampled_general_lattice,
                      sampled_kernel_lattice, submodule_dimvectors, tropical_f, tropical_f_dual, vertex_uniqueness)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _prov(args) -> str:
    return f"[samples={args.samples} coeffBound={args.coeff_bound} rngSeed={args.seed}]"


def _polytope_lines(P: LatticePolytope) -> List[str]:
    return [f"dimension {P.dim}", *P.export().splitlines()]


def _lattice(args, doc: Document):
    return submodule_dimvectors(doc.representation(), args.prime, budget=args.budget, jobs=args.jobs)


def cmd_fpoly(args, doc: Document) -> List[str]:
    if not doc.weights:
        raise EmptyInput("no 'weight' lines to evaluate")
    lat = _lattice(args, doc)
    out = [f"oracle GF({lat.prime}), dims {format_vector(lat.dims)}"]
    for w in doc.weights:
        out.append(f"f{format_vector(w)} = {tropical_f(lat, w)}  fdual{format_vector(w)} = {tropical_f_dual(lat, w)}")
    return out


def cmd_newton(args, doc: Document) -> List[str]:
    lat = _lattice(args, doc)
    P = newton_polytope(lat)
    counts = vertex_uniqueness(lat, P)
    out = [f"oracle GF({lat.prime}), dims {format_vector(lat.dims)}", *_polytope_lines(P)]
    out.append("submodules per vertex " + " ".join(f"{format_vector(v)}:{c}" for v, c in sorted(counts.items())))
    return out


def _require_seed(args, what: str) -> None:
    if args.seed is None:
        raise InputError(f"{what} samples and needs --seed")


def _target(args, doc: Document):
    """The sampled representation behind ``generic-newton``: a kernel or a general representation."""
    _require_seed(args, "this route")
    alg = doc.algebra()
    p = args.prime or SAMPLING_PRIME
    if doc.dual_weights:
        return sampled_kernel_lattice(alg, doc.dual_weights[0], args.samples, args.coeff_bound, args.seed, p,
                                      args.budget, args.jobs)
    if doc.dims is None:
        raise EmptyInput("need 'dims' or a 'dual-weight' line")
    if doc.relations:
        raise NotAcyclic("general representations are only sampled for path algebras")
    return sampled_general_lattice(alg, doc.dims, args.samples, args.coeff_bound, args.seed, p,
                                   args.budget, args.jobs)


def _sampled_representation(args, doc: Document, alg):
    """One sampled target for the cluster route; kernels of least total dimension are preferred."""
    _require_seed(args, "this route")
    field = GF(args.prime or SAMPLING_PRIME)
    if doc.dual_weights:
        reps = [kernel(sample_injective_presentation(alg, doc.dual_weights[0], np.random.default_rng([args.seed, 2, s]),
                                                     args.coeff_bound, field)) for s in range(args.samples)]
        return min(reps, key=lambda K: sum(K.dims))
    if doc.dims is None or doc.relations:
        raise NotAcyclic("need a 'dual-weight' line, or 'dims' over a path algebra")
    return random_representation(alg, doc.dims, np.random.default_rng([args.seed, 3, 0]), field, args.coeff_bound)


def _generic_polytope(args, doc: Document) -> tuple:
    route = args.route
    if route is None:
        hereditary = doc.quiver is not None and doc.quiver.is_acyclic() and not doc.relations
        route = "generic" if doc.dims is not None and hereditary and not doc.dual_weights else "oracle"
    if route == "generic":
        if doc.dims is None or doc.relations or not doc.quiver.is_acyclic():
            raise NotAcyclic("the generic route needs 'dims' over an acyclic quiver without relations")
        return generic_newton(doc.quiver, doc.dims), ["route generic (Schofield recursion)"]
    if route == "oracle":
        M, lat = _target(args, doc)
        return newton_polytope(lat), [f"route oracle, sampled dims {format_vector(M.dims)} over GF({lat.prime})"
                                      f" {_prov(args)}"]
    alg = doc.algebra()
    M = _sampled_representation(args, doc, alg)
    B = doc.exchange_matrix()
    clusters = cluster_search(B, args.max_depth, args.norm_bound)
    P = generic_newton_via_clusters(lambda w: generic_hom_e(alg, w, M, args.samples, args.coeff_bound,
                                                            args.seed).hom, B, clusters=clusters)
    return P, [f"route cluster, {len(clusters)} clusters (maxDepth={args.max_depth} normBound={args.norm_bound}),"
               f" sampled dims {format_vector(M.dims)} {_prov(args)}"]


def cmd_generic_newton(args, doc: Document) -> List[str]:
    P, head = _generic_polytope(args, doc)
    return head + _polytope_lines(P)


def _polytope_for(args, doc: Document) -> LatticePolytope:
    if args.generic:
        return _generic_polytope(args, doc)[0]
    return newton_polytope(_lattice(args, doc))


def cmd_fan(args, doc: Document) -> List[str]:
    P = _polytope_for(args, doc)
    fan = normal_fan(P)
    return [f"cones {len(fan.cones)}", *fan.export().splitlines(),
            "rays " + " ".join(format_vector(r) for r in fan.rays())]


def cmd_edges(args, doc: Document) -> List[str]:
    Q = edge_quiver(_polytope_for(args, doc))
    out = [f"arrows {len(Q.arrows)}"]
    out += [f"{format_vector(a)} -> {format_vector(b)} factor {format_vector(Q.factor((a, b)))}" for a, b in Q.arrows]
    paths = Q.maximal_paths()
    out.append(f"maximal paths {len(paths)}")
    out += [" -> ".join(format_vector(v) for v in p) for p in paths]
    return out


def cmd_hom_e(args, doc: Document) -> List[str]:
    if not doc.weights:
        raise EmptyInput("no 'weight' lines")
    M = doc.representation()
    alg = M.algebra
    out = []
    for w in doc.weights:
        r = generic_hom_e(alg, w, M, args.samples, args.coeff_bound, args.seed)
        out.append(f"hom{format_vector(w)} = {r.hom}  e{format_vector(w)} = {r.e}  [{r.provenance}]")
    return out


def cmd_cluster_search(args, doc: Document) -> List[str]:
    clusters = cluster_search(doc.exchange_matrix(), args.max_depth, args.norm_bound)
    out = [f"clusters {len(clusters)} (maxDepth={args.max_depth} normBound={args.norm_bound})"]
    for key in sorted(clusters):
        seq = clusters[key].sequence
        out.append(" ".join(format_vector(r) for r in key) + f"  via {format_vector(seq) if seq else '()'}")
    return out


def cmd_exchange_quiver(args, doc: Document) -> List[str]:
    alg = doc.algebra()
    cache: Dict[tuple, int] = {}

    def e(x, y):
        if (x, y) not in cache:
            cache[(x, y)] = generic_e(alg, x, y, args.samples, args.coeff_bound, args.seed)
        return cache[(x, y)]

    if args.rigid_box:
        found = rigid_clusters(alg, args.rigid_box, args.samples, args.coeff_bound, args.seed)
        clusters = {tuple(sorted(c)): None for c in found.clusters}
        head = f"sampled-rigidity enumeration in box {args.rigid_box}"
    else:
        clusters = cluster_search(doc.exchange_matrix(), args.max_depth, args.norm_bound)
        head = f"mutation search (maxDepth={args.max_depth} normBound={args.norm_bound})"
    g = exchange_quiver(clusters, e)
    out = [head, f"nodes {g.number_of_nodes()} arrows {g.number_of_edges()} {_prov(args)}"]
    for a, b, data in sorted(g.edges(data=True)):
        out.append(f"{format_vector(data['minus'])} -> {format_vector(data['plus'])}  in "
                   + " ".join(format_vector(r) for r in a))
    return out


def cmd_pairing(args, doc: Document) -> List[str]:
    if not doc.dual_weights:
        raise EmptyInput("pairing needs a 'dual-weight' line")
    if doc.relations:
        raise NotAcyclic("pairing is implemented for path algebras")
    r = fg_pairing_acyclic(doc.quiver, args.coefficients, doc.dual_weights[0], doc.exchange, args.samples,
                           args.seed, args.coeff_bound)
    return [f"pairing sampled {r.sampled} via polytope {r.via_polytope} {'agree' if r.agree else 'DISAGREE'}"
            f" {_prov(args)}"]


def cmd_schur_seq(args, doc: Document) -> List[str]:
    if doc.dims is None or doc.relations:
        raise NotAcyclic("schur-seq needs 'dims' over a path algebra")
    rep = maximal_paths_bijection(doc.quiver, doc.dims)
    out = [f"schur sequences {len(rep.sequences)}"]
    for s in rep.sequences:
        out.append(" + ".join(f"{c}*{format_vector(b)}" if c > 1 else format_vector(b)
                              for b, c in zip(s.roots, s.coefficients)))
    out.append(f"maximal paths {len(rep.paths)} bijective {rep.bijective}")
    return out


COMMANDS: Dict[str, Callable] = {
    "fpoly": cmd_fpoly, "newton": cmd_newton, "generic-newton": cmd_generic_newton, "fan": cmd_fan,
    "edges": cmd_edges, "hom-e": cmd_hom_e, "cluster-search": cmd_cluster_search,
    "exchange-quiver": cmd_exchange_quiver, "pairing": cmd_pairing, "schur-seq": cmd_schur_seq,
}
SAMPLED = {"hom-e", "exchange-quiver", "pairing", "check-example"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quivertrop", description="Tropical F-polynomials and Newton polytopes "
                                     "of quiver representations.")
    parser.add_argument("--version", action="version", version=f"quivertrop {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for enumeration")
    common.add_argument("--prime", type=_positive, default=None, help="prime for the submodule oracle")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="subspace budget of the oracle")
    common.add_argument("--samples", type=_positive, default=5)
    common.add_argument("--coeff-bound", type=_positive, default=100)
    common.add_argument("--max-depth", type=_positive, default=10)
    common.add_argument("--norm-bound", type=_positive, default=20)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input")
        p.add_argument("--seed", type=int, required=name in SAMPLED)
        if name in ("generic-newton", "fan", "edges"):
            p.add_argument("--route", choices=("generic", "oracle", "cluster"), default=None)
        if name in ("fan", "edges"):
            p.add_argument("--generic", action="store_true", help="use the generic polytope of the input")
        if name == "exchange-quiver":
            p.add_argument("--rigid-box", type=_positive, default=None,
                           help="enumerate clusters by sampled rigidity in [-N, N]^n")
        if name == "pairing":
            p.add_argument("--coefficients", type=_vector, required=True)
    p = sub.add_parser("check-example", parents=[common])
    p.add_argument("example", choices=sorted(CHECKS))
    p.add_argument("--seed", type=int, required=True)
    return parser


def run(args) -> tuple:
    """Return ``(exit status, report text)``."""
    if args.command == "check-example":
        report = CHECKS[args.example](seed=args.seed, samples=args.samples, coeff_bound=args.coeff_bound,
                                      jobs=args.jobs)
        return (0 if report.passed else 1), report.render()
    doc = load(args.input)
    lines = COMMANDS[args.command](args, doc)
    return 0, "\n".join([f"quivertrop {args.command}", *lines]) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, text = run(args)
    except QuiverTropError as exc:
        print(f"error {exc.name}: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error InputError: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
