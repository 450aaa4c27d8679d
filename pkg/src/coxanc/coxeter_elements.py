"""Graph-level analysis of Coxeter elements.

A Coxeter element is a product of all simple reflections, each appearing
once.  Two orderings give the same element exactly when they induce the same
orientation of the Coxeter graph (only commuting swaps are available), so the
orientation is the canonical key for a Coxeter element.  Everything here
works on (graph, ordering) alone -- no group table -- and therefore applies
to infinite groups as well.

The layer structure of the orientation (vertices by longest incoming
directed path) is the graph-side ancestor decomposition: layer 1 is the
descent set, each layer is an independent set, and the number of layers is
the involution length of the element.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import CoxeterGraph
from .errors import TooLarge
from .graphs import chromatic_number, extend_to_maximal_independent

ENUMERATION_GUARD = 9  # n! orderings are enumerated; 9! = 362,880


@dataclass(frozen=True)
class CoxeterElementWord:
    """An ordering of the generators: the order of appearance in the product."""

    ordering: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.ordering)) != len(self.ordering):
            raise ValueError("ordering repeats a generator")


@dataclass(frozen=True)
class EdgeOrientation:
    """Each graph edge directed from the earlier to the later generator."""

    graph: CoxeterGraph
    arcs: tuple[tuple[int, int], ...]  # (tail, head), aligned with graph.edges


def _ordering_of(c) -> tuple[int, ...]:
    if isinstance(c, CoxeterElementWord):
        return c.ordering
    return tuple(c)


def orientation_of(graph: CoxeterGraph, c) -> EdgeOrientation:
    ordering = _ordering_of(c)
    if set(ordering) != set(graph.vertices) or len(ordering) != graph.rank:
        raise ValueError("ordering is not a permutation of the graph vertices")
    pos = {v: k for k, v in enumerate(ordering)}
    arcs = tuple(
        (i, j) if pos[i] < pos[j] else (j, i) for (i, j, _) in graph.edges
    )
    return EdgeOrientation(graph=graph, arcs=arcs)


def coxeter_descents(o: EdgeOrientation) -> frozenset[int]:
    """Source vertices of the orientation: the left descent set of the element."""
    heads = {h for (_, h) in o.arcs}
    return frozenset(v for v in o.graph.vertices if v not in heads)


def _depths(o: EdgeOrientation) -> dict[int, int]:
    """Longest incoming directed path (vertex count) per vertex."""
    in_nbrs: dict[int, list[int]] = {v: [] for v in o.graph.vertices}
    for t, h in o.arcs:
        in_nbrs[h].append(t)
    depth: dict[int, int] = {}

    def d(v: int) -> int:
        if v not in depth:
            depth[v] = 1 + max((d(u) for u in in_nbrs[v]), default=0)
        return depth[v]

    for v in o.graph.vertices:
        d(v)
    return depth


def coxeter_ancestor_decomposition(o: EdgeOrientation) -> list[frozenset[int]]:
    """Layer i holds the vertices whose longest incoming path has exactly i vertices.

    Layers are independent sets partitioning the vertices; layer 1 equals the
    descent set.
    """
    depth = _depths(o)
    layers = [set() for _ in range(max(depth.values(), default=0))]
    for v, dv in depth.items():
        layers[dv - 1].add(v)
    return [frozenset(layer) for layer in layers]


def path_length(o: EdgeOrientation) -> int:
    depth = _depths(o)
    return max(depth.values(), default=0)


def min_ilen_coxeter_element(graph: CoxeterGraph) -> tuple[CoxeterElementWord, int]:
    """An ordering whose involution length meets the chromatic-number minimum.

    Recursive peeling: take the first color class of an exact coloring, grow
    it to an inclusion-maximal independent set, emit it (ascending), recurse
    on the rest.  Each peel lowers the chromatic number by exactly one.
    """
    ordering: list[int] = []
    remaining = graph
    while remaining.vertices:
        _, classes = chromatic_number(remaining)
        layer = extend_to_maximal_independent(remaining, classes[0])
        ordering.extend(sorted(layer))
        remaining = remaining.induced(frozenset(remaining.vertices) - layer)
    word = CoxeterElementWord(tuple(ordering))
    if not graph.vertices:
        return word, 0
    return word, path_length(orientation_of(graph, word))


def _orientation_key(pos: dict[int, int], pairs) -> tuple[bool, ...]:
    return tuple(pos[i] < pos[j] for (i, j) in pairs)


def _path_length_fast(graph: CoxeterGraph, perm, pos) -> int:
    adj = graph.adjacency
    depth: dict[int, int] = {}
    best = 0
    for v in perm:  # topological order of the orientation
        dv = 1
        for u in adj[v]:
            if pos[u] < pos[v] and depth[u] >= dv:
                dv = depth[u] + 1
        depth[v] = dv
        if dv > best:
            best = dv
    return best


def _check_enumeration_guard(graph: CoxeterGraph):
    if graph.rank > ENUMERATION_GUARD:
        raise TooLarge(
            f"rank {graph.rank} exceeds the ordering-enumeration guard {ENUMERATION_GUARD}"
        )


def ilen_spectrum(graph: CoxeterGraph) -> dict[int, int]:
    """Involution length -> number of distinct Coxeter elements attaining it.

    Enumerates all generator orderings and deduplicates by orientation
    (commutation classes).  The minimum key is the chromatic number and the
    maximum key is the longest-path order of the graph.
    """
    _check_enumeration_guard(graph)
    pairs = [(i, j) for (i, j, _) in graph.edges]
    tally: dict[int, int] = {}
    seen: set[tuple[bool, ...]] = set()
    for perm in itertools.permutations(graph.vertices):
        pos = {v: k for k, v in enumerate(perm)}
        key = _orientation_key(pos, pairs)
        if key in seen:
            continue
        seen.add(key)
        d = _path_length_fast(graph, perm, pos)
        tally[d] = tally.get(d, 0) + 1
    return dict(sorted(tally.items()))


def coxeter_element_classes(graph: CoxeterGraph) -> list[CoxeterElementWord]:
    """One representative ordering per distinct Coxeter element.

    Representatives are the lexicographically least ordering of each
    commutation class, listed in lexicographic order.
    """
    _check_enumeration_guard(graph)
    pairs = [(i, j) for (i, j, _) in graph.edges]
    reps: list[CoxeterElementWord] = []
    seen: set[tuple[bool, ...]] = set()
    for perm in itertools.permutations(sorted(graph.vertices)):
        pos = {v: k for k, v in enumerate(perm)}
        key = _orientation_key(pos, pairs)
        if key not in seen:
            seen.add(key)
            reps.append(CoxeterElementWord(perm))
    return reps
