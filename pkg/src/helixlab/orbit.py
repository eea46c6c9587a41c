"""Bounded enumeration of exceptional classes / bases and breadth-first orbit search.

Collections are compared up to the sign of each element (a shift in the
derived category), via ``canonicalize``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from . import _linalg
from .chern import FanoPreset, from_coordinates, line_bundle_obstruction
from .errors import CapExceeded, HelixlabError, NotSODBasis
from .lattice import (Collection, GramForm, KVector, _canonical_vector, _pair,
                      canonicalize, check_sod_basis, height)
from .mutation import BraidWord, Move, _mutate_unchecked

DEFAULT_MAX_VOLUME = 10 ** 7


@dataclass(frozen=True)
class SearchCaps:
    max_depth: int = 24
    max_nodes: int = 1_000_000
    height_cap: Optional[int] = None

    def __post_init__(self):
        if self.max_depth < 0 or self.max_nodes <= 0:
            raise HelixlabError("max_depth must be >= 0 and max_nodes > 0")
        if self.height_cap is not None and self.height_cap < 0:
            raise HelixlabError("height_cap must be >= 0")


def enumerate_exceptional(G: GramForm, B: int, max_volume: int = DEFAULT_MAX_VOLUME) -> set[KVector]:
    """All sign-canonical u with height <= B and chi(u, u) = 1 (exhaustive scan)."""
    if B < 0:
        raise HelixlabError("height bound must be nonnegative")
    volume = (2 * B + 1) ** G.n
    if volume > max_volume:
        raise CapExceeded(f"scan volume {volume} exceeds the safety bound {max_volume}")
    e = G.entries
    out = set()
    rng = range(-B, B + 1)
    for u in itertools.product(rng, repeat=G.n):
        # keep only sign-canonical candidates
        for x in u:
            if x:
                break
        else:
            continue
        if x < 0:
            continue
        if _pair(e, u, u) == 1:
            out.add(u)
    return out


def _sod_bases_from(G: GramForm, vectors) -> set[Collection]:
    e = G.entries
    vs = sorted(vectors)
    # follows[u] = vectors v that may come after u: chi(v, u) = 0
    follows = {u: frozenset(v for v in vs if _pair(e, v, u) == 0) for u in vs}
    found = set()

    def extend(chain, candidates):
        if len(chain) == G.n:
            if abs(_linalg.det(chain)) == 1:
                found.add(tuple(chain))
            return
        for v in sorted(candidates):
            extend(chain + [v], candidates & follows[v])

    for u in vs:
        extend([u], follows[u])
    return found


def enumerate_sod_bases(G: GramForm, B: int, max_volume: int = DEFAULT_MAX_VOLUME) -> set[Collection]:
    """All canonical semiorthogonal bases whose elements have height <= B."""
    return _sod_bases_from(G, enumerate_exceptional(G, B, max_volume))


@dataclass
class OrbitStats:
    nodes_expanded: int = 0
    frontier_peak: int = 1
    depth_reached: int = 0
    boundary_nodes: int = 0
    truncated_depth: bool = False
    truncated_nodes: bool = False

    @property
    def truncated(self) -> bool:
        return self.truncated_depth or self.truncated_nodes


@dataclass
class OrbitReport:
    start: Collection
    caps: SearchCaps
    # canonical collection -> a shortest word from start; insertion order is discovery order
    witness: dict[Collection, BraidWord]
    boundary: frozenset
    stats: OrbitStats = field(default_factory=OrbitStats)

    @property
    def visited(self) -> frozenset:
        return frozenset(self.witness)

    def __contains__(self, C) -> bool:
        return C in self.witness


def _generators(n: int) -> list[Move]:
    return [Move("L", i) for i in range(1, n)] + [Move("R", i) for i in range(1, n)]


def _expand_chunk(entries, chunk, gens):
    out = []
    for C in chunk:
        kids = []
        for side, i in gens:
            D = _mutate_unchecked(entries, C, side, i - 1)
            kids.append(tuple(_canonical_vector(u) for u in D))
        out.append(kids)
    return out


def _split(seq, parts):
    size, extra = divmod(len(seq), parts)
    chunks, pos = [], 0
    for p in range(parts):
        step = size + (p < extra)
        if step:
            chunks.append(seq[pos:pos + step])
        pos += step
    return chunks


def orbit_bfs(G: GramForm, start, caps: SearchCaps = SearchCaps(), workers: int = 1,
              verify: bool = True) -> OrbitReport:
    """Breadth-first closure of the canonical start under all L_i and R_i.

    Each layer is expanded in lexicographic order of the canonical
    coordinates, with generators in the order L1..L(n-1), R1..R(n-1); the
    first discovery of a node fixes its witness. Expansion may be farmed out
    to ``workers`` processes, but the merge replays that fixed order, so
    the report does not depend on the worker count.
    """
    verdict = check_sod_basis(G, start)
    if not verdict:
        raise NotSODBasis("; ".join(verdict.problems()))
    start = canonicalize(start)
    gens = _generators(G.n)
    cap = caps.height_cap
    witness = {start: ()}
    stats = OrbitStats()
    frontier = [start]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        depth = 0
        while frontier:
            expandable = [C for C in frontier if cap is None or height(C) <= cap]
            if not expandable:
                break
            if depth >= caps.max_depth:
                stats.truncated_depth = True
                break
            if pool is None:
                children = _expand_chunk(G.entries, expandable, gens)
            else:
                parts = pool.map(_expand_chunk, itertools.repeat(G.entries),
                                 _split(expandable, workers), itertools.repeat(gens))
                children = [kids for part in parts for kids in part]
            new = []
            for parent, kids in zip(expandable, children):
                stats.nodes_expanded += 1
                for g, kid in zip(gens, kids):
                    if kid in witness:
                        continue
                    if len(witness) >= caps.max_nodes:
                        stats.truncated_nodes = True
                        break
                    if verify:
                        assert check_sod_basis(G, kid).ok, kid
                    witness[kid] = witness[parent] + (g,)
                    new.append(kid)
                if stats.truncated_nodes:
                    break
            depth += 1
            stats.depth_reached = depth
            frontier = sorted(new)
            stats.frontier_peak = max(stats.frontier_peak, len(frontier))
            if stats.truncated_nodes:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    boundary = frozenset(C for C in witness if cap is not None and height(C) > cap)
    stats.boundary_nodes = len(boundary)
    return OrbitReport(start, caps, witness, boundary, stats)


@dataclass
class TransitivityReport:
    height: int
    caps: SearchCaps
    bases: list[Collection]
    reached: dict[Collection, BraidWord]
    unreached: list[Collection]
    orbit_stats: OrbitStats
    exceptional_vectors: int
    vectors_in_bases: int
    # unreached basis -> reasons it provably lies outside the orbit
    obstructions: dict[Collection, list[str]] = field(default_factory=dict)

    @property
    def truncated(self) -> bool:
        return self.orbit_stats.truncated

    @property
    def status(self) -> str:
        if not self.unreached:
            return "transitive"
        if self.truncated:
            return "inconclusive"
        return "unreached"

    @property
    def exit_code(self) -> int:
        return {"transitive": 0, "unreached": 1, "inconclusive": 3}[self.status]


def transitivity_report(G: GramForm, B: int, caps: SearchCaps = SearchCaps(), *,
                        workers: int = 1, start=None,
                        preset: Optional[FanoPreset] = None) -> TransitivityReport:
    """Check that every basis of height <= B lies in the orbit of ``start``.

    ``start`` defaults to the reference basis and ``caps.height_cap`` to 4*B.
    When a preset with Chern data is supplied, unreached bases are annotated
    with any line-bundle obstruction that proves they are not in the orbit.
    """
    if caps.height_cap is None:
        caps = replace(caps, height_cap=4 * B)
    vectors = enumerate_exceptional(G, B)
    bases = sorted(_sod_bases_from(G, vectors))
    orbit = orbit_bfs(G, G.reference_basis() if start is None else start, caps, workers)
    reached = {C: orbit.witness[C] for C in bases if C in orbit.witness}
    unreached = [C for C in bases if C not in reached]
    obstructions = {}
    if preset is not None and preset.basis_ch is not None:
        for C in unreached:
            reasons = []
            for idx, u in enumerate(C, start=1):
                why = line_bundle_obstruction(preset, from_coordinates(preset, u))
                if why:
                    reasons.append(f"element {idx}: {why}")
            if reasons:
                obstructions[C] = reasons
    in_bases = {u for C in bases for u in C}
    return TransitivityReport(B, caps, bases, reached, unreached, orbit.stats,
                              len(vectors), len(in_bases), obstructions)
