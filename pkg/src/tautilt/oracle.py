"""Brute-force enumeration of tau-tilting and support tau-tilting modules.

Everything here is computed directly from the module model in
:mod:`tautilt.algebra` by clique search; none of the counting formulas are
used, so the results serve as ground truth for :mod:`tautilt.counting`.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .algebra import (
    AlgebraSpec,
    Indec,
    ModuleSet,
    hom_nonzero,
    indecomposables,
    make_uniform,
    quotient_kill,
    support,
    tau,
)


class SupportPair(NamedTuple):
    module: ModuleSet
    killed: frozenset

    def sort_key(self):
        return (len(self.killed), tuple(sorted(self.killed)), self.module)


class CompatGraph(NamedTuple):
    nodes: tuple[Indec, ...]
    # adjacency[i] is a bitmask over node indices
    adjacency: tuple[int, ...]

    def adjacent(self, x: Indec, y: Indec) -> bool:
        i, j = self.nodes.index(x), self.nodes.index(y)
        return bool(self.adjacency[i] >> j & 1)

    def is_rigid(self, module: Iterable[Indec]) -> bool:
        idx = {m: i for i, m in enumerate(self.nodes)}
        ids = []
        for m in module:
            if m not in idx:
                return False
            ids.append(idx[m])
        return all(self.adjacency[i] >> j & 1 for i, j in itertools.combinations(ids, 2))


def _compatible(A: AlgebraSpec, x: Indec, y: Indec) -> bool:
    return not hom_nonzero(A, x, tau(A, y)) and not hom_nonzero(A, y, tau(A, x))


@lru_cache(maxsize=None)
def build_compat_graph(A: AlgebraSpec) -> CompatGraph:
    """Tau-rigid indecomposables, joined when their sum is still tau-rigid."""
    nodes = tuple(m for m in indecomposables(A) if not hom_nonzero(A, m, tau(A, m)))
    adj = [0] * len(nodes)
    for i, j in itertools.combinations(range(len(nodes)), 2):
        if _compatible(A, nodes[i], nodes[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return CompatGraph(nodes, tuple(adj))


def _cliques_of_size(adj: Sequence[int], count: int, k: int) -> Iterator[list[int]]:
    current: list[int] = []

    def extend(cand: int) -> Iterator[list[int]]:
        if len(current) == k:
            yield list(current)
            return
        while cand:
            if len(current) + cand.bit_count() < k:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            current.append(v)
            yield from extend(cand & adj[v])
            current.pop()

    yield from extend((1 << count) - 1)


@lru_cache(maxsize=None)
def enumerate_tau_tilting(A: AlgebraSpec) -> tuple[ModuleSet, ...]:
    """All basic tau-tilting modules, i.e. tau-rigid with ``n`` summands."""
    g = build_compat_graph(A)
    found = [
        tuple(g.nodes[i] for i in clique)
        for clique in _cliques_of_size(g.adjacency, len(g.nodes), A.n)
    ]
    assert found, f"no tau-tilting module found for {A}"
    return tuple(sorted(found))


def _killed_sets(n: int) -> Iterator[frozenset]:
    for size in range(n + 1):
        for T in itertools.combinations(range(1, n + 1), size):
            yield frozenset(T)


def support_pairs_for(A: AlgebraSpec, killed: Iterable[int]) -> list[SupportPair]:
    """Support tau-tilting modules whose support is exactly the complement of ``killed``."""
    T = frozenset(killed)
    parts = []
    for comp in quotient_kill(A, T):
        parts.append([tuple(comp.lift(m) for m in M) for M in enumerate_tau_tilting(comp.algebra)])
    return [
        SupportPair(tuple(sorted(itertools.chain.from_iterable(choice))), T)
        for choice in itertools.product(*parts)
    ]


@lru_cache(maxsize=None)
def enumerate_support_tau_tilting(A: AlgebraSpec) -> tuple[SupportPair, ...]:
    pairs: list[SupportPair] = []
    for T in _killed_sets(A.n):
        pairs.extend(support_pairs_for(A, T))
    return tuple(sorted(pairs, key=SupportPair.sort_key))


def has_parent_projective(A: AlgebraSpec, module: Iterable[Indec]) -> bool:
    return any(A.is_projective(m) for m in module)


def filter_proper_np(
    A: AlgebraSpec, pairs: Iterable[SupportPair]
) -> tuple[list[SupportPair], list[SupportPair]]:
    """Split off proper support tau-tilting modules and those without projective summands.

    Projectivity is judged in ``A`` itself, not in the quotient algebra.
    """
    proper = [p for p in pairs if p.killed]
    proper_np = [p for p in proper if not has_parent_projective(A, p.module)]
    return proper, proper_np


def _contains(A: AlgebraSpec, p: SupportPair, vertices: Iterable[int]) -> bool:
    supp = support(A, p.module)
    return all(v in supp for v in vertices)


def filter_W(A: AlgebraSpec, i: int) -> list[SupportPair]:
    """Support tau-tilting modules with ``S_1 .. S_{i-1}`` as factors but not ``S_i``."""
    if not 1 <= i <= A.n:
        raise ValueError(f"i must lie in 1..{A.n}, got {i}")
    return [
        p
        for p in enumerate_support_tau_tilting(A)
        if _contains(A, p, range(1, i)) and i not in support(A, p.module)
    ]


def filter_V(A: AlgebraSpec, ell: int) -> list[SupportPair]:
    """Support tau-tilting modules with ``S_1 .. S_ell`` among the composition factors."""
    if not 1 <= ell <= A.n:
        raise ValueError(f"ell must lie in 1..{A.n}, got {ell}")
    return [p for p in enumerate_support_tau_tilting(A) if _contains(A, p, range(1, ell + 1))]


def set_X(n: int, r: int) -> list[SupportPair]:
    """Support tau-tilting modules over the linear algebra avoiding ``P_1 .. P_{n-r+1}``."""
    A = make_uniform("linear", n, r)
    banned = {A.projective(a) for a in range(1, n - r + 2)}
    return [p for p in enumerate_support_tau_tilting(A) if banned.isdisjoint(p.module)]


def set_Y(n: int, r: int, ell: int) -> list[SupportPair]:
    if not 0 <= ell <= n:
        raise ValueError(f"ell must lie in 0..{n}, got {ell}")
    A = make_uniform("linear", n, r)
    return [p for p in set_X(n, r) if _contains(A, p, range(1, ell + 1))]


def set_K(n: int, r: int, ell: int) -> list[SupportPair]:
    """Support tau-tilting modules over the cyclic algebra by how far back from ``S_n`` the support runs.

    ``ell = 0``: ``S_n`` is not a factor.  ``ell >= 1``: ``S_n .. S_{n-ell+1}``
    are factors but ``S_{n-ell}`` is not.
    """
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in 0..{n - 1}, got {ell}")
    A = make_uniform("cyclic", n, r)
    out = []
    for p in enumerate_support_tau_tilting(A):
        supp = support(A, p.module)
        if all(v in supp for v in range(n - ell + 1, n + 1)) and (n - ell) not in supp:
            out.append(p)
    return out


def set_K_np(n: int, r: int, ell: int) -> list[SupportPair]:
    """Members of ``set_K`` without projective summands over the cyclic algebra."""
    A = make_uniform("cyclic", n, r)
    return [p for p in set_K(n, r, ell) if not has_parent_projective(A, p.module)]


def render_module(module: ModuleSet) -> str:
    if not module:
        return "0"
    return "+".join(str(m) for m in module)
