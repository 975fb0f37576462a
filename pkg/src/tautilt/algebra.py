"""Combinatorial model of Nakayama algebras and their uniserial modules.

An algebra is determined by its shape (linear ``1 -> 2 -> ... -> n`` or
cyclic, with an extra arrow ``n -> 1``) and its Kupisch series
``c_1, ..., c_n``, where ``c_a`` is the Loewy length of the projective
at vertex ``a``.  Every indecomposable module is uniserial and is encoded
as ``(top, length)``; its composition factors are
``S_top, S_{top+1}, ..., S_{top+length-1}`` (indices mod ``n`` for cyclic
algebras).  Vertices are 1-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple


class Shape(str, Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"


class InvalidAlgebraError(ValueError):
    """Raised for Kupisch series that do not describe a Nakayama algebra."""


class Indec(NamedTuple):
    """Indecomposable (uniserial) module with top ``S_top`` and given length."""

    top: int
    len: int

    def __str__(self) -> str:
        return f"M({self.top},{self.len})"


ModuleSet = Tuple[Indec, ...]


def module_set(items: Iterable[Indec]) -> ModuleSet:
    """Canonical basic module: duplicate-free, sorted by (top, len)."""
    return tuple(sorted(set(Indec(*m) for m in items)))


@dataclass(frozen=True)
class AlgebraSpec:
    shape: Shape
    kupisch: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", Shape(self.shape))
        object.__setattr__(self, "kupisch", tuple(int(c) for c in self.kupisch))
        _validate(self.shape, self.kupisch)

    @property
    def n(self) -> int:
        return len(self.kupisch)

    @property
    def is_linear(self) -> bool:
        return self.shape is Shape.LINEAR

    def c(self, a: int) -> int:
        """Loewy length of the projective at vertex ``a``."""
        return self.kupisch[a - 1]

    def projective(self, a: int) -> Indec:
        return Indec(a, self.c(a))

    def is_projective(self, m: Indec) -> bool:
        return m.len == self.c(m.top)

    def succ(self, a: int) -> int:
        """Target of the arrow starting at ``a`` (wrapping for cyclic shape)."""
        if self.is_linear:
            return a + 1
        return a % self.n + 1

    def __str__(self) -> str:
        return f"{self.shape.value}[{','.join(map(str, self.kupisch))}]"


def _validate(shape: Shape, c: Sequence[int]) -> None:
    n = len(c)
    for a, ca in enumerate(c, start=1):
        if ca <= 0:
            raise InvalidAlgebraError(f"kupisch entry c_{a} = {ca} must be positive")
    if n == 0:
        return
    if shape is Shape.CYCLIC:
        if len(set(c)) != 1:
            raise InvalidAlgebraError("cyclic algebras must have a uniform Kupisch series")
        return
    if c[-1] != 1:
        raise InvalidAlgebraError(f"kupisch entry c_{n} = {c[-1]} must equal 1 (sink vertex)")
    for a in range(1, n):
        if c[a - 1] > c[a] + 1:
            raise InvalidAlgebraError(
                f"kupisch entry at index {a}: c_{a} = {c[a - 1]} exceeds c_{a + 1} + 1 = {c[a] + 1}"
            )


def make_uniform(shape: Shape | str, n: int, r: int) -> AlgebraSpec:
    """The algebra ``K Q / rad^r`` on the linear or cyclic quiver with ``n`` vertices."""
    shape = Shape(shape)
    if n < 0:
        raise InvalidAlgebraError(f"vertex count must be >= 0, got {n}")
    if r < 1:
        raise InvalidAlgebraError(f"radical power must be >= 1, got {r}")
    if shape is Shape.LINEAR:
        return AlgebraSpec(shape, tuple(min(r, n - a + 1) for a in range(1, n + 1)))
    return AlgebraSpec(shape, (r,) * n)


def make_linear_kupisch(c: Sequence[int]) -> AlgebraSpec:
    return AlgebraSpec(Shape.LINEAR, tuple(c))


ZERO_ALGEBRA = AlgebraSpec(Shape.LINEAR, ())


def indecomposables(A: AlgebraSpec) -> list[Indec]:
    return [Indec(a, l) for a in range(1, A.n + 1) for l in range(1, A.c(a) + 1)]


def tau(A: AlgebraSpec, m: Indec) -> Optional[Indec]:
    """Auslander-Reiten translate; ``None`` stands for the zero module."""
    if A.is_projective(m):
        return None
    t = Indec(A.succ(m.top), m.len)
    assert 1 <= t.top <= A.n and t.len <= A.c(t.top), (A, m, t)
    return t


def hom_dim(A: AlgebraSpec, m: Indec, n: Indec) -> int:
    """Dimension of Hom(m, n).

    A nonzero map factors through a length-``k`` quotient of ``m`` that is
    the length-``k`` submodule of ``n``; this forces ``top(m)`` to be the
    ``(len(n) - k + 1)``-th composition factor of ``n``.
    """
    a, l = m
    b, k_max = n
    if A.is_linear:
        k = b + k_max - a
        return int(1 <= k <= min(l, k_max))
    size = A.n
    k0 = (b + k_max - a - 1) % size + 1
    bound = min(l, k_max)
    if k0 > bound:
        return 0
    return (bound - k0) // size + 1


def hom_nonzero(A: AlgebraSpec, m: Indec, n: Optional[Indec]) -> bool:
    if n is None:
        return False
    return hom_dim(A, m, n) > 0


def composition_vertices(A: AlgebraSpec, m: Indec) -> Counter:
    """Multiset of composition factors of ``m`` (as vertex labels)."""
    a, l = m
    if A.is_linear:
        return Counter(range(a, a + l))
    return Counter((a - 1 + j) % A.n + 1 for j in range(l))


def support(A: AlgebraSpec, module: Iterable[Indec]) -> frozenset[int]:
    """Vertices appearing as composition factors of a direct sum."""
    out: set[int] = set()
    for m in module:
        out.update(composition_vertices(A, m))
    return frozenset(out)


class QuotientComponent(NamedTuple):
    algebra: AlgebraSpec
    # vertex_map[j - 1] is the parent vertex of component vertex j
    vertex_map: Tuple[int, ...]

    def lift(self, m: Indec) -> Indec:
        return Indec(self.vertex_map[m.top - 1], m.len)


def quotient_kill(A: AlgebraSpec, killed: Iterable[int]) -> list[QuotientComponent]:
    """Connected components of ``A / <e_T>`` for the vertex set ``T = killed``."""
    T = frozenset(killed)
    n = A.n
    bad = [v for v in T if not 1 <= v <= n]
    if bad:
        raise ValueError(f"killed vertices out of range 1..{n}: {sorted(bad)}")
    if not T:
        return [QuotientComponent(A, tuple(range(1, n + 1)))] if n else []

    if A.is_linear:
        order = list(range(1, n + 1))
    else:
        # start right after a killed vertex so no segment wraps past the start
        first = min(T)
        order = [(first + j) % n + 1 for j in range(n)]

    segments: list[list[int]] = []
    current: list[int] = []
    for v in order:
        if v in T:
            if current:
                segments.append(current)
            current = []
        else:
            current.append(v)
    if current:
        segments.append(current)

    comps = []
    for seg in segments:
        q = len(seg)
        kup = tuple(min(A.c(v), q - j) for j, v in enumerate(seg))
        comps.append(QuotientComponent(AlgebraSpec(Shape.LINEAR, kup), tuple(seg)))
    return comps


def _single(comps: list[QuotientComponent]) -> AlgebraSpec:
    if not comps:
        return ZERO_ALGEBRA
    assert len(comps) == 1
    return comps[0].algebra


def below(A: AlgebraSpec, i: int) -> AlgebraSpec:
    """``A / <e_i + ... + e_n>`` on vertices ``1..i-1`` (linear ``A``)."""
    return _single(quotient_kill(A, range(i, A.n + 1)))


def above(A: AlgebraSpec, i: int) -> AlgebraSpec:
    """``A / <e_1 + ... + e_i>`` on vertices ``i+1..n`` (linear ``A``)."""
    return _single(quotient_kill(A, range(1, i + 1)))
