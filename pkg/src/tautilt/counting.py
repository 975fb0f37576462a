"""Exact counting formulas for (support) tau-tilting modules.

Uniform families are keyed by ``(family, r, n)``:

========  ==============================================================
T_LIN     tau-tilting modules over the linear algebra ``K A_n / rad^r``
S_LIN     support tau-tilting modules over the same
PS_LIN    proper support tau-tilting modules (``S_LIN - T_LIN``)
T_CYC     tau-tilting modules over the cyclic algebra ``K A~_n / rad^r``
S_CYC     support tau-tilting modules over the same
PS_CYC    proper support tau-tilting modules over the same
========  ==============================================================

Every family with a second independent formula is evaluated both ways and
the results compared; a mismatch raises :class:`InconsistencyError`.
General linear Nakayama algebras are handled by the ``*_general``
functions, memoized on the Kupisch series.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Callable, Dict, Sequence, Tuple

T_LIN = "T_LIN"
S_LIN = "S_LIN"
PS_LIN = "PS_LIN"
T_CYC = "T_CYC"
S_CYC = "S_CYC"
PS_CYC = "PS_CYC"
FAMILIES = (T_LIN, S_LIN, PS_LIN, T_CYC, S_CYC, PS_CYC)
CYCLIC_FAMILIES = (T_CYC, S_CYC, PS_CYC)


class InconsistencyError(RuntimeError):
    """Two independent evaluations of the same count disagree."""


Kupisch = Tuple[int, ...]


def prefix_kupisch(c: Sequence[int], i: int) -> Kupisch:
    """Kupisch series of the algebra on vertices ``1..i-1`` after killing ``i..n``."""
    return tuple(min(c[j - 1], i - j) for j in range(1, i))


def suffix_kupisch(c: Sequence[int], i: int) -> Kupisch:
    """Kupisch series of the algebra on vertices ``i+1..n`` after killing ``1..i``."""
    return tuple(c[i:])


class CountEngine:
    """Memoized exact evaluator.

    The memo is the only mutable state.  Inserts are idempotent and guarded
    by a lock, so concurrent callers see identical values.  ``checks=False``
    skips the second evaluation path.
    """

    def __init__(self, checks: bool = True):
        self.checks = checks
        self.memo: Dict[Tuple[str, int, int], int] = {}
        self._general: Dict[Tuple[str, Kupisch], int] = {}
        self._catalan = [1]
        self._lock = threading.RLock()
        # number of values computed (not served from the memo)
        self.computed = 0

    # -- memo plumbing -------------------------------------------------
    def _store(self, key, value: int, table=None) -> int:
        table = self.memo if table is None else table
        with self._lock:
            old = table.setdefault(key, value)
        if old != value:
            raise InconsistencyError(f"{key}: memo holds {old}, recomputed {value}")
        return old

    def _agree(self, what: str, primary: int, other: int) -> int:
        if primary != other:
            raise InconsistencyError(f"{what}: {primary} != {other}")
        return primary

    def preload(self, entries: Dict[Tuple[str, int, int], int]) -> None:
        with self._lock:
            self.memo.update(entries)

    def _fill(self, family: str, r: int, n: int, start: int, step: Callable[[int], int]) -> int:
        if (family, r, n) in self.memo:
            return self.memo[family, r, n]
        for m in range(start, n + 1):
            if (family, r, m) not in self.memo:
                self.computed += 1
                self._store((family, r, m), step(m))
        return self.memo[family, r, n]

    # -- Catalan numbers -----------------------------------------------
    def catalan(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"Catalan index must be >= 0, got {i}")
        cat = self._catalan
        while len(cat) <= i:
            m = len(cat)
            conv = sum(cat[k - 1] * cat[m - k] for k in range(1, m + 1))
            if self.checks:
                self._agree(f"catalan({m})", comb(2 * m, m) // (m + 1), conv)
            with self._lock:
                if len(cat) == m:
                    cat.append(conv)
        return cat[i]

    # -- linear uniform ------------------------------------------------
    def t_lin(self, r: int, n: int) -> int:
        _check_r(r)
        if n < 0:
            return 0
        if n == 0:
            return 1
        C = self.catalan

        def step(m: int) -> int:
            return sum(C(i - 1) * self.t_lin(r, m - i) for i in range(1, r + 1))

        return self._fill(T_LIN, r, n, 1, step)

    def s_lin(self, r: int, n: int) -> int:
        _check_r(r)
        if n < 0:
            return 0
        if n == 0:
            return 1
        C = self.catalan

        def step(m: int) -> int:
            value = 2 * self.s_lin(r, m - 1) + sum(
                C(i - 1) * self.s_lin(r, m - i) for i in range(2, r + 1)
            )
            if self.checks:
                conv = sum(self.t_lin(r, i - 1) * self.s_lin(r, m - i) for i in range(1, m + 1))
                self._agree(f"s_lin({r},{m})", value, conv + self.t_lin(r, m))
            return value

        return self._fill(S_LIN, r, n, 1, step)

    def ps_lin(self, r: int, n: int) -> int:
        return self.s_lin(r, n) - self.t_lin(r, n)

    # -- cyclic uniform ------------------------------------------------
    def t_cyc(self, r: int, n: int) -> int:
        _check_r(r)
        _check_cyclic_n(n)
        C = self.catalan

        def step(m: int) -> int:
            value = sum(i * C(i - 1) * self.t_lin(r, m - i) for i in range(1, r + 1))
            if self.checks:
                if m <= r:
                    # every projective has Loewy length >= m
                    other = comb(2 * m - 1, m - 1)
                else:
                    other = sum(C(i - 1) * self.t_cyc(r, m - i) for i in range(1, r + 1))
                self._agree(f"t_cyc({r},{m})", value, other)
            return value

        return self._fill(T_CYC, r, n, 1, step)

    def ps_cyc(self, r: int, n: int) -> int:
        _check_r(r)
        _check_cyclic_n(n)
        t, s = self.t_lin, self.s_lin

        def step(m: int) -> int:
            return sum(i * t(r, i - 1) * s(r, m - i - 1) for i in range(1, m)) + m * t(r, m - 1)

        return self._fill(PS_CYC, r, n, 1, step)

    def s_cyc(self, r: int, n: int) -> int:
        _check_r(r)
        _check_cyclic_n(n)
        C = self.catalan

        def step(m: int) -> int:
            value = self.ps_cyc(r, m) + self.t_cyc(r, m)
            if self.checks:
                if m <= r:
                    other = comb(2 * m, m)
                else:
                    other = 2 * self.s_cyc(r, m - 1) + sum(
                        C(i - 1) * self.s_cyc(r, m - i) for i in range(2, r + 1)
                    )
                self._agree(f"s_cyc({r},{m})", value, other)
            return value

        return self._fill(S_CYC, r, n, 1, step)

    def count(self, family: str, r: int, n: int) -> int:
        family = family.upper()
        fn = {
            T_LIN: self.t_lin,
            S_LIN: self.s_lin,
            PS_LIN: self.ps_lin,
            T_CYC: self.t_cyc,
            S_CYC: self.s_cyc,
            PS_CYC: self.ps_cyc,
        }.get(family)
        if fn is None:
            raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
        return fn(r, n)

    # -- general linear Nakayama algebras ------------------------------
    def tau_count_general(self, c: Sequence[int]) -> int:
        c = tuple(c)
        if not c:
            return 1
        key = ("T", c)
        if key in self._general:
            return self._general[key]
        value = sum(
            self.catalan(i - 1) * self.tau_count_general(suffix_kupisch(c, i))
            for i in range(1, c[0] + 1)
        )
        return self._store(key, value, self._general)

    def ps_count_general(self, c: Sequence[int]) -> int:
        c = tuple(c)
        key = ("PS", c)
        if key in self._general:
            return self._general[key]
        n = len(c)
        t, s = self.tau_count_general, self.stau_count_general
        by_tau_first = sum(t(prefix_kupisch(c, i)) * s(suffix_kupisch(c, i)) for i in range(1, n + 1))
        if self.checks:
            by_s_first = sum(
                s(prefix_kupisch(c, i)) * t(suffix_kupisch(c, i)) for i in range(1, n + 1)
            )
            self._agree(f"ps_count_general({list(c)})", by_tau_first, by_s_first)
            # both expressions for the support count then coincide too
            tail = sum(self.catalan(i - 1) * t(suffix_kupisch(c, i)) for i in range(1, c[0] + 1))
            self._agree(f"stau_count_general({list(c)})", by_tau_first + tail, by_s_first + tail)
        return self._store(key, by_tau_first, self._general)

    def stau_count_general(self, c: Sequence[int]) -> int:
        c = tuple(c)
        if not c:
            return 1
        key = ("S", c)
        if key in self._general:
            return self._general[key]
        value = self.ps_count_general(c) + self.tau_count_general(c)
        return self._store(key, value, self._general)

    def v_count(self, c: Sequence[int], ell: int) -> int:
        """Support tau-tilting modules having ``S_1 .. S_ell`` as composition factors."""
        c = tuple(c)
        n = len(c)
        return sum(
            self.tau_count_general(prefix_kupisch(c, i)) * self.stau_count_general(suffix_kupisch(c, i))
            for i in range(ell + 1, n + 1)
        ) + self.tau_count_general(c)

    # -- named sets over uniform algebras ------------------------------
    def x_count(self, r: int, n: int) -> int:
        if n < 0:
            return 0
        return self.t_lin(r, n + 1)

    def y_count(self, r: int, n: int, ell: int) -> int:
        if ell >= r:
            return 0
        return sum(self.catalan(i - 1) * self.t_lin(r, n - i + 1) for i in range(ell + 1, r + 1))

    def k_count(self, r: int, n: int, ell: int) -> int:
        t, s = self.t_lin, self.s_lin
        return sum(t(r, i - 1) * s(r, n - i - 1) for i in range(ell + 1, n)) + t(r, n - 1)

    # -- Lucas numbers -------------------------------------------------
    @staticmethod
    def lucas(n: int) -> int:
        if n < 1:
            raise ValueError(f"Lucas index must be >= 1, got {n}")
        a, b = 1, 3
        for _ in range(n - 1):
            a, b = b, a + b
        return a


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


def _check_cyclic_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"cyclic counts need n >= 1, got {n}")


ENGINE = CountEngine()

catalan = ENGINE.catalan
t_lin = ENGINE.t_lin
s_lin = ENGINE.s_lin
ps_lin = ENGINE.ps_lin
t_cyc = ENGINE.t_cyc
s_cyc = ENGINE.s_cyc
ps_cyc = ENGINE.ps_cyc
count = ENGINE.count
tau_count_general = ENGINE.tau_count_general
stau_count_general = ENGINE.stau_count_general
ps_count_general = ENGINE.ps_count_general
v_count = ENGINE.v_count
x_count = ENGINE.x_count
y_count = ENGINE.y_count
k_count = ENGINE.k_count
lucas = CountEngine.lucas
