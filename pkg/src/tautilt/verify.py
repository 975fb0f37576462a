"""Cross-validation harness: brute-force enumeration against the exact formulas.

Each check group is a function returning ``None`` on success or a string
describing the first counterexample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb, isclose, sqrt
from typing import Callable, Iterator, List, Optional, Sequence

from . import golden, oracle, spectral
from .algebra import (
    AlgebraSpec,
    above,
    below,
    indecomposables,
    make_linear_kupisch,
    make_uniform,
    support,
    tau,
)
from .counting import ENGINE, CountEngine, InconsistencyError

Check = Callable[["VerifyConfig"], Optional[str]]


@dataclass
class VerifyConfig:
    n_max_lin: int = 8
    r_max_lin: int = 6
    n_max_cyc: int = 8
    r_max_cyc: int = 5
    tol: float = 1e-8
    random_kupisch: int = 200
    random_n_max: int = 10
    seed: int = 0
    engine: CountEngine = ENGINE

    def linear_algebras(self) -> Iterator[tuple[int, int, AlgebraSpec]]:
        for r in range(1, self.r_max_lin + 1):
            for n in range(1, self.n_max_lin + 1):
                yield n, r, make_uniform("linear", n, r)

    def cyclic_algebras(self) -> Iterator[tuple[int, int, AlgebraSpec]]:
        for r in range(1, self.r_max_cyc + 1):
            for n in range(1, self.n_max_cyc + 1):
                yield n, r, make_uniform("cyclic", n, r)

    def all_algebras(self) -> Iterator[AlgebraSpec]:
        for _, _, A in self.linear_algebras():
            yield A
        for _, _, A in self.cyclic_algebras():
            yield A
        yield make_linear_kupisch(golden.MIXED_KUPISCH)


def random_kupisch(rng: random.Random, n: int) -> tuple[int, ...]:
    """Uniformly chosen admissible entry at each step, built from the sink backwards."""
    c = [1]
    for _ in range(n - 1):
        c.append(rng.randint(1, c[-1] + 1))
    return tuple(reversed(c))


def _mismatch(what: str, got, expected) -> Optional[str]:
    if got != expected:
        return f"{what}: got {got}, expected {expected}"
    return None


def check_oracle_equivalence(cfg: VerifyConfig) -> Optional[str]:
    e = cfg.engine
    for n, r, A in cfg.linear_algebras():
        if msg := _mismatch(f"tau-tilt {A}", len(oracle.enumerate_tau_tilting(A)), e.t_lin(r, n)):
            return msg
        if msg := _mismatch(f"s-tau-tilt {A}", len(oracle.enumerate_support_tau_tilting(A)), e.s_lin(r, n)):
            return msg
    for n, r, A in cfg.cyclic_algebras():
        if msg := _mismatch(f"tau-tilt {A}", len(oracle.enumerate_tau_tilting(A)), e.t_cyc(r, n)):
            return msg
        if msg := _mismatch(f"s-tau-tilt {A}", len(oracle.enumerate_support_tau_tilting(A)), e.s_cyc(r, n)):
            return msg
    return None


def check_enumeration_invariants(cfg: VerifyConfig) -> Optional[str]:
    """Rigidity, sincerity and the support = tau + proper split on every enumerated module."""
    for A in cfg.all_algebras():
        g = oracle.build_compat_graph(A)
        for m in indecomposables(A):
            tau(A, m)  # asserts the translate is a valid module
        full = frozenset(range(1, A.n + 1))
        taus = oracle.enumerate_tau_tilting(A)
        for M in taus:
            if not g.is_rigid(M) or len(M) != A.n:
                return f"{A}: {oracle.render_module(M)} is not tau-tilting"
            if support(A, M) != full:
                return f"{A}: tau-tilting {oracle.render_module(M)} is not sincere"
        pairs = oracle.enumerate_support_tau_tilting(A)
        if len(set(p.module for p in pairs)) != len(pairs):
            return f"{A}: duplicate support tau-tilting modules"
        for p in pairs:
            if support(A, p.module) != full - p.killed:
                return f"{A}: {oracle.render_module(p.module)} has support inconsistent with killed {sorted(p.killed)}"
        proper, _ = oracle.filter_proper_np(A, pairs)
        if msg := _mismatch(f"{A}: |s-tau-tilt|", len(pairs), len(taus) + len(proper)):
            return msg
    return None


def check_tau_vs_proper_np(cfg: VerifyConfig) -> Optional[str]:
    for A in cfg.all_algebras():
        _, proper_np = oracle.filter_proper_np(A, oracle.enumerate_support_tau_tilting(A))
        if msg := _mismatch(f"{A}: |proper without projectives|", len(proper_np), len(oracle.enumerate_tau_tilting(A))):
            return msg
    return None


def check_first_projective_summand(cfg: VerifyConfig) -> Optional[str]:
    linear = [A for _, _, A in cfg.linear_algebras()] + [make_linear_kupisch(golden.MIXED_KUPISCH)]
    for A in linear:
        P1 = A.projective(1)
        for M in oracle.enumerate_tau_tilting(A):
            if P1 not in M:
                return f"{A}: {oracle.render_module(M)} lacks {P1}"
    return None


def _linear_with_general(cfg: VerifyConfig) -> List[AlgebraSpec]:
    return [A for _, _, A in cfg.linear_algebras()] + [make_linear_kupisch(golden.MIXED_KUPISCH)]


def check_w_decomposition(cfg: VerifyConfig) -> Optional[str]:
    """|W_i| = |tau-tilt below i| * |s-tau-tilt above i|, and the W_i partition the proper ones."""
    e = cfg.engine
    for A in _linear_with_general(cfg):
        total = 0
        for i in range(1, A.n + 1):
            w = len(oracle.filter_W(A, i))
            lo, hi = below(A, i), above(A, i)
            by_enum = len(oracle.enumerate_tau_tilting(lo)) * len(oracle.enumerate_support_tau_tilting(hi))
            by_formula = e.tau_count_general(lo.kupisch) * e.stau_count_general(hi.kupisch)
            if msg := _mismatch(f"{A}: |W_{i}|", w, by_enum) or _mismatch(f"{A}: |W_{i}| formula", w, by_formula):
                return msg
            total += w
        proper, _ = oracle.filter_proper_np(A, oracle.enumerate_support_tau_tilting(A))
        if msg := _mismatch(f"{A}: sum |W_i|", total, len(proper)):
            return msg
    return None


def check_v_sets(cfg: VerifyConfig) -> Optional[str]:
    e = cfg.engine
    for A in _linear_with_general(cfg):
        for ell in range(1, A.n + 1):
            if msg := _mismatch(f"{A}: |V_{ell}|", len(oracle.filter_V(A, ell)), e.v_count(A.kupisch, ell)):
                return msg
    return None


def check_general_linear(cfg: VerifyConfig) -> Optional[str]:
    """General-Kupisch formulas against enumeration and against each other."""
    e = cfg.engine
    rng = random.Random(cfg.seed)
    for k in range(cfg.random_kupisch):
        c = random_kupisch(rng, rng.randint(1, cfg.random_n_max))
        try:
            t, s, ps = e.tau_count_general(c), e.stau_count_general(c), e.ps_count_general(c)
        except InconsistencyError as exc:
            return str(exc)
        if len(c) <= 7:
            A = make_linear_kupisch(c)
            pairs = oracle.enumerate_support_tau_tilting(A)
            proper, _ = oracle.filter_proper_np(A, pairs)
            if msg := (
                _mismatch(f"tau-tilt {A}", t, len(oracle.enumerate_tau_tilting(A)))
                or _mismatch(f"s-tau-tilt {A}", s, len(pairs))
                or _mismatch(f"ps-tau-tilt {A}", ps, len(proper))
            ):
                return msg
    for _, r, A in cfg.linear_algebras():
        if msg := (
            _mismatch(f"general tau {A}", e.tau_count_general(A.kupisch), e.t_lin(r, A.n))
            or _mismatch(f"general support {A}", e.stau_count_general(A.kupisch), e.s_lin(r, A.n))
        ):
            return msg
    return None


def check_mixed_example(cfg: VerifyConfig) -> Optional[str]:
    e = cfg.engine
    c = golden.MIXED_KUPISCH
    A = make_linear_kupisch(c)
    for i, expected in golden.MIXED_SUBTABLE.items():
        lo, hi = below(A, i), above(A, i)
        by_enum = (
            len(oracle.enumerate_tau_tilting(lo)),
            len(oracle.enumerate_support_tau_tilting(hi)),
            len(oracle.enumerate_support_tau_tilting(lo)),
            len(oracle.enumerate_tau_tilting(hi)),
        )
        by_formula = (
            e.tau_count_general(lo.kupisch),
            e.stau_count_general(hi.kupisch),
            e.stau_count_general(lo.kupisch),
            e.tau_count_general(hi.kupisch),
        )
        if msg := _mismatch(f"row i={i} (enumeration)", by_enum, expected) or _mismatch(
            f"row i={i} (formulas)", by_formula, expected
        ):
            return msg
    pairs = oracle.enumerate_support_tau_tilting(A)
    proper, _ = oracle.filter_proper_np(A, pairs)
    got_enum = {"tau": len(oracle.enumerate_tau_tilting(A)), "proper": len(proper), "support": len(pairs)}
    got_formula = {"tau": e.tau_count_general(c), "proper": e.ps_count_general(c), "support": e.stau_count_general(c)}
    return _mismatch("totals (enumeration)", got_enum, golden.MIXED_TOTALS) or _mismatch(
        "totals (formulas)", got_formula, golden.MIXED_TOTALS
    )


def check_x_y_sets(cfg: VerifyConfig) -> Optional[str]:
    e = cfg.engine
    for r in range(1, cfg.r_max_lin + 1):
        for n in range(0, cfg.n_max_lin + 1):
            X = oracle.set_X(n, r)
            if msg := _mismatch(f"|X_{n}| r={r}", len(X), e.x_count(r, n)):
                return msg
            if n + 1 <= r and len(X) != e.s_lin(r, n):
                return f"X_{n} r={r} should be every support tau-tilting module"
            for ell in range(0, n + 1):
                if msg := _mismatch(f"|Y_{n},{ell}| r={r}", len(oracle.set_Y(n, r, ell)), e.y_count(r, n, ell)):
                    return msg
    return None


def check_k_sets(cfg: VerifyConfig) -> Optional[str]:
    e = cfg.engine
    for n, r, A in cfg.cyclic_algebras():
        total = 0
        for ell in range(0, n):
            k = len(oracle.set_K(n, r, ell))
            total += k
            if msg := _mismatch(f"|K_{n},{ell}| r={r}", k, e.k_count(r, n, ell)):
                return msg
            if ell >= 1 and n >= 2:
                lin = make_uniform("linear", n - 1, r)
                if msg := _mismatch(f"|K_{n},{ell}| vs |V_{ell}| r={r}", k, e.v_count(lin.kupisch, ell)):
                    return msg
            if msg := _mismatch(
                f"|K_{n},{ell} without projectives| r={r}", len(oracle.set_K_np(n, r, ell)), e.y_count(r, n - 1, ell)
            ):
                return msg
        if msg := _mismatch(f"sum |K_{n},l| r={r}", total, e.ps_cyc(r, n)):
            return msg
    return None


def check_two_paths(cfg: VerifyConfig, r_max: int = 6, n_max: int = 30) -> Optional[str]:
    """Every second evaluation path, recomputed here from scratch on a fresh engine."""
    e = CountEngine(checks=True)
    C = e.catalan
    try:
        for r in range(1, r_max + 1):
            t = {m: e.t_lin(r, m) for m in range(-r - 1, n_max + 1)}
            s = {m: e.s_lin(r, m) for m in range(-r - 1, n_max + 1)}
            for n in range(1, n_max + 1):
                tc = e.t_cyc(r, n)
                if n > r:
                    rec = sum(C(i - 1) * e.t_cyc(r, n - i) for i in range(1, r + 1))
                else:
                    rec = comb(2 * n - 1, n - 1)
                if msg := _mismatch(f"t_cyc({r},{n}) two paths", tc, rec):
                    return msg
                conv = sum(t[i - 1] * s[n - i] for i in range(1, n + 1)) + t[n]
                if msg := _mismatch(f"s_lin({r},{n}) two paths", s[n], conv):
                    return msg
                sc = e.ps_cyc(r, n) + tc
                if n > r:
                    rec = 2 * e.s_cyc(r, n - 1) + sum(C(i - 1) * e.s_cyc(r, n - i) for i in range(2, r + 1))
                else:
                    rec = comb(2 * n, n)
                if msg := _mismatch(f"s_cyc({r},{n}) two paths", sc, rec):
                    return msg
        rng = random.Random(cfg.seed + 1)
        for _ in range(cfg.random_kupisch):
            e.ps_count_general(random_kupisch(rng, rng.randint(1, cfg.random_n_max)))
    except InconsistencyError as exc:
        return str(exc)
    return None


def check_tables(cfg: VerifyConfig) -> Optional[str]:
    """Published tables, with known misprints replaced by their enumerated values."""
    e = cfg.engine
    fns = {"t_lin": e.t_lin, "s_lin": e.s_lin, "t_cyc": e.t_cyc, "s_cyc": e.s_cyc}
    for (name, r, n), value in golden.ERRATA.items():
        A = make_uniform("linear" if name.endswith("lin") else "cyclic", n, r)
        enum = oracle.enumerate_tau_tilting if name.startswith("t") else oracle.enumerate_support_tau_tilting
        if msg := _mismatch(f"erratum {name}({r},{n}) by enumeration", len(enum(A)), value):
            return msg
    for name in golden.TABLES:
        for r, row in enumerate(golden.corrected(name), start=1):
            for n, expected in enumerate(row, start=1):
                if msg := _mismatch(f"{name}({r},{n})", fns[name](r, n), expected):
                    return msg
    return None


def check_catalan_diagonal(cfg: VerifyConfig, n_max: int = 14) -> Optional[str]:
    e = cfg.engine
    for n in range(0, n_max + 1):
        for r in range(max(n, 1), n_max + 3):
            if msg := _mismatch(f"t_lin({r},{n})", e.t_lin(r, n), e.catalan(n)) or _mismatch(
                f"s_lin({r},{n})", e.s_lin(r, n), e.catalan(n + 1)
            ):
                return msg
        if msg := _mismatch(
            f"Catalan convolution {n}",
            sum(e.catalan(i - 1) * e.catalan(n - i) for i in range(1, n + 1)) if n else 1,
            e.catalan(n),
        ):
            return msg
    return None


def check_lucas(cfg: VerifyConfig, n_max: int = 30) -> Optional[str]:
    e = cfg.engine
    phi, psi = (1 + sqrt(5)) / 2, (1 - sqrt(5)) / 2
    for n in range(1, n_max + 1):
        exact = e.t_cyc(2, n)
        closed = phi ** n + psi ** n
        if msg := _mismatch(f"lucas({n})", e.lucas(n), exact) or _mismatch(f"round(phi^n+psi^n), n={n}", round(closed), exact):
            return msg
        if not isclose(closed, exact, rel_tol=cfg.tol):
            return f"phi^{n}+psi^{n} = {closed!r} not within {cfg.tol} of {exact}"
    return None


def check_spectral(cfg: VerifyConfig, r_max: int = 6, n_max: int = 20) -> Optional[str]:
    try:
        for r in range(1, r_max + 1):
            spectral.vieta_check(r, cfg.tol)
            spectral.power_sum_check(r, n_max, cfg.tol)
            spectral.homog_check(r, n_max, cfg.tol)
        if not isclose(spectral.dominant_growth(2), (1 + sqrt(5)) / 2, abs_tol=1e-10):
            return "dominant root for r=2 is not the golden ratio"
    except (spectral.SpectralCheckError, spectral.RootFindingError) as exc:
        return str(exc)
    return None


GROUPS: List[tuple[str, Check]] = [
    ("tables", check_tables),
    ("catalan_diagonal", check_catalan_diagonal),
    ("lucas", check_lucas),
    ("two_paths", check_two_paths),
    ("spectral", check_spectral),
    ("oracle_vs_engine", check_oracle_equivalence),
    ("enumeration_invariants", check_enumeration_invariants),
    ("tau_vs_proper_np", check_tau_vs_proper_np),
    ("first_projective_summand", check_first_projective_summand),
    ("mixed_kupisch_example", check_mixed_example),
    ("w_decomposition", check_w_decomposition),
    ("v_sets", check_v_sets),
    ("general_linear", check_general_linear),
    ("x_y_sets", check_x_y_sets),
    ("k_sets", check_k_sets),
]


def _errata_note() -> str:
    return "; ".join(
        f"printed {name}({r},{n}) = {golden.TABLES[name][r - 1][n - 1]} replaced by enumerated {value}"
        for (name, r, n), value in golden.ERRATA.items()
    )


NOTES = {"tables": _errata_note}


@dataclass
class GroupResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name} ({self.seconds:.2f}s){tail}"


def run_verification(cfg: Optional[VerifyConfig] = None, groups: Optional[Sequence[str]] = None) -> List[GroupResult]:
    cfg = cfg or VerifyConfig()
    results = []
    for name, fn in GROUPS:
        if groups and name not in groups:
            continue
        start = time.perf_counter()
        try:
            detail = fn(cfg)
        except (InconsistencyError, AssertionError) as exc:
            detail = f"{type(exc).__name__}: {exc}"
        ok = detail is None
        if ok and name in NOTES:
            detail = NOTES[name]()
        results.append(GroupResult(name, ok, detail or "", time.perf_counter() - start))
    return results
