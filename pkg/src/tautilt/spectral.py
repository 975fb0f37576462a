"""Roots of the characteristic polynomial of the Catalan recurrence.

``F_r(X) = X^r - C_0 X^{r-1} - C_1 X^{r-2} - ... - C_{r-1}`` governs both
``t_lin(r, .)`` and ``t_cyc(r, .)``: the linear counts are the complete
homogeneous symmetric polynomials of the roots and the cyclic counts are
their power sums.  Roots are computed numerically; exact integer counts
come from :mod:`tautilt.counting`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import counting

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_CHECK_TOL = 1e-8
MIN_GAP = 1e-6


class RootFindingError(ArithmeticError):
    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual


class SpectralCheckError(AssertionError):
    pass


@dataclass(frozen=True)
class CharPoly:
    r: int
    coeffs: Tuple[int, ...]  # c_0 .. c_r, leading first

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def derivative(self, x: complex) -> complex:
        acc = 0j
        r = self.r
        for i, c in enumerate(self.coeffs[:-1]):
            acc = acc * x + (r - i) * c
        return acc

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = self.r - i
            mono = "" if power == 0 else "X" if power == 1 else f"X^{power}"
            term = (str(abs(c)) if abs(c) != 1 or power == 0 else "") + mono
            if parts:
                parts.append(("- " if c < 0 else "+ ") + term)
            else:
                parts.append(("-" if c < 0 else "") + term)
        return " ".join(parts)


@dataclass(frozen=True)
class RootSet:
    poly: CharPoly
    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    min_gap: float

    @property
    def distinct(self) -> bool:
        return self.min_gap > MIN_GAP


def char_poly(r: int) -> CharPoly:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return CharPoly(r, (1,) + tuple(-counting.catalan(i - 1) for i in range(1, r + 1)))


def _sort_key(z: complex):
    return (round(z.real, 9), round(z.imag, 9))


def find_roots(p: CharPoly, tol: float = DEFAULT_ROOT_TOL, polish_steps: int = 8) -> RootSet:
    """Companion-matrix eigenvalues, refined by Newton steps.

    Every root must satisfy ``|F(root)| <= tol * max|coeff|``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    scale = max(abs(c) for c in p.coeffs)
    raw = np.roots(np.array(p.coeffs, dtype=float))
    roots: List[complex] = []
    residuals: List[float] = []
    for z in raw:
        z = complex(z)
        best, best_res = z, abs(p(z))
        for _ in range(polish_steps):
            d = p.derivative(z)
            if d == 0:
                break
            z = z - p(z) / d
            res = abs(p(z))
            if res < best_res:
                best, best_res = z, res
        if best_res > tol * scale:
            raise RootFindingError(f"root of F_{p.r} near {best:.6g} did not converge", best_res)
        if abs(best.imag) <= tol * max(1.0, abs(best)):
            best = complex(best.real, 0.0)
        roots.append(best)
        residuals.append(best_res)

    order = sorted(range(len(roots)), key=lambda i: _sort_key(roots[i]))
    roots = [roots[i] for i in order]
    residuals = [residuals[i] for i in order]
    gaps = [abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:]]
    return RootSet(p, tuple(roots), tuple(residuals), min(gaps) if gaps else float("inf"))


def expand_roots(roots) -> np.ndarray:
    """Coefficients of prod (X - root), leading first."""
    coeffs = np.array([1.0 + 0j])
    for z in roots:
        coeffs = np.append(coeffs, 0) - z * np.append(0, coeffs)
    return coeffs


def elementary_symmetric(roots) -> List[complex]:
    """``E_0 .. E_r`` of the given roots."""
    coeffs = expand_roots(roots)
    return [complex((-1) ** i * c) for i, c in enumerate(coeffs)]


@dataclass
class CheckReport:
    name: str
    r: int
    rows: List[Tuple[int, complex, int, float]] = field(default_factory=list)
    skipped: bool = False
    notice: str = ""

    @property
    def max_rel_error(self) -> float:
        return max((row[3] for row in self.rows), default=0.0)

    def __str__(self) -> str:
        if self.skipped:
            return f"{self.name} r={self.r}: SKIPPED ({self.notice})"
        return f"{self.name} r={self.r}: {len(self.rows)} values, max rel error {self.max_rel_error:.2e}"


def vieta_check(r: int, tol: float = DEFAULT_CHECK_TOL, roots: Optional[RootSet] = None) -> float:
    """Relative error of ``E_i(roots) = (-1)^i c_i``; raises if above ``tol``."""
    rs = roots or find_roots(char_poly(r))
    E = elementary_symmetric(rs.roots)
    scale = max(abs(c) for c in rs.poly.coeffs)
    err = max(abs(E[i] - (-1) ** i * c) for i, c in enumerate(rs.poly.coeffs)) / scale
    if err > tol:
        raise SpectralCheckError(f"Vieta reconstruction for r={r} off by {err:.3e}")
    return err


def _compare(report: CheckReport, n: int, approx: complex, exact: int, tol: float) -> None:
    rel = abs(approx.real - exact) / max(abs(exact), 1)
    report.rows.append((n, approx, exact, rel))
    if rel > tol or abs(approx.imag) > tol * max(abs(exact), 1):
        raise SpectralCheckError(
            f"{report.name}: r={report.r}, n={n}: numeric {approx:.12g} vs exact {exact}"
        )


def power_sum_check(r: int, n_max: int, tol: float = DEFAULT_CHECK_TOL) -> CheckReport:
    """Compare ``sum_i root_i^n`` with the cyclic tau-tilting counts."""
    rs = find_roots(char_poly(r))
    report = CheckReport("power_sum", r)
    z = np.array(rs.roots)
    for n in range(1, n_max + 1):
        _compare(report, n, complex(np.sum(z ** n)), counting.t_cyc(r, n), tol)
    return report


def homog_check(r: int, n_max: int, tol: float = DEFAULT_CHECK_TOL) -> CheckReport:
    """Compare ``H_n(roots)`` with the linear tau-tilting counts.

    Uses ``H_n = sum_i root_i^(n+r-1) / prod_{j != i} (root_i - root_j)``,
    valid only for simple roots; skipped when two roots nearly coincide.
    """
    rs = find_roots(char_poly(r))
    report = CheckReport("homog", r)
    if not rs.distinct:
        report.skipped = True
        report.notice = f"min root gap {rs.min_gap:.2e} below {MIN_GAP:g}"
        return report
    z = rs.roots
    denom = [complex(np.prod([zi - zj for j, zj in enumerate(z) if j != i])) for i, zi in enumerate(z)]
    for n in range(0, n_max + 1):
        approx = sum(zi ** (n + r - 1) / d for zi, d in zip(z, denom))
        _compare(report, n, complex(approx), counting.t_lin(r, n), tol)
    return report


def dominant_growth(r: int) -> float:
    """Spectral radius of ``F_r``: the asymptotic growth rate of the counts."""
    return max(abs(z) for z in find_roots(char_poly(r)).roots)
