"""Fast psi formulas, psi-equality and psi-ordering decision procedures, and
the order-preserving bijection between groups with matching order spectra.

All formulas return exact integers and are expected to agree with the
brute-force sum ``psi_brute``; the verification harness asserts that
agreement over the whole catalog.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cp2 import cp2_from_filtration, is_cp2_omega
from .groups import (
    FiniteGroup,
    GroupError,
    NotCp2Error,
    OmegaChainError,
    order_spectrum,
    quotient,
)
from .omega import exponent_log, omega_filtration, omega_subgroup, psi_brute


@dataclass(frozen=True)
class HypothesisCheck:
    """One checked hypothesis in a comparison, with its outcome."""

    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class PsiComparison:
    """Result of comparing psi over two same-order groups.

    ``relation`` is the actual comparison of psi values.  When one of the
    ordering/equality theorems applies, ``theorem`` and ``predicted_relation``
    carry its prediction; ``summary`` is a stable one-line description and
    ``hypothesis_log`` records every hypothesis that was checked.
    """

    psi_p: int
    psi_q: int
    relation: str
    predicted_relation: str | None
    theorem: str | None
    summary: str
    hypothesis_log: tuple[HypothesisCheck, ...]


@dataclass(frozen=True)
class OrderBijection:
    """An order-preserving pairing of two groups' element indices."""

    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SpectrumMismatch:
    """No order-preserving bijection exists: the largest element order whose
    counts differ, with both counts."""

    order: int
    count_p: int
    count_q: int


def psi_top_recursion(group: FiniteGroup) -> int:
    """psi via the top reduction psi(G) = psi(M) + |M| p^m (|G|/|M| - 1) with
    M the level-(m-1) omega subgroup, recursing on M down to the trivial
    group.

    Raises OmegaChainError when some step has M equal to the whole group,
    which makes the reduction inapplicable; callers wanting a total function
    should fall back to psi_brute.
    """
    n = group.order
    if n == 1:
        return 1
    p, m = exponent_log(group)
    sub = omega_subgroup(group, m - 1)
    if len(sub) == n:
        raise OmegaChainError(
            f"Omega_{m - 1}({group.name}) is the whole group; reduction inapplicable")
    return psi_top_recursion(sub.as_group()) + len(sub) * p**m * (n // len(sub) - 1)


def psi_bottom_recursion(group: FiniteGroup) -> int:
    """psi via the quotient reduction psi(G) = 1 - p + p^(r+1) psi(G/N) with
    N the level-1 omega subgroup of size p^r, for CP2 p-groups."""
    if group.order == 1:
        return 1
    report = is_cp2_omega(group)
    if not report.is_cp2:
        raise NotCp2Error(
            f"{group.name} is not CP2 (omega set not closed at level "
            f"{report.failing_level}); quotient reduction needs CP2")
    p, _ = exponent_log(group)
    sub = omega_subgroup(group, 1)
    r = 0
    size = len(sub)
    while p**r < size:
        r += 1
    return 1 - p + p ** (r + 1) * psi_bottom_recursion(quotient(group, sub))


def psi_filtration(group: FiniteGroup) -> int:
    """psi from subgroup sizes alone:
    1 + sum_j (|Omega_j| - |Omega_(j-1)|) p^j, for CP2 p-groups."""
    if group.order == 1:
        return 1
    filtration = omega_filtration(group)
    report = cp2_from_filtration(filtration)
    if not report.is_cp2:
        raise NotCp2Error(
            f"{group.name} is not CP2 (omega set not closed at level "
            f"{report.failing_level}); the filtration formula needs CP2")
    sizes = filtration.subgroup_sizes
    return 1 + sum(
        (sizes[j] - sizes[j - 1]) * filtration.p**j for j in range(1, filtration.m + 1))


def _require_same_order_and_prime(p_group: FiniteGroup, q_group: FiniteGroup) -> int:
    if p_group.order != q_group.order:
        raise GroupError(
            f"order mismatch: |{p_group.name}| = {p_group.order}, "
            f"|{q_group.name}| = {q_group.order}")
    pp, _ = exponent_log(p_group)
    pq, _ = exponent_log(q_group)
    if pp != pq:
        raise GroupError(f"prime mismatch: {pp} vs {pq}")
    return pp


def psi_equal_via_omega(p_group: FiniteGroup, q_group: FiniteGroup) -> bool:
    """Decide psi equality of two CP2 p-groups of the same order from their
    filtrations alone: psi(P) = psi(Q) iff |Omega_i(P)| = |Omega_i(Q)| for
    all i."""
    _require_same_order_and_prime(p_group, q_group)
    filt_p = omega_filtration(p_group)
    filt_q = omega_filtration(q_group)
    for group, filt in ((p_group, filt_p), (q_group, filt_q)):
        report = cp2_from_filtration(filt)
        if not report.is_cp2:
            raise NotCp2Error(f"{group.name} is not CP2")
    top = max(filt_p.m, filt_q.m)
    return all(
        filt_p.subgroup_size_at(i) == filt_q.subgroup_size_at(i) for i in range(top + 1))


def predict_order(p_group: FiniteGroup, q_group: FiniteGroup) -> PsiComparison:
    """Compare psi over two same-order p-groups and, where an ordering or
    equality theorem applies, record its prediction.

    Hypotheses tried in order: exponent gap with a proper top omega subgroup
    on the larger-exponent side (predicts strict ordering); for equal
    exponents and both groups CP2, the first filtration difference scanning
    down from the top (predicts strict ordering) or full filtration agreement
    (predicts equality).
    """
    prime = _require_same_order_and_prime(p_group, q_group)
    n = p_group.order
    log: list[HypothesisCheck] = []
    log.append(HypothesisCheck(
        "same order", True, f"|P| = |Q| = {n}"))
    log.append(HypothesisCheck("same prime", True, f"p = {prime}"))

    psi_p = psi_brute(p_group)
    psi_q = psi_brute(q_group)
    relation = "<" if psi_p < psi_q else (">" if psi_p > psi_q else "=")

    filt_p = omega_filtration(p_group)
    filt_q = omega_filtration(q_group)
    exp_p = prime**filt_p.m
    exp_q = prime**filt_q.m

    theorem: str | None = None
    predicted: str | None = None
    if exp_p != exp_q:
        log.append(HypothesisCheck(
            "T1.2: exponents differ", True, f"exp(P) = {exp_p}, exp(Q) = {exp_q}"))
        side, filt = ("P", filt_p) if exp_p > exp_q else ("Q", filt_q)
        m = filt.m
        top_sub = filt.levels[m - 1].subgroup_size
        proper = top_sub < n
        log.append(HypothesisCheck(
            f"T1.2: Omega_{{m-1}}({side}) proper", proper,
            f"|Omega_{m - 1}({side})| = {top_sub}, |{side}| = {n}"))
        if proper:
            theorem = "T1.2"
            predicted = ">" if exp_p > exp_q else "<"
            summary = f"T1.2 predicts {predicted}"
        else:
            summary = f"T1.2 inapplicable: Omega_{{m-1}}({side})={side}"
    else:
        log.append(HypothesisCheck(
            "T1.1/T1.3: exponents equal", True, f"exp(P) = exp(Q) = {exp_p}"))
        cp2_p = cp2_from_filtration(filt_p).is_cp2
        cp2_q = cp2_from_filtration(filt_q).is_cp2
        log.append(HypothesisCheck(
            "T1.1/T1.3: both groups CP2", cp2_p and cp2_q,
            f"P CP2: {'yes' if cp2_p else 'no'}, Q CP2: {'yes' if cp2_q else 'no'}"))
        if cp2_p and cp2_q:
            m = filt_p.m
            diff_level = None
            for i in range(m - 1, -1, -1):
                if filt_p.subgroup_size_at(i) != filt_q.subgroup_size_at(i):
                    diff_level = i
                    break
            if diff_level is None:
                log.append(HypothesisCheck(
                    "T1.1: filtrations agree", True,
                    f"|Omega_i(P)| = |Omega_i(Q)| for i = 0..{m}"))
                theorem = "T1.1"
                predicted = "="
                summary = "T1.1 predicts ="
            else:
                size_p = filt_p.subgroup_size_at(diff_level)
                size_q = filt_q.subgroup_size_at(diff_level)
                log.append(HypothesisCheck(
                    f"T1.3: filtrations first differ at level {diff_level}", True,
                    f"|Omega_{diff_level}(P)| = {size_p}, "
                    f"|Omega_{diff_level}(Q)| = {size_q}"))
                theorem = "T1.3"
                predicted = ">" if size_p < size_q else "<"
                summary = f"T1.3 predicts {predicted}"
        else:
            summary = "no theorem applicable: not both CP2"

    return PsiComparison(
        psi_p=psi_p,
        psi_q=psi_q,
        relation=relation,
        predicted_relation=predicted,
        theorem=theorem,
        summary=summary,
        hypothesis_log=tuple(log),
    )


def order_bijection(
    p_group: FiniteGroup, q_group: FiniteGroup
) -> OrderBijection | SpectrumMismatch:
    """Pair up elements of equal order, or report why that is impossible.

    When the order spectra agree, elements are paired per order value by
    ascending index on both sides.  Otherwise the spectra are scanned from
    the largest order downward and the first differing count is reported.
    """
    if p_group.order != q_group.order:
        raise GroupError(
            f"order mismatch: |{p_group.name}| = {p_group.order}, "
            f"|{q_group.name}| = {q_group.order}")
    spec_p = order_spectrum(p_group)
    spec_q = order_spectrum(q_group)
    if spec_p != spec_q:
        for value in sorted(set(spec_p) | set(spec_q), reverse=True):
            count_p = spec_p.get(value, 0)
            count_q = spec_q.get(value, 0)
            if count_p != count_q:
                return SpectrumMismatch(order=value, count_p=count_p, count_q=count_q)
        raise AssertionError("spectra differ but all counts agree")
    by_order_p = np.argsort(p_group.element_orders, kind="stable")
    by_order_q = np.argsort(q_group.element_orders, kind="stable")
    pairs = tuple((int(a), int(b)) for a, b in zip(by_order_p, by_order_q))
    return OrderBijection(pairs=pairs)
