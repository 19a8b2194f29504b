"""Brute-force ground truth.

Every closed formula in the package is tested against the enumerations
here.  Nothing in this module assumes any structural theorem: code weight
distributions come from walking all codewords (by trace message or by
information word), rank/type censuses classify each family member one by
one, and the appendix oracle counts zeros of Q+L+c over every (L, c).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cyclotomic import CodeParams
from .errors import BudgetExceeded
from .forms import CoefficientForm, classify_quadratic, family_size, family_slots, iter_family, slot_domain
from .gfarith import FieldContext, field_for, small_field
from .schemes import InnerDistribution
from .weights import WeightEnumerator

DEFAULT_MAX_CODEWORDS = 1 << 24
DEFAULT_MAX_FIELD = 1 << 20


@dataclass(frozen=True)
class EnumerationBudget:
    max_codewords: int = DEFAULT_MAX_CODEWORDS
    max_field_size: int = DEFAULT_MAX_FIELD

    @staticmethod
    def from_env() -> "EnumerationBudget":
        """BCHFORMS_BUDGET: 'small', 'default', or an integer codeword cap."""
        raw = os.environ.get("BCHFORMS_BUDGET", "").strip().lower()
        if not raw or raw == "default":
            return EnumerationBudget()
        if raw == "small":
            return EnumerationBudget(max_codewords=1 << 16, max_field_size=1 << 12)
        return EnumerationBudget(max_codewords=int(raw))

    def check_codewords(self, count: int) -> None:
        if count > self.max_codewords:
            raise BudgetExceeded(f"{count} codewords exceed budget {self.max_codewords}")

    def check_field(self, size: int) -> None:
        if size > self.max_field_size:
            raise BudgetExceeded(f"field size {size} exceeds budget {self.max_field_size}")


def default_workers() -> int:
    return min(os.cpu_count() or 1, 8)


def _member_logs(field: FieldContext, i: int) -> tuple[list[np.ndarray], np.ndarray]:
    """Per-slot lambda domains as discrete logs (-1 for zero), plus the
    exponent steps (q^j+1) mod n of each slot."""
    slots = family_slots(field.m, i)
    n = field.n
    domains = []
    for slot in slots:
        dom = slot_domain(field, slot)
        logs = np.array(
            [-1 if v == 0 else int(field.log_index[v]) for v in dom], dtype=np.int64
        )
        domains.append(logs)
    steps = np.array([(field.q ** s.j + 1) % n for s in slots], dtype=np.int64)
    return domains, steps


def _trace_rows(field: FieldContext, i: int) -> np.ndarray:
    slots = family_slots(field.m, i)
    rows = np.empty((len(slots), field.n), dtype=np.int64)
    for s, slot in enumerate(slots):
        rows[s] = field.half_trace_vec if slot.half else field.trace_vec
    return rows


def trace_route_weights(params: CodeParams, budget: EnumerationBudget | None = None,
                        workers: int | None = None) -> WeightEnumerator:
    """Weight distribution of the whole code by scanning every coset of
    every family member (q^dimension words total)."""
    budget = budget or EnumerationBudget.from_env()
    q, m = params.q, params.m
    budget.check_codewords(q ** params.dimension)
    budget.check_field(q ** m)
    field = field_for(q, m)
    n = field.n
    F = field.base
    domains, steps = _member_logs(field, params.i)
    trace_rows = _trace_rows(field, params.i)
    trv2 = np.concatenate([field.trace_vec, field.trace_vec])
    pair = F.add.astype(np.int64).ravel()
    neg = F.neg.astype(np.int64)
    radices = [len(d) for d in domains]
    n_members = 1
    for r in radices:
        n_members *= r
    assert n_members == family_size(q, m, params.i)

    def scan(lo: int, hi: int) -> np.ndarray:
        counts = np.zeros(n + 1, dtype=np.int64)
        lam_logs = np.empty(len(radices), dtype=np.int64)
        qv = np.empty(n, dtype=np.int64)
        for member in range(lo, hi):
            rem = member
            for s in range(len(radices) - 1, -1, -1):
                lam_logs[s] = domains[s][rem % radices[s]]
                rem //= radices[s]
            kernels.eval_qvec(lam_logs, steps, trace_rows, pair, q, qv)
            kernels.coset_weight_counts(qv, trv2, pair, neg, counts)
        return counts

    w = workers if workers is not None else default_workers()
    w = max(1, min(w, n_members))
    if w == 1:
        counts = scan(0, n_members)
    else:
        bounds = [n_members * t // w for t in range(w + 1)]
        with ThreadPoolExecutor(max_workers=w) as pool:
            parts = list(pool.map(lambda ab: scan(*ab), zip(bounds[:-1], bounds[1:])))
        counts = np.sum(parts, axis=0)
    total = int(counts.sum())
    if total != q ** params.dimension:
        raise AssertionError(f"enumerated {total} words, expected q^dim")  # internal bug
    return WeightEnumerator(
        counts={w_: int(c) for w_, c in enumerate(counts) if c}, length=n
    )


def generator_route_weights(code, budget: EnumerationBudget | None = None) -> WeightEnumerator:
    """Weight distribution by iterating all information words against the
    generator-polynomial row space (chunked, vectorized over rows)."""
    budget = budget or EnumerationBudget.from_env()
    field = code.field
    q, n, k = field.q, code.length, code.dimension
    budget.check_codewords(q ** k)
    F = field.base
    rows = np.zeros((k, n), dtype=np.int64)
    g = np.array(code.generator, dtype=np.int64)
    for r in range(k):
        rows[r, r : r + len(g)] = g  # deg g = n-k, so shifts never wrap
    add = F.add.astype(np.int64)
    mul = F.mul.astype(np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    total = q ** k
    chunk = 1 << 14
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        acc = np.zeros((hi - lo, n), dtype=np.int64)
        for r in range(k):
            digit = idx // q ** r % q
            for d in range(1, q):
                mask = digit == d
                if mask.any():
                    acc[mask] = add[acc[mask], mul[d, rows[r]][None, :]]
        weights = np.count_nonzero(acc, axis=1)
        counts += np.bincount(weights, minlength=n + 1)
    return WeightEnumerator(counts={w: int(c) for w, c in enumerate(counts) if c}, length=n)


def enumerate_code_weights(source, budget: EnumerationBudget | None = None,
                           workers: int | None = None) -> WeightEnumerator:
    """Exact weight distribution; CodeParams uses the trace route, a
    CyclicCode the generator route.  Both routes agree (tested)."""
    if isinstance(source, CodeParams):
        return trace_route_weights(source, budget, workers)
    return generator_route_weights(source, budget)


def oracle_min_distance(params: CodeParams, budget: EnumerationBudget | None = None,
                        workers: int | None = None) -> int:
    return trace_route_weights(params, budget, workers).min_positive_weight()


def count_zeros(f, size: int, budget: EnumerationBudget | None = None) -> int:
    """N(f) = |{x : f(x) = 0}| over all element indices 0..size-1."""
    budget = budget or EnumerationBudget.from_env()
    budget.check_field(size)
    return sum(1 for x in range(size) if f(x) == 0)


def weight_of_function(f, size: int, budget: EnumerationBudget | None = None) -> int:
    """wt(f) = |{x != 0 : f(x) != 0}| = q^m - 1 - N(f) + [f(0)=0]."""
    n_zeros = count_zeros(f, size, budget)
    return size - 1 - n_zeros + (1 if f(0) == 0 else 0)


def rank_type_census(spec_or_q, m: int | None = None, i: int | None = None,
                     budget: EnumerationBudget | None = None) -> InnerDistribution:
    """Classify every family member independently and tally.

    Accepts a FamilySpec or plain (q, m, i) meaning the Q family.  The S/A
    censuses classify the polarizations of the quadratic members, which is
    a different code path from schemes.census_inner_distribution (bilinear
    parametrization), so the two never validate themselves.
    """
    from .forms import bilinear_rank, classify_symmetric, polarize
    from .schemes import FamilySpec

    if isinstance(spec_or_q, FamilySpec):
        spec = spec_or_q
    else:
        q_ = spec_or_q
        spec = FamilySpec("Q1" if m % 2 else "Q2", q_, m, i)
    q, m, i = spec.q, spec.m, spec.i
    budget = budget or EnumerationBudget.from_env()
    budget.check_field(q ** m)
    size = family_size(q, m, i)
    if size > budget.max_codewords:
        raise BudgetExceeded(f"family size {size} over budget")
    field = field_for(q, m)
    entries: dict = {}
    for form in iter_family(field, i):
        if spec.kind.startswith("Q"):
            rt = classify_quadratic(form)
            key = (rt.rank, rt.type)
        elif spec.kind.startswith("S"):
            rt = classify_symmetric(polarize(form))
            key = (rt.rank, rt.type)
        else:
            key = bilinear_rank(polarize(form))
        entries[key] = entries.get(key, 0) + 1
    dist = InnerDistribution(entries=entries, scheme_kind=spec.scheme_kind, m=m)
    assert dist.total() == size
    return dist


def coset_weight_distribution(field: FieldContext, form) -> dict[int, int]:
    """Brute-force weight multiset of one PRM coset (q^(m+1) words)."""
    F = field.base
    qv = form.value_vec() if hasattr(form, "value_vec") else form
    trv2 = np.concatenate([field.trace_vec, field.trace_vec])
    pair = F.add.astype(np.int64).ravel()
    neg = F.neg.astype(np.int64)
    counts = np.zeros(field.n + 1, dtype=np.int64)
    kernels.coset_weight_counts(np.asarray(qv, dtype=np.int64), trv2, pair, neg, counts)
    return {w: int(c) for w, c in enumerate(counts) if c}


def appendix_census(q: int, m: int, coeff_form: CoefficientForm, c_class: str,
                    budget: EnumerationBudget | None = None) -> dict[int, int]:
    """Frequencies of N(Q+L+c) over all q^m linear functions L, with c
    ranging over one square class (or summed over GF(q)*), counted
    exhaustively."""
    budget = budget or EnumerationBudget.from_env()
    budget.check_field(q ** m)
    F = small_field(q)
    size = q ** m
    digs = np.zeros((size, m), dtype=np.int64)
    v = np.arange(size)
    for a in range(m):
        digs[:, a] = v % q
        v //= q
    qv = coeff_form.values_by_index()
    add = F.add.astype(np.int64)
    mul = F.mul.astype(np.int64)
    # lin[b, x] = sum_a b_a x_a
    lin = np.zeros((size, size), dtype=np.int64)
    for a in range(m):
        term = mul[digs[:, a][:, None], digs[:, a][None, :]]
        lin = add[lin, term]
    vals = add[qv[None, :], lin]
    if c_class == "zero":
        cs = [0]
    elif c_class == "square":
        cs = [min(F.squares)]
    elif c_class == "nonsquare":
        cs = [min(set(range(1, q)) - F.squares)]
    elif c_class == "nonzero":
        cs = [1]
    elif c_class == "nonzero-sum":
        cs = list(range(1, q))
    else:
        raise ValueError(f"unknown c class {c_class}")
    out: dict[int, int] = {}
    for c in cs:
        target = int(F.neg[c])
        zeros = np.count_nonzero(vals == target, axis=1)
        for z, freq in zip(*np.unique(zeros, return_counts=True)):
            out[int(z)] = out.get(int(z), 0) + int(freq)
    return out
