"""Families of forms attached to the BCH decomposition and their inner
distributions in the Sym/Alt/Qua association schemes.

The census route classifies every family member through the forms module;
the closed-form route evaluates the published inner-distribution formulas
for codes that are simultaneously designs.  Both are exposed so they can
be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .errors import BudgetExceeded, NegativeEntry, NonIntegralResult, ParityMismatch
from .forms import (
    GramMatrix,
    TraceQuadraticForm,
    bilinear_rank,
    classify_quadratic,
    classify_symmetric,
    family_size,
    family_slots,
    iter_family,
    slot_domain,
)
from .gfarith import FieldContext, eta_minus_one, field_for, small_field

FAMILY_KINDS = ("Q1", "Q2", "S1", "S2", "A1", "A2")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    q: int
    m: int
    i: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind}")
        want_odd = self.kind.endswith("1")
        if want_odd != (self.m % 2 == 1):
            raise ParityMismatch(f"{self.kind} needs m {'odd' if want_odd else 'even'}")
        if self.kind.startswith("S") and self.q % 2 == 0:
            raise ParityMismatch("S families are defined for odd q")
        if self.kind.startswith("A") and self.q % 2 == 1:
            raise ParityMismatch("A families are defined for even q")

    @property
    def scheme_kind(self) -> str:
        return {"Q": "Qua", "S": "Sym", "A": "Alt"}[self.kind[0]]

    @property
    def size(self) -> int:
        return family_size(self.q, self.m, self.i)


@dataclass
class InnerDistribution:
    """Census of a family by relation class.

    Sym/Qua entries are keyed by (rank, type); Alt entries by the even rank
    alone.  Only nonzero entries are stored, as exact integers.
    """

    entries: dict
    scheme_kind: str
    m: int

    def total(self) -> int:
        return sum(self.entries.values())

    def rank_count(self, rank: int) -> int:
        if self.scheme_kind == "Alt":
            return self.entries.get(rank, 0)
        return sum(v for k, v in self.entries.items() if k[0] == rank)

    def min_nonzero_rank(self) -> int | None:
        ranks = [self._rank(k) for k, v in self.entries.items() if v and self._rank(k) > 0]
        return min(ranks) if ranks else None

    @staticmethod
    def _rank(key) -> int:
        return key if isinstance(key, int) else key[0]

    def to_json(self) -> dict:
        out = {}
        for k, v in sorted(self.entries.items(), key=lambda kv: (self._rank(kv[0]), str(kv[0]))):
            name = str(k) if isinstance(k, int) else f"{k[0]},{k[1]}"
            out[name] = str(v)
        return out


def _bilinear_gram(field: FieldContext, i: int, lambdas: tuple[int, ...], halve: bool) -> GramMatrix:
    """Gram matrix of Tr((sum_j lam_j x^(q^j) + lam_j^(q^-j) x^(q^-j)) y)
    on the polynomial basis (the S/A family parametrization).  With halve
    set the lambdas are divided by two first, which realizes B_Q exactly."""
    m = field.m
    F = field.base
    slots = family_slots(m, i)
    basis = [field.from_coeffs([1 if t == a else 0 for t in range(m)]) for a in range(m)]
    lams = list(lambdas)
    if halve:
        inv2 = F.inv_el(F.add_el(1, 1))
        lams = [field.mul(inv2, lam) for lam in lams]
    # L(x) = sum over slots of the x-side coefficient
    images = []
    for x in basis:
        acc = 0
        for slot, lam in zip(slots, lams):
            if lam == 0:
                continue
            if slot.half:
                acc = field.add(acc, field.mul(lam, field.frob(x, m // 2)))
            else:
                acc = field.add(acc, field.mul(lam, field.frob(x, slot.j)))
                acc = field.add(acc, field.mul(field.frob(lam, m - slot.j), field.frob(x, m - slot.j)))
        images.append(acc)
    gram = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            gram[a, b] = field.trace_to_base(field.mul(images[a], basis[b]))
    kind = "symmetric" if F.p != 2 else "alternating"
    return GramMatrix(entries=gram, kind=kind, field_q=F)


def enumerate_family(spec: FamilySpec, field: FieldContext | None = None):
    """Yield every member of the family exactly once.

    Q kinds yield TraceQuadraticForm, S/A kinds yield GramMatrix built from
    the bilinear-form parametrization (independent of the polarization code
    path, so censuses of Q against S/A are a real cross-check).
    """
    fld = field or field_for(spec.q, spec.m)
    if spec.kind.startswith("Q"):
        yield from iter_family(fld, spec.i)
        return
    slots = family_slots(spec.m, spec.i)
    domains = [slot_domain(fld, s) for s in slots]
    for lams in product(*domains):
        yield _bilinear_gram(fld, spec.i, lams, halve=False)


def census_inner_distribution(spec: FamilySpec, max_members: int = 1 << 20) -> InnerDistribution:
    """Exact inner distribution by classifying every member."""
    if spec.size > max_members:
        raise BudgetExceeded(f"family of size {spec.size} exceeds census budget {max_members}")
    entries: dict = {}
    total = 0
    for member in enumerate_family(spec):
        total += 1
        if spec.kind.startswith("Q"):
            rt = classify_quadratic(member)
            key = (rt.rank, rt.type)
        elif spec.kind.startswith("S"):
            rt = classify_symmetric(member)
            key = (rt.rank, rt.type)
        else:
            key = bilinear_rank(member)
        entries[key] = entries.get(key, 0) + 1
    if total != spec.size:
        raise AssertionError(f"enumerated {total} members, expected {spec.size}")
    return InnerDistribution(entries=entries, scheme_kind=spec.scheme_kind, m=spec.m)


# ---------------------------------------------------------------------------
# closed-form inner distributions (Schmidt)
# ---------------------------------------------------------------------------


def qsq_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient in base q^2 (0 when k > n or k < 0)."""
    if k < 0 or k > n:
        return 0
    out = Fraction(1)
    for t in range(1, k + 1):
        out *= Fraction(q ** (2 * n - 2 * t + 2) - 1, q ** (2 * t) - 1)
    if out.denominator != 1:
        raise NonIntegralResult(f"q^2-binomial ({n},{k}) not integral")
    return int(out)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralResult(f"{what} = {x} is not an integer")
    if x < 0:
        raise NegativeEntry(f"{what} = {x} is negative")
    return int(x)


def schmidt_inner_distribution(case: str, n: int, l: int, size: int, q: int) -> InnerDistribution:
    """Inner distribution of a code-and-design subset of Sym(*, q), q odd.

    case 'odd':  (2l-1)-code, (2n-2l+3)-design in Sym(2n+1, q)
    case 'even': (2l)-code,   (2n-2l+1)-design in Sym(2n, q)
    case 'odd2': (2l)-code,   (2n-2l+1, eta(-1)^(n-l+1))-design in Sym(2n+1, q)

    All arithmetic is exact; a non-integer or negative entry raises, which
    is the guard against misapplied hypotheses or transcription slips.
    """
    if case not in ("odd", "even", "odd2"):
        raise ValueError(f"unknown case {case}")
    em1 = eta_minus_one(q)
    m = 2 * n + 1 if case in ("odd", "odd2") else 2 * n
    Y = Fraction(size)
    entries: dict = {(0, 1): 1}

    def B(a, b):
        return qsq_binomial(a, b, q)

    def put(rank, tau, val: Fraction):
        v = _as_int(val, f"a_({rank},{tau})")
        if v:
            entries[(rank, tau)] = v

    if case == "odd":
        for i in range(1, n + 2):
            s = Fraction(0)
            for j in range(0, i - l + 1):
                s += (-1) ** j * q ** (j * (j - 1)) * B(i, j) * (Y / q ** ((2 * n + 1) * (n + 1 + j - i)) - 1)
            r_odd = 2 * i - 1
            if r_odd <= m:
                for tau in (1, -1):
                    put(r_odd, tau, Fraction(1, 2) * B(n, i - 1) * s)
            r_even = 2 * i
            if r_even <= m:
                for tau in (1, -1):
                    put(r_even, tau, Fraction(1, 2) * (q ** (2 * i) + tau * em1 ** i * q ** i) * B(n, i) * s)
    elif case == "even":
        for i in range(1, n + 1):
            r_odd = 2 * i - 1
            s1 = Fraction(0)
            for j in range(0, i - l):
                s1 += (-1) ** j * q ** (j * (j - 1)) * B(i - 1, j) * Y * q ** (2 * j) / q ** ((2 * n + 1) * (n + 1 + j - i))
            for tau in (1, -1):
                put(r_odd, tau, Fraction(1, 2) * (q ** (2 * i) - 1) * B(n, i) * s1)
            s2 = Fraction(0)
            s3 = Fraction(0)
            for j in range(0, i - l + 1):
                c = (-1) ** j * q ** (j * (j - 1)) * B(i, j)
                s2 += c * (Y * q ** (2 * j) / q ** ((2 * n + 1) * (n + j - i)) - 1)
                s3 += c * (Y / (q ** ((2 * n - 1) * (n + j - i)) * q ** (2 * n)) - 1)
            for tau in (1, -1):
                put(2 * i, tau,
                    Fraction(1, 2) * B(n, i) * s2 + Fraction(tau, 2) * em1 ** i * q ** i * B(n, i) * s3)
    else:  # odd2
        for i in range(1, n + 2):
            s = Fraction(0)
            for j in range(0, i - l + 1):
                s += (-1) ** j * q ** (j * (j - 1)) * B(i, j) * (Y / q ** ((2 * n + 1) * (n + 1 + j - i)) - 1)
            tail = Y / q ** ((2 * n + 1) * (n - l + 1)) - 1
            r_odd = 2 * i - 1
            if r_odd <= m:
                extra = (
                    Fraction(1, 2) * (-1) ** (i - l) * q ** ((i - l) * (i - l - 1)) * B(n, l - 1) * tail
                    * (B(n - l, n - i + 1) * (q ** (n - l + 1) + 1) - B(n - l + 1, n - i + 1))
                )
                for tau in (1, -1):
                    put(r_odd, tau, Fraction(1, 2) * B(n, i - 1) * s + extra)
            r_even = 2 * i
            if r_even <= m:
                extra = (
                    Fraction(1, 2) * (-1) ** (i - l) * q ** ((i - l + 1) * (i - l)) * B(n, l - 1)
                    * B(n - l, n - i) * (q ** (n - l + 1) + 1) * tail
                )
                for tau in (1, -1):
                    put(r_even, tau,
                        Fraction(1, 2) * (q ** (2 * i) + tau * em1 ** i * q ** i) * B(n, i) * s + extra)

    dist = InnerDistribution(entries=entries, scheme_kind="Sym", m=m)
    if dist.total() != size:
        raise NonIntegralResult(
            f"closed-form entries sum to {dist.total()}, expected |Y| = {size}"
        )
    return dist


def schmidt_for_family(spec: FamilySpec) -> InnerDistribution:
    """Closed-form inner distribution of S1(i)/S2(i) via the code/design
    parameters established for these families (odd q)."""
    if spec.kind not in ("S1", "S2", "Q1", "Q2"):
        raise ValueError("closed forms exist for the symmetric-side families")
    q, m, i = spec.q, spec.m, spec.i
    if m % 2:
        return schmidt_inner_distribution("odd", (m - 1) // 2, m - i, spec.size, q)
    return schmidt_inner_distribution("even", m // 2, m - i - 1, spec.size, q)


# ---------------------------------------------------------------------------
# codes, designs, bounds
# ---------------------------------------------------------------------------


def dg_bound(n: int, d: int, q: int) -> int:
    """Delsarte-Goethals size bound for 2d-codes of alternating forms on GF(q)^n."""
    if not 0 <= d <= n // 2:
        raise ValueError("need 0 <= d <= floor(n/2)")
    if n % 2:
        return q ** (n * (n + 1) // 2 - n * d)
    return q ** ((n - 1) * (n + 2) // 2 - (n - 1) * d)


def is_d_code(dist: InnerDistribution, d: int) -> bool:
    """No nonzero member of rank 1..d-1."""
    return all(
        v == 0 for k, v in dist.entries.items() if 0 < InnerDistribution._rank(k) < d
    )


def is_proper_d_code(dist: InnerDistribution, d: int) -> bool:
    step = 2 if dist.scheme_kind == "Alt" else 1
    return is_d_code(dist, d) and not is_d_code(dist, d + step)


def subspace_representatives(q: int, m: int, t: int):
    """Row-reduced-echelon bases of all t-dimensional subspaces of GF(q)^m."""
    for pivots in combinations(range(m), t):
        free_pos = [
            (r, c)
            for r in range(t)
            for c in range(m)
            if c > pivots[r] and c not in pivots
        ]
        for assignment in product(range(q), repeat=len(free_pos)):
            rows = [[0] * m for _ in range(t)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free_pos, assignment):
                rows[r][c] = v
            yield rows


def _restrict(F, gram: np.ndarray, rows: list[list[int]]) -> tuple:
    t = len(rows)
    m = len(rows[0])
    out = []
    for a in range(t):
        for b in range(t):
            acc = 0
            for s in range(m):
                ra = rows[a][s]
                if ra == 0:
                    continue
                for u in range(m):
                    rb = rows[b][u]
                    if rb:
                        acc = F.add_el(acc, F.mul_el(ra, F.mul_el(int(gram[s, u]), rb)))
            out.append(acc)
    return tuple(out)


def t_design_check(members, t: int, q: int, m: int) -> bool:
    """Combinatorial t-design test in Sym(m, q): the number of members
    extending each symmetric form on each t-dimensional subspace must be one
    constant.  `members` is an iterable of GramMatrix or raw m x m arrays."""
    if t == 0:
        return True
    F = small_field(q)
    grams = [g.entries if isinstance(g, GramMatrix) else np.asarray(g) for g in members]
    n_forms_on_u = q ** (t * (t + 1) // 2)
    constant = None
    for rows in subspace_representatives(q, m, t):
        tally: dict = {}
        for g in grams:
            key = _restrict(F, g, rows)
            tally[key] = tally.get(key, 0) + 1
        counts = set(tally.values())
        if len(tally) < n_forms_on_u:
            counts.add(0)  # some form on U has no extension at all
        if len(counts) != 1:
            return False
        c = counts.pop()
        if constant is None:
            constant = c
        elif c != constant:
            return False
    return True


def family_design_check(spec: FamilySpec, t: int) -> bool:
    """t-design check for a whole S family."""
    return t_design_check(list(enumerate_family(spec)), t, spec.q, spec.m)
