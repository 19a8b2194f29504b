"""Quadratic forms on GF(q)^m, their polarized bilinear forms, and
rank/type classification.

Two concrete form flavours exist:

* ``TraceQuadraticForm`` — Q(x) = Tr(sum_j lambda_j x^(q^j+1)) on a field
  GF(q^m), with the middle slot running over GF(q^(m/2)) when m is even.
  These are the coset representatives of the BCH decomposition.
* ``CoefficientForm`` — Q(x) = x^T C x on the plain vector space GF(q)^m;
  used for canonical forms and as oracle material.

Both expose the same small surface (``values_by_index``, ``gram``) so the
classification code does not care which one it gets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ArityMismatch, EvenCharacteristic, InvalidSubfield, RankZero
from .gfarith import FieldContext, SmallField, small_field


@dataclass(frozen=True)
class SlotSpec:
    """One lambda slot of the trace representation: the term x^(q^j+1)."""

    j: int
    half: bool  # lambda restricted to GF(q^(m/2))


def family_slots(m: int, i: int) -> list[SlotSpec]:
    """Lambda slots of the family Q1(i) (m odd) or Q2(i) (m even)."""
    if m % 2:
        return [SlotSpec(j, False) for j in range((m + 1) // 2, i + 2)]
    return [SlotSpec(m // 2, True)] + [SlotSpec(j, False) for j in range((m + 2) // 2, i + 2)]


def slot_domain(field: FieldContext, slot: SlotSpec) -> list[int]:
    """All admissible lambda values for a slot, sorted by element index."""
    if slot.half:
        return sorted(field.half_subfield_elements())
    return list(range(field.size))


def family_size(q: int, m: int, i: int) -> int:
    """|Q1| = |Q2| = q^(m(i-(m-3)/2))."""
    return q ** (m * (2 * i - m + 3) // 2)


@dataclass(frozen=True)
class RankType:
    """Rank and congruence type of a form.

    Odd q: type in {+1,-1}, rank-0 forms get type +1 by convention.
    Even q: type in {0,1,2}; type 1 iff the rank is odd, the zero form
    gets type 0.
    """

    rank: int
    type: int

    def __post_init__(self):
        if self.rank == 0 and self.type not in (0, 1):
            raise ValueError("rank 0 must carry the conventional type")


@dataclass
class GramMatrix:
    entries: np.ndarray  # m x m of GF(q) element indices
    kind: str            # "symmetric" | "alternating" | "coefficient"
    field_q: SmallField

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]


class TraceQuadraticForm:
    """Q(x) = Tr(sum lambda_j x^(q^j+1)) with the half-field middle term."""

    def __init__(self, field: FieldContext, i: int, lambdas: tuple[int, ...]):
        slots = family_slots(field.m, i)
        if len(lambdas) != len(slots):
            raise ArityMismatch(f"expected {len(slots)} lambdas, got {len(lambdas)}")
        for slot, lam in zip(slots, lambdas):
            if slot.half and not field.in_half(lam):
                raise InvalidSubfield(f"lambda for slot j={slot.j} must lie in GF(q^(m/2))")
        self.field = field
        self.i = i
        self.slots = slots
        self.lambdas = tuple(int(v) for v in lambdas)
        self._values = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def field_q(self) -> SmallField:
        return self.field.base

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.lambdas)

    def value_vec(self) -> np.ndarray:
        """GF(q) values (Q(alpha^t))_{t=0..n-1}."""
        fld = self.field
        n = fld.n
        acc = np.zeros(n, dtype=np.int64)
        t = np.arange(n, dtype=np.int64)
        addq = fld.base.add
        for slot, lam in zip(self.slots, self.lambdas):
            if lam == 0:
                continue
            e = (fld.q ** slot.j + 1) % n
            idx = (int(fld.log_index[lam]) + t * e) % n
            contrib = (fld.half_trace_vec if slot.half else fld.trace_vec)[idx]
            acc = addq[acc, contrib].astype(np.int64)
        return acc

    def values_by_index(self) -> np.ndarray:
        """GF(q) value of Q at every field element index (Q(0) = 0)."""
        if self._values is None:
            vals = np.zeros(self.field.size, dtype=np.int64)
            vals[self.field.exp_index] = self.value_vec()
            self._values = vals
        return self._values

    def evaluate_index(self, x: int) -> int:
        return int(self.values_by_index()[x])

    def value_at_coords(self, coords) -> int:
        return self.evaluate_index(self.field.from_coeffs(coords))

    def __repr__(self) -> str:
        return f"TraceQuadraticForm(q={self.q}, m={self.m}, i={self.i}, lambdas={self.lambdas})"


class CoefficientForm:
    """Q(x) = x^T C x on GF(q)^m; C upper triangular (even q) or symmetric (odd q)."""

    def __init__(self, field_q: SmallField, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim != 2 or coeffs.shape[0] != coeffs.shape[1]:
            raise ValueError("coefficient matrix must be square")
        self.field_q = field_q
        self.coeffs = coeffs
        self.m = coeffs.shape[0]
        self._values = None

    @property
    def q(self) -> int:
        return self.field_q.q

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def value_at_coords(self, coords) -> int:
        F = self.field_q
        acc = 0
        for a in range(self.m):
            xa = int(coords[a])
            if xa == 0:
                continue
            for b in range(self.m):
                c = int(self.coeffs[a, b])
                if c:
                    acc = F.add_el(acc, F.mul_el(c, F.mul_el(xa, int(coords[b]))))
        return acc

    def values_by_index(self) -> np.ndarray:
        """Values over all q^m points, index encoding sum(c_i q^i)."""
        if self._values is None:
            F, m, q = self.field_q, self.m, self.q
            size = q ** m
            digs = np.zeros((size, m), dtype=np.int64)
            v = np.arange(size)
            for a in range(m):
                digs[:, a] = v % q
                v //= q
            acc = np.zeros(size, dtype=np.int64)
            mul = F.mul.astype(np.int64)
            add = F.add.astype(np.int64)
            for a in range(m):
                for b in range(m):
                    c = int(self.coeffs[a, b])
                    if c:
                        term = mul[c, mul[digs[:, a], digs[:, b]]]
                        acc = add[acc, term]
            self._values = acc
        return self._values

    def evaluate_index(self, x: int) -> int:
        return int(self.values_by_index()[x])


def _coords_to_index(coords, q: int) -> int:
    return sum(int(c) * q ** i for i, c in enumerate(coords))


def polarize(form) -> GramMatrix:
    """Gram matrix of the bilinear form attached to Q on the fixed basis.

    Odd q: B(x,y) = (Q(x+y)-Q(x)-Q(y))/2, so B(x,x) = Q(x) and the Gram
    matrix coincides with the coefficient matrix of Q.  Even q:
    B(x,y) = Q(x+y)+Q(x)+Q(y), which is alternating.
    """
    F = form.field_q
    m = form.m
    q = F.q
    vals = form.values_by_index()
    gram = np.zeros((m, m), dtype=np.int64)
    odd = F.p != 2
    if isinstance(form, TraceQuadraticForm):
        fld = form.field
        basis = [fld.from_coeffs([1 if t == a else 0 for t in range(m)]) for a in range(m)]
        add_ix = fld.add
    else:
        basis = [q ** a for a in range(m)]

        def add_ix(x, y):
            cx = [x // q ** t % q for t in range(m)]
            cy = [y // q ** t % q for t in range(m)]
            return _coords_to_index([F.add_el(a, b) for a, b in zip(cx, cy)], q)

    for a in range(m):
        for b in range(a, m):
            s = int(vals[add_ix(basis[a], basis[b])])
            s = F.add_el(s, F.neg_el(int(vals[basis[a]])))
            s = F.add_el(s, F.neg_el(int(vals[basis[b]])))
            if odd:
                s = F.half(s)
            gram[a, b] = s
            gram[b, a] = s
    kind = "symmetric" if odd else "alternating"
    if not odd and gram.diagonal().any():
        raise AssertionError("even-q polarization must be alternating")
    return GramMatrix(entries=gram, kind=kind, field_q=F)


def bilinear_rank(M: GramMatrix | np.ndarray, field_q: SmallField | None = None) -> int:
    """Matrix rank over GF(q) by Gaussian elimination."""
    if isinstance(M, GramMatrix):
        field_q = M.field_q
        A = [list(map(int, row)) for row in M.entries]
    else:
        A = [list(map(int, row)) for row in np.asarray(M)]
    F = field_q
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = F.inv_el(A[rank][c])
        A[rank] = [F.mul_el(inv, v) for v in A[rank]]
        for r in range(rows):
            if r != rank and A[r][c] != 0:
                f = F.neg_el(A[r][c])
                A[r] = [F.add_el(A[r][t], F.mul_el(f, A[rank][t])) for t in range(cols)]
        rank += 1
    return rank


def radical_basis(M: GramMatrix) -> list[list[int]]:
    """Basis of Rad B = {v : Mv = 0} as GF(q) coordinate vectors."""
    F = M.field_q
    m = M.m
    A = [list(map(int, row)) for row in M.entries]
    pivots = []
    rank = 0
    for c in range(m):
        piv = next((r for r in range(rank, m) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = F.inv_el(A[rank][c])
        A[rank] = [F.mul_el(inv, v) for v in A[rank]]
        for r in range(m):
            if r != rank and A[r][c] != 0:
                f = F.neg_el(A[r][c])
                A[r] = [F.add_el(A[r][t], F.mul_el(f, A[rank][t])) for t in range(m)]
        pivots.append(c)
        rank += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg_el(A[r][fc])
        basis.append(v)
    return basis


def classify_symmetric(M: GramMatrix) -> RankType:
    """Rank and type of a symmetric bilinear form, odd q.

    Congruence diagonalization; the type is eta of the product of the
    nonzero diagonal entries, which is the congruence invariant eta(z) of
    the standard form.  The zero form gets (0, +1) by convention.
    """
    F = M.field_q
    if F.p == 2:
        raise EvenCharacteristic("classify_symmetric needs odd q")
    m = M.m
    A = [list(map(int, row)) for row in M.entries]
    remaining = list(range(m))
    diag = []
    while remaining:
        piv = next((k for k in remaining if A[k][k] != 0), None)
        if piv is None:
            pair = next(
                ((k, l) for k in remaining for l in remaining if A[k][l] != 0), None
            )
            if pair is None:
                break
            k, l = pair
            # push a nonzero entry onto the diagonal: row/col l added to k
            # gives A[k][k] = 2 A[k][l] != 0 in odd characteristic
            for t in range(m):
                A[k][t] = F.add_el(A[k][t], A[l][t])
            for t in range(m):
                A[t][k] = F.add_el(A[t][k], A[t][l])
            piv = k
        d = A[piv][piv]
        diag.append(d)
        dinv = F.inv_el(d)
        for r in remaining:
            if r == piv or A[r][piv] == 0:
                continue
            f = F.neg_el(F.mul_el(A[r][piv], dinv))
            for t in range(m):
                A[r][t] = F.add_el(A[r][t], F.mul_el(f, A[piv][t]))
            for t in range(m):
                A[t][r] = F.add_el(A[t][r], F.mul_el(f, A[t][piv]))
        remaining.remove(piv)
    if not diag:
        return RankType(0, 1)
    prod = 1
    for d in diag:
        prod = F.mul_el(prod, d)
    return RankType(len(diag), F.quadratic_character(prod))


def classify_quadratic(form) -> RankType:
    """Rank and type of a quadratic form.

    Odd q delegates to the symmetric classification of the polarization.
    Even q: rank(B_Q) is even; Q has rank rank(B_Q)+1 and type 1 exactly
    when Q does not vanish on Rad B_Q (checked on a basis, enough because
    Q is additive there), otherwise the type in {0,2} is read off the
    number of zeros of Q.
    """
    F = form.field_q
    B = polarize(form)
    if F.p != 2:
        return classify_symmetric(B)
    rb = bilinear_rank(B)
    if rb % 2:
        raise AssertionError("alternating form with odd rank")
    rad = radical_basis(B)
    vanishes = all(form.value_at_coords(v) == 0 for v in rad)
    if not vanishes:
        return RankType(rb + 1, 1)
    if rb == 0:
        return RankType(0, 0)
    q, m = F.q, form.m
    zeros = int(np.count_nonzero(form.values_by_index() == 0))
    r_half = rb // 2
    bump = (q - 1) * q ** (m - r_half - 1)
    if zeros == q ** (m - 1) + bump:
        return RankType(rb, 0)
    if zeros == q ** (m - 1) - bump:
        return RankType(rb, 2)
    raise AssertionError(f"zero count {zeros} matches neither type for rank {rb}")


def count_solutions_closed(q: int, rt: RankType, h: int, m: int) -> int:
    """Number of x in GF(q)^m with Q(x) = h, from the rank/type of Q."""
    if rt.rank == 0:
        raise RankZero("solution counts need rank >= 1")
    F = small_field(q)
    r = rt.rank
    if F.p != 2:
        eta = F.quadratic_character
        em1 = eta(F.neg_el(1))
        if r % 2:
            return q ** (m - 1) + rt.type * em1 ** ((r - 1) // 2) * eta(h) * q ** (m - (r + 1) // 2)
        return q ** (m - 1) + rt.type * em1 ** (r // 2) * F.upsilon(h) * q ** (m - (r + 2) // 2)
    if r % 2:
        return q ** (m - 1)
    sign = 1 if rt.type == 0 else -1
    return q ** (m - 1) + sign * F.upsilon(h) * q ** (m - (r + 2) // 2)


def iter_family(field: FieldContext, i: int):
    """All members of Q1(i)/Q2(i), lambda tuples in lexicographic element order."""
    slots = family_slots(field.m, i)
    domains = [slot_domain(field, s) for s in slots]
    for lams in product(*domains):
        yield TraceQuadraticForm(field, i, lams)


def absolute_trace_to_gf2(F: SmallField, x: int) -> int:
    """Tr from GF(2^e) down to GF(2): sum of x^(2^i)."""
    if F.p != 2:
        raise EvenCharacteristic("absolute GF(2)-trace needs characteristic two")
    acc, t = x, x
    for _ in range(F.e - 1):
        t = F.mul_el(t, t)
        acc = F.add_el(acc, t)
    return acc


def canonical_form(q: int, m: int, rt: RankType) -> CoefficientForm:
    """A canonical representative of the given rank and type.

    Odd q: x_1^2 + ... + x_{r-1}^2 + z x_r^2 with eta(z) = type.
    Even q: sum x_{2j-1}x_{2j} (+ x_{2r+1}^2 for type 1, or
    + x_{2r-1}^2 + lam x_{2r}^2 with Tr(lam) = 1 for type 2).
    """
    F = small_field(q)
    C = np.zeros((m, m), dtype=np.int64)
    r = rt.rank
    if r > m:
        raise ValueError("rank exceeds dimension")
    if F.p != 2:
        if r:
            for a in range(r - 1):
                C[a, a] = 1
            z = 1 if rt.type == 1 else min(set(range(1, q)) - F.squares)
            C[r - 1, r - 1] = z
        return CoefficientForm(F, C)
    if rt.type == 1:
        pairs = (r - 1) // 2
    else:
        pairs = r // 2
    for j in range(pairs):
        C[2 * j, 2 * j + 1] = 1
    if rt.type == 1:
        C[r - 1, r - 1] = 1
    elif rt.type == 2:
        lam = next(x for x in range(1, q) if absolute_trace_to_gf2(F, x) == 1)
        C[2 * pairs - 2, 2 * pairs - 2] = 1
        C[2 * pairs - 1, 2 * pairs - 1] = lam
    return CoefficientForm(F, C)


def all_rank_types(q: int, m: int):
    """Every RankType with rank 1..m for the parity of q."""
    out = []
    for r in range(1, m + 1):
        if q % 2:
            out.extend([RankType(r, 1), RankType(r, -1)])
        elif r % 2:
            out.append(RankType(r, 1))
        else:
            out.extend([RankType(r, 0), RankType(r, 2)])
    return out
