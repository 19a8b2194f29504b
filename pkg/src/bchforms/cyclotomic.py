"""q-cyclotomic cosets modulo q^m-1, coset leaders, BCH dimensions.

Everything here is integer combinatorics on exponents; no field arithmetic.
Coset-leader sets are found by direct enumeration with a visited bitmap, so
the closed descriptions proved in the source theory are checked against
this module rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCode, IndexOutOfTheoremRange, OutOfRange


@dataclass(frozen=True)
class CosetInfo:
    s: int
    members: tuple[int, ...]
    leader: int
    size: int


@dataclass(frozen=True)
class CodeParams:
    """Parameters of the BCH code with Bose distance delta_i = (q-1)q^(m-1)-q^i-1."""

    q: int
    m: int
    i: int
    delta: int
    delta_i: int
    dimension: int
    bose_distance: int

    @property
    def length(self) -> int:
        return self.q ** self.m - 1


def q_adic(s: int, q: int, m: int) -> tuple[list[int], int]:
    """Base-q digits of s (length m, lowest first) and their digit sum."""
    if not 0 <= s < q ** m:
        raise OutOfRange(f"s={s} out of [0, q^m)")
    digits = []
    for _ in range(m):
        digits.append(s % q)
        s //= q
    return digits, sum(digits)


def cyclotomic_coset(s: int, q: int, m: int) -> CosetInfo:
    n = q ** m - 1
    if not 0 <= s < n:
        raise OutOfRange(f"s={s} out of [0, q^m-1)")
    members = [s]
    t = s * q % n
    while t != s:
        members.append(t)
        t = t * q % n
    return CosetInfo(s=s, members=tuple(sorted(members)), leader=min(members), size=len(members))


def is_coset_leader(s: int, q: int, m: int) -> bool:
    n = q ** m - 1
    t = s * q % n
    while t != s:
        if t < s:
            return False
        t = t * q % n
    return True


def all_coset_leaders(q: int, m: int) -> list[tuple[int, int]]:
    """All (leader, coset size) pairs, by a linear scan with a visited bitmap."""
    n = q ** m - 1
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        t = s
        size = 0
        while True:
            seen[t] = True
            size += 1
            t = t * q % n
            if t == s:
                break
        out.append((s, size))
    return out


def coset_leaders_geq(threshold: int, q: int, m: int) -> list[int]:
    """Sorted coset leaders >= threshold, by direct enumeration."""
    n = q ** m - 1
    if not 1 <= threshold < n:
        raise OutOfRange(f"threshold={threshold} out of [1, q^m-1)")
    return [s for s, _ in all_coset_leaders(q, m) if s >= threshold]


def bch_dimension(q: int, m: int, delta: int) -> int:
    """Dimension = 1 + sum of |C_s| over coset leaders s >= delta."""
    n = q ** m - 1
    if not 2 <= delta <= n:
        raise OutOfRange(f"delta={delta} out of [2, q^m-1]")
    return 1 + sum(size for s, size in all_coset_leaders(q, m) if s >= delta)


def bose_distance(q: int, m: int, delta: int) -> int:
    """Smallest positive integer outside the union of the cosets of 1..delta-1.

    That is the largest designed distance producing the same code.
    """
    n = q ** m - 1
    if not 2 <= delta <= n:
        raise OutOfRange(f"delta={delta} out of [2, q^m-1]")
    covered = np.zeros(n, dtype=bool)
    for s in range(1, delta):
        t = s
        while not covered[t]:
            covered[t] = True
            t = t * q % n
    d = delta
    while d < n and covered[d]:
        d += 1
    return d


def theorem_i_range(q: int, m: int) -> range:
    """Integer i with (m-2)/2 <= i <= m - floor(m/3) - 1."""
    lo = (m - 1) // 2 if m % 2 else (m - 2) // 2
    hi = m - m // 3 - 1
    return range(lo, hi + 1)


def _check_qm(q: int, m: int) -> None:
    min_m = {2: 3, 3: 2}.get(q, 1)
    if m < min_m:
        raise IndexOutOfTheoremRange(f"q={q} needs m >= {min_m}")


def code_params(q: int, m: int, i: int, check_dimension: bool = True) -> CodeParams:
    """Parameters of C_(q,m,delta_i) for i in the main-theorem range.

    The dimension comes from the closed form (i-(m-5)/2)m+1; when
    check_dimension is set and q^m is small enough to enumerate cosets,
    it is verified against the coset-size summation.
    """
    _check_qm(q, m)
    rng = theorem_i_range(q, m)
    if i not in rng:
        raise IndexOutOfTheoremRange(f"i={i} outside [{rng.start}, {rng.stop - 1}] for m={m}")
    delta = (q - 1) * q ** (m - 1) - 1
    delta_i = delta - q ** i
    if delta_i < 2:
        raise DegenerateCode(f"delta_i={delta_i} < 2 for (q,m,i)=({q},{m},{i})")
    dimension = m * (2 * i - m + 5) // 2 + 1
    if check_dimension and q ** m <= 1 << 20:
        by_cosets = bch_dimension(q, m, delta_i)
        if by_cosets != dimension:
            raise AssertionError(
                f"dimension mismatch for ({q},{m},{i}): closed form {dimension}, cosets {by_cosets}"
            )
    if not is_coset_leader(delta_i, q, m):
        raise AssertionError(f"delta_i={delta_i} is not a coset leader for ({q},{m},{i})")
    return CodeParams(q=q, m=m, i=i, delta=delta, delta_i=delta_i,
                      dimension=dimension, bose_distance=delta_i)


def theorem_sweep(qs=(2, 3, 4, 5), max_codewords: int = 1 << 24) -> list[CodeParams]:
    """Every valid (q,m,i) of the main theorem with q^dimension within budget."""
    out = []
    for q in qs:
        min_m = {2: 3, 3: 2}.get(q, 1)
        over = 0
        for m in range(min_m, 200):
            # dimension at the smallest admissible i grows linearly in m
            # within each parity class, so two consecutive overruns end the scan
            i_min = theorem_i_range(q, m).start
            dim_min = m * (2 * i_min - m + 5) // 2 + 1
            if q ** dim_min > max_codewords:
                over += 1
                if over >= 2:
                    break
                continue
            over = 0
            for i in theorem_i_range(q, m):
                dim = m * (2 * i - m + 5) // 2 + 1
                if q ** dim > max_codewords:
                    continue
                try:
                    out.append(code_params(q, m, i))
                except DegenerateCode:
                    continue
    return out
