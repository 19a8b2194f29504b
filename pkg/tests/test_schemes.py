import numpy as np
import pytest

from bchforms import schemes
from bchforms.errors import ParityMismatch
from bchforms.forms import classify_quadratic, iter_family
from bchforms.gfarith import field_for
from bchforms.schemes import (
    FamilySpec,
    census_inner_distribution,
    dg_bound,
    enumerate_family,
    family_design_check,
    is_d_code,
    is_proper_d_code,
    qsq_binomial,
    schmidt_for_family,
    schmidt_inner_distribution,
    subspace_representatives,
    t_design_check,
)


def test_family_spec_parity():
    FamilySpec("S1", 3, 3, 1)
    with pytest.raises(ParityMismatch):
        FamilySpec("S1", 3, 4, 1)
    with pytest.raises(ParityMismatch):
        FamilySpec("S2", 3, 3, 1)
    with pytest.raises(ParityMismatch):
        FamilySpec("A1", 3, 3, 1)
    with pytest.raises(ParityMismatch):
        FamilySpec("S2", 2, 6, 2)


def test_family_sizes():
    assert FamilySpec("S2", 3, 4, 1).size == 9
    assert FamilySpec("S1", 3, 3, 1).size == 27
    assert FamilySpec("A1", 2, 5, 2).size == 32
    assert FamilySpec("Q2", 2, 6, 2).size == 8
    for spec in [FamilySpec("S1", 3, 3, 1), FamilySpec("A1", 2, 5, 2), FamilySpec("Q2", 2, 6, 2)]:
        assert sum(1 for _ in enumerate_family(spec)) == spec.size


def test_census_s1_331():
    dist = census_inner_distribution(FamilySpec("S1", 3, 3, 1))
    assert dist.entries == {(0, 1): 1, (3, 1): 13, (3, -1): 13}


def test_census_zero_member_and_sum_rule():
    for spec in [
        FamilySpec("S1", 3, 3, 1),
        FamilySpec("S2", 3, 4, 1),
        FamilySpec("A1", 2, 5, 2),
        FamilySpec("A2", 2, 6, 3),
        FamilySpec("Q1", 3, 3, 1),
        FamilySpec("Q2", 2, 6, 2),
    ]:
        dist = census_inner_distribution(spec)
        assert dist.total() == spec.size
        zero_key = 0 if spec.scheme_kind == "Alt" else (0, 0 if spec.q % 2 == 0 else 1)
        assert dist.entries[zero_key] == 1


def test_census_a1_252_proper_4code_meets_dg_bound():
    dist = census_inner_distribution(FamilySpec("A1", 2, 5, 2))
    assert dist.entries.get(2, 0) == 0
    assert dist.entries.get(4, 0) > 0
    assert is_d_code(dist, 4) and is_proper_d_code(dist, 4)
    assert dg_bound(5, 2, 2) == 32 == dist.total()


def test_qsq_binomial_examples():
    assert qsq_binomial(5, 0, 3) == 1
    # product formula: prod_{i=1..k} (q^(2n-2i+2)-1)/(q^(2i)-1)
    assert qsq_binomial(1, 1, 3) == 1
    assert qsq_binomial(2, 1, 3) == 10
    assert qsq_binomial(2, 1, 2) == 5
    assert qsq_binomial(2, 3, 3) == 0
    # Pascal-type recurrence in base q^2
    for n in range(1, 5):
        for k in range(1, n + 1):
            lhs = qsq_binomial(n, k, 3)
            rhs = qsq_binomial(n - 1, k, 3) + 9 ** (n - k) * qsq_binomial(n - 1, k - 1, 3)
            assert lhs == rhs


def test_dg_bound_examples():
    assert dg_bound(3, 0, 2) == 64
    assert dg_bound(5, 2, 2) == 32
    assert dg_bound(4, 2, 2) == 8


def test_schmidt_s1_331_matches_census():
    spec = FamilySpec("S1", 3, 3, 1)
    closed = schmidt_for_family(spec)
    census = census_inner_distribution(spec)
    assert closed.entries == census.entries


def test_schmidt_odd2_matches_census_s1_331():
    # the same family is a (2l)-code and (2n-2l+1, eta(-1)^(n-l+1))-design
    # with l = 1; the second odd-dimension formula must agree
    spec = FamilySpec("S1", 3, 3, 1)
    closed = schmidt_inner_distribution("odd2", 1, 1, 27, 3)
    assert closed.entries == census_inner_distribution(spec).entries


@pytest.mark.parametrize(
    "kind,q,m,i",
    [
        ("S2", 3, 4, 1),
        ("S2", 3, 4, 2),
        ("S1", 3, 3, 1),
        ("S1", 5, 3, 1),
        ("S2", 5, 4, 1),
        ("S2", 3, 2, 0),
        ("S2", 3, 2, 1),
        ("S1", 5, 1, 0),
    ],
)
def test_schmidt_matches_census_sweep(kind, q, m, i):
    spec = FamilySpec(kind, q, m, i)
    assert schmidt_for_family(spec).entries == census_inner_distribution(spec).entries


def test_schmidt_singleton_edge():
    # |Y| = 1 forces every nonzero-rank entry to vanish: S1 with i at the
    # degenerate low end l = n+1 models a singleton set
    dist = schmidt_inner_distribution("odd", 2, 3, 1, 3)
    assert dist.entries == {(0, 1): 1}


def test_proper_code_parameters_match_families():
    # S1 is a proper (2m-2i-1)-code, S2 and the A families proper (2m-2i-2)-codes
    for kind, q, m, i in [("S1", 3, 3, 1), ("S2", 3, 4, 2), ("S2", 3, 4, 1)]:
        dist = census_inner_distribution(FamilySpec(kind, q, m, i))
        d = 2 * m - 2 * i - (1 if kind == "S1" else 2)
        assert is_proper_d_code(dist, d), (kind, q, m, i)
        assert dist.min_nonzero_rank() == d
    for kind, q, m, i in [("A1", 2, 5, 2), ("A2", 2, 6, 2), ("A2", 2, 6, 3), ("A1", 4, 3, 1)]:
        dist = census_inner_distribution(FamilySpec(kind, q, m, i))
        assert is_proper_d_code(dist, 2 * m - 2 * i - 2), (kind, q, m, i)


def test_census_rank_floor():
    for kind, q, m, i in [("Q1", 3, 3, 1), ("Q2", 3, 4, 2), ("Q1", 2, 5, 2), ("Q2", 2, 6, 3)]:
        dist = census_inner_distribution(FamilySpec(kind, q, m, i))
        assert dist.min_nonzero_rank() >= 2 * m - 2 * i - 2


def test_correspondence_odd_q():
    # inner distribution of Q_j equals that of S_j entrywise (two independent
    # code paths: quadratic classification vs bilinear-parametrized census)
    for (qk, sk, q, m, i) in [("Q1", "S1", 3, 3, 1), ("Q2", "S2", 3, 4, 1), ("Q2", "S2", 3, 4, 2), ("Q1", "S1", 5, 3, 1)]:
        qd = census_inner_distribution(FamilySpec(qk, q, m, i))
        sd = census_inner_distribution(FamilySpec(sk, q, m, i))
        assert qd.entries == sd.entries


def test_correspondence_even_q():
    # d_{2i,0} + d_{2i+1,1} + d_{2i,2} = b_{2i}
    for (qk, ak, q, m, i) in [("Q1", "A1", 2, 5, 2), ("Q2", "A2", 2, 6, 2), ("Q2", "A2", 2, 6, 3), ("Q1", "A1", 4, 3, 1)]:
        qd = census_inner_distribution(FamilySpec(qk, q, m, i))
        ad = census_inner_distribution(FamilySpec(ak, q, m, i))
        for rank in range(0, m + 1, 2):
            lhs = (
                qd.entries.get((rank, 0), 0)
                + qd.entries.get((rank + 1, 1), 0)
                + qd.entries.get((rank, 2), 0)
            )
            assert lhs == ad.entries.get(rank, 0), (q, m, i, rank)


def test_subspace_representatives_count():
    # Gaussian binomial [3 choose 2]_3 = 13, [4 choose 2]_3 = 130
    assert sum(1 for _ in subspace_representatives(3, 3, 2)) == 13
    assert sum(1 for _ in subspace_representatives(3, 4, 2)) == 130
    reps = [tuple(map(tuple, r)) for r in subspace_representatives(2, 4, 1)]
    assert len(reps) == len(set(reps)) == 15


def test_bilinear_gram_halved_is_polarization():
    # member-wise: the gram of the halved bilinear parametrization equals
    # polarize(Q) for the same lambda tuple (odd q)
    from bchforms.forms import polarize

    fld = field_for(3, 3)
    for lam in (1, fld.alpha, 7):
        form = next(f for f in iter_family(fld, 1) if f.lambdas == (lam,))
        g1 = schemes._bilinear_gram(fld, 1, (lam,), halve=True).entries
        g2 = polarize(form).entries
        assert np.array_equal(g1, g2), lam


def test_family_additive_closure_sampled():
    # families are additive: the sum of two member grams is a member gram
    spec = FamilySpec("S1", 3, 3, 1)
    members = [g.entries for g in enumerate_family(spec)]
    keys = {m.tobytes() for m in members}
    F = field_for(3, 3).base
    rng = np.random.default_rng(99)
    for _ in range(30):
        a = members[rng.integers(len(members))]
        b = members[rng.integers(len(members))]
        s = F.add.astype(np.int64)[a, b]
        assert s.tobytes() in keys


def test_design_check_s1_331():
    spec = FamilySpec("S1", 3, 3, 1)
    assert family_design_check(spec, 2)
    assert family_design_check(spec, 0)


def test_design_check_negative_control():
    spec = FamilySpec("S1", 3, 3, 1)
    members = list(enumerate_family(spec))
    corrupted = [g for g in members if g.entries.any()][:-1]
    corrupted += [g for g in members if not g.entries.any()]
    assert len(corrupted) == len(members) - 1
    assert not t_design_check(corrupted, 2, 3, 3)
