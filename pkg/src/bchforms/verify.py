"""Property suites behind `bchforms verify`: every closed form in the
package played against its exhaustive oracle at a configurable budget.

Each check returns (name, ok, detail); a suite is the list of its checks.
"""

from __future__ import annotations

from . import cyclotomic as cyc
from . import oracle as orc
from . import weights as wts
from .bchcode import generator_polynomial
from .errors import BchFormsError
from .forms import all_rank_types, canonical_form, classify_quadratic, iter_family
from .gfarith import field_for
from .oracle import EnumerationBudget
from .schemes import (
    FamilySpec,
    census_inner_distribution,
    dg_bound,
    enumerate_family,
    family_design_check,
    is_proper_d_code,
    schmidt_for_family,
    t_design_check,
)

Check = tuple[str, bool, str]


def _qs(q: int | None) -> tuple[int, ...]:
    return (q,) if q else (2, 3, 4, 5)


def verify_cosets(q: int | None = None, max_m: int = 10,
                  budget: EnumerationBudget | None = None) -> list[Check]:
    budget = budget or EnumerationBudget.from_env()
    out: list[Check] = []
    for qq in _qs(q):
        min_m = {2: 3, 3: 2}.get(qq, 1)
        for m in range(min_m, max_m + 1):
            if qq ** m > min(budget.max_field_size, 1 << 14):
                continue
            n = qq ** m - 1
            leaders = cyc.all_coset_leaders(qq, m)
            ok = sum(s for _, s in leaders) == n
            out.append((f"coset-partition q={qq} m={m}", ok, f"{len(leaders)} cosets"))
            delta = (qq - 1) * qq ** (m - 1) - 1
            for i in cyc.theorem_i_range(qq, m):
                delta_i = delta - qq ** i
                if delta_i < 2:
                    continue
                expected = sorted({delta} | {delta - qq ** j for j in cyc.theorem_i_range(qq, m) if j <= i})
                got = cyc.coset_leaders_geq(delta_i, qq, m)
                out.append(
                    (f"leader-set q={qq} m={m} i={i}", got == expected, f"{got}")
                )
                closed = m * (2 * i - m + 5) // 2 + 1
                got_dim = cyc.bch_dimension(qq, m, delta_i)
                out.append(
                    (f"dimension q={qq} m={m} i={i}", got_dim == closed, f"{got_dim}")
                )
    return out


FORM_FAMILIES = [(2, 5, 2), (2, 6, 2), (3, 3, 1), (3, 4, 1), (4, 2, 1), (4, 3, 1), (5, 2, 1)]


def verify_forms(q: int | None = None, budget: EnumerationBudget | None = None) -> list[Check]:
    import numpy as np

    from .forms import count_solutions_closed

    out: list[Check] = []
    for qq, m, i in FORM_FAMILIES:
        if q and qq != q:
            continue
        fld = field_for(qq, m)
        bad = 0
        n_forms = 0
        for form in iter_family(fld, i):
            rt = classify_quadratic(form)
            n_forms += 1
            if rt.rank == 0:
                continue
            hist = np.bincount(form.values_by_index(), minlength=qq)
            for h in range(qq):
                if count_solutions_closed(qq, rt, h, m) != hist[h]:
                    bad += 1
        out.append(
            (f"solution-counts q={qq} m={m} i={i}", bad == 0, f"{n_forms} forms, {bad} mismatches")
        )
    return out


SCHMIDT_FAMILIES = [("S1", 3, 3, 1), ("S2", 3, 4, 1), ("S2", 3, 4, 2), ("S1", 5, 3, 1), ("S2", 5, 4, 1)]
CORRESPONDENCE_ODD = [("Q1", "S1", 3, 3, 1), ("Q2", "S2", 3, 4, 2), ("Q1", "S1", 5, 3, 1)]
CORRESPONDENCE_EVEN = [("Q1", "A1", 2, 5, 2), ("Q2", "A2", 2, 6, 2), ("Q2", "A2", 2, 6, 3), ("Q1", "A1", 4, 3, 1)]


def verify_schemes(q: int | None = None, m: int | None = None, i: int | None = None,
                   budget: EnumerationBudget | None = None) -> list[Check]:
    out: list[Check] = []
    schmidt_cases = SCHMIDT_FAMILIES
    if q and m and i is not None:
        schmidt_cases = [("S1" if m % 2 else "S2", q, m, i)]
    for kind, qq, mm, ii in schmidt_cases:
        try:
            closed = schmidt_for_family(FamilySpec(kind, qq, mm, ii))
            census = census_inner_distribution(FamilySpec(kind, qq, mm, ii))
            ok = closed.entries == census.entries
            detail = "entrywise equal" if ok else f"closed={closed.entries} census={census.entries}"
        except BchFormsError as exc:
            ok, detail = False, str(exc)
        out.append((f"schmidt-vs-census {kind}({qq},{mm},{ii})", ok, detail))
    for qk, sk, qq, mm, ii in CORRESPONDENCE_ODD:
        if q and qq != q:
            continue
        qd = orc.rank_type_census(FamilySpec(qk, qq, mm, ii))
        sd = census_inner_distribution(FamilySpec(sk, qq, mm, ii))
        out.append(
            (f"correspondence-odd {qk}~{sk}({qq},{mm},{ii})", qd.entries == sd.entries, "")
        )
    for qk, ak, qq, mm, ii in CORRESPONDENCE_EVEN:
        if q and qq != q:
            continue
        qd = orc.rank_type_census(FamilySpec(qk, qq, mm, ii))
        ad = census_inner_distribution(FamilySpec(ak, qq, mm, ii))
        ok = True
        for rank in range(0, mm + 1, 2):
            lhs = (
                qd.entries.get((rank, 0), 0)
                + qd.entries.get((rank + 1, 1), 0)
                + qd.entries.get((rank, 2), 0)
            )
            ok = ok and lhs == ad.entries.get(rank, 0)
        out.append((f"correspondence-even {qk}~{ak}({qq},{mm},{ii})", ok, ""))
    if q in (None, 2):
        ad = census_inner_distribution(FamilySpec("A1", 2, 5, 2))
        ok = is_proper_d_code(ad, 4) and ad.total() == dg_bound(5, 2, 2)
        out.append(("dg-bound-attained A1(2,5,2)", ok, f"|Y|={ad.total()} bound={dg_bound(5, 2, 2)}"))
    if q in (None, 3):
        ok = family_design_check(FamilySpec("S1", 3, 3, 1), 2)
        out.append(("2-design S1(3,3,1)", ok, ""))
        members = list(enumerate_family(FamilySpec("S1", 3, 3, 1)))
        corrupted = [g for g in members if g.entries.any()][:-1]
        corrupted += [g for g in members if not g.entries.any()]
        ok = not t_design_check(corrupted, 2, 3, 3)
        out.append(("2-design negative control", ok, "corrupted family must fail"))
    for qq in (3, 5, 7, 9):
        ok = all(
            wts.intersection_table(qq, b) == wts.intersection_table_census(qq, b)
            for b in range(qq)
        )
        out.append((f"intersection-table q={qq}", ok, ""))
    return out


def verify_appendix(q: int | None = None, max_m: int = 4,
                    budget: EnumerationBudget | None = None) -> list[Check]:
    out: list[Check] = []
    for qq in _qs(q):
        for m in range(2, max_m + 1):
            classes = wts.C_CLASSES_ODD if qq % 2 else wts.C_CLASSES_EVEN
            bad = []
            for rt in all_rank_types(qq, m):
                form = canonical_form(qq, m, rt)
                for c_class in classes:
                    closed = wts.appendix_frequency_tables(qq, m, rt, c_class)
                    counted = orc.appendix_census(qq, m, form, c_class)
                    if closed != counted:
                        bad.append((rt.rank, rt.type, c_class))
            out.append(
                (f"appendix-tables q={qq} m={m}", not bad, f"mismatches: {bad}" if bad else "all ranks/types")
            )
    return out


def verify_examples(budget: EnumerationBudget | None = None,
                    workers: int | None = None) -> list[Check]:
    """The worked examples: closed enumerators against full enumeration."""
    budget = budget or EnumerationBudget.from_env()
    out: list[Check] = []
    cases = [(3, 3, 1)]
    if budget.max_codewords >= 3 ** 11:
        cases.append((3, 4, 2))
    for q, m, i in cases:
        params = cyc.code_params(q, m, i)
        closed = wts.code_enumerator_odd(params)
        brute = orc.trace_route_weights(params, budget, workers)
        out.append(
            (f"enumerator-closed-vs-oracle ({q},{m},{i})", closed.counts == brute.counts, "")
        )
    even_cases = [(2, 6, 2), (2, 6, 3)] if budget.max_codewords >= 1 << 16 else [(2, 6, 2)]
    for q, m, i in even_cases:
        params = cyc.code_params(q, m, i)
        d, witness = wts.min_distance_even(params)
        brute = orc.trace_route_weights(params, budget, workers)
        ok = d == params.delta_i == brute.min_positive_weight() and witness["weight"] == d
        out.append((f"min-distance-even ({q},{m},{i})", ok, f"d={d}"))
    # one generator-vs-trace route agreement
    params = cyc.code_params(2, 4, 1)
    code = generator_polynomial(2, 4, params.delta_i)
    ok = orc.generator_route_weights(code).counts == orc.trace_route_weights(params).counts
    out.append(("route-agreement (2,4,1)", ok, ""))
    return out


SUITES = {
    "cosets": lambda **kw: verify_cosets(q=kw.get("q"), max_m=kw.get("max_m") or 10, budget=kw.get("budget")),
    "forms": lambda **kw: verify_forms(q=kw.get("q"), budget=kw.get("budget")),
    "schemes": lambda **kw: verify_schemes(q=kw.get("q"), m=kw.get("m"), i=kw.get("i"), budget=kw.get("budget")),
    "appendix": lambda **kw: verify_appendix(q=kw.get("q"), max_m=kw.get("max_m") or 4, budget=kw.get("budget")),
    "examples": lambda **kw: verify_examples(budget=kw.get("budget"), workers=kw.get("workers")),
}


def run_suite(name: str, **kw) -> list[Check]:
    if name == "all":
        checks: list[Check] = []
        for suite in SUITES.values():
            checks.extend(suite(**kw))
        return checks
    if name not in SUITES:
        raise ValueError(f"unknown suite {name}; pick from {sorted(SUITES)} or 'all'")
    return SUITES[name](**kw)
