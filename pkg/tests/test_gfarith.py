import itertools

import numpy as np
import pytest

from bchforms import gfarith
from bchforms.errors import EvenCharacteristic, InvalidSubfield, NotPrime, ReducibleModulus
from bchforms.gfarith import FieldContext, SmallField, build_field, field_for, small_field


SMALL_TOWERS = [(2, 1, 3), (2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2), (3, 2, 1)]


def brute_mul(ctx: FieldContext, x: int, y: int) -> int:
    """Schoolbook product through coefficient vectors, independent of the log tables."""
    F = ctx.base
    cx = ctx.coeff_vector(x)
    cy = ctx.coeff_vector(y)
    prod = gfarith.poly_mod(F, gfarith.poly_mul(F, cx, cy), ctx.ext_modulus)
    return ctx.from_coeffs(prod + [0] * (ctx.m - len(prod)))


def test_build_field_trivial_prime_field():
    ctx = build_field(2, 1, 1)
    assert ctx.size == 2
    assert ctx.alpha == 1


def test_build_field_gf27():
    ctx = build_field(3, 1, 3)
    assert ctx.size == 27
    # alpha has order exactly 26
    seen = {ctx.pow(ctx.alpha, k) for k in range(26)}
    assert len(seen) == 26


def test_build_field_gf16_over_gf4():
    ctx = build_field(2, 2, 2)
    assert ctx.q == 4 and ctx.size == 16
    # verify order 15 by exhaustive powering
    x = ctx.alpha
    order = 1
    y = x
    while y != 1:
        y = ctx.mul(y, x)
        order += 1
    assert order == 15


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        build_field(4, 1, 2)
    with pytest.raises(NotPrime):
        small_field(6)


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        build_field(2, 1, 2, ext_modulus=[1, 0, 1])


@pytest.mark.parametrize("p,e,m", SMALL_TOWERS)
def test_log_exp_bijection(p, e, m):
    ctx = build_field(p, e, m)
    for x in range(1, ctx.size):
        assert ctx.exp_index[ctx.log_index[x]] == x


@pytest.mark.parametrize("p,e,m", SMALL_TOWERS)
def test_field_axioms_sampled(p, e, m):
    ctx = build_field(p, e, m)
    size = ctx.size
    if size <= 32:
        triples = itertools.product(range(size), repeat=3)
    else:
        rng = np.random.default_rng(7)
        triples = (tuple(rng.integers(0, size, 3)) for _ in range(400))
    for x, y, z in triples:
        x, y, z = int(x), int(y), int(z)
        assert ctx.mul(x, ctx.mul(y, z)) == ctx.mul(ctx.mul(x, y), z)
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
        assert ctx.mul(x, y) == brute_mul(ctx, x, y)
    for x in range(1, size):
        assert ctx.mul(x, ctx.inv(x)) == 1


@pytest.mark.parametrize("p,e,m", SMALL_TOWERS)
def test_frobenius_additive(p, e, m):
    ctx = build_field(p, e, m)
    for x in range(ctx.size):
        for y in range(min(ctx.size, 16)):
            assert ctx.frob(ctx.add(x, y)) == ctx.add(ctx.frob(x), ctx.frob(y))


def test_trace_of_zero_and_subfield_elements():
    ctx = build_field(3, 1, 3)
    assert ctx.trace_to_base(0) == 0
    for c in range(3):
        # Tr(c) = m*c for c in GF(q)
        expected = 0
        for _ in range(ctx.m):
            expected = ctx.base.add_el(expected, c)
        assert ctx.trace_to_base(c) == expected


def test_trace_gf8_explicit():
    # modulus x^3 + x + 1 over GF(2); Tr(a) = a + a^2 + a^4
    ctx = build_field(2, 1, 3, ext_modulus=[1, 1, 0, 1])
    a = ctx.alpha
    s = ctx.add(ctx.add(a, ctx.pow(a, 2)), ctx.pow(a, 4))
    assert ctx.trace_to_base(a) == s


@pytest.mark.parametrize("p,e,m", SMALL_TOWERS)
def test_trace_linear_and_surjective(p, e, m):
    ctx = build_field(p, e, m)
    values = {ctx.trace_to_base(x) for x in range(ctx.size)}
    assert values == set(range(ctx.q))
    counts = {}
    for x in range(ctx.size):
        counts[ctx.trace_to_base(x)] = counts.get(ctx.trace_to_base(x), 0) + 1
    # uniform fibers of size q^(m-1)
    assert set(counts.values()) == {ctx.q ** (ctx.m - 1)}
    for x in range(min(ctx.size, 40)):
        for y in range(min(ctx.size, 20)):
            assert ctx.trace_to_base(ctx.add(x, y)) == ctx.base.add_el(
                ctx.trace_to_base(x), ctx.trace_to_base(y)
            )


def test_trace_vec_matches_pointwise():
    for p, e, m in [(2, 1, 4), (3, 1, 3), (2, 2, 2)]:
        ctx = build_field(p, e, m)
        tv = ctx.trace_vec
        for t in range(ctx.n):
            assert tv[t] == ctx.trace_to_base(int(ctx.exp_index[t]))


def test_half_trace_vec():
    ctx = build_field(2, 1, 4)
    s = ctx.half_step
    assert s == 5
    htv = ctx.half_trace_vec
    for t in range(0, ctx.n, s):
        y = int(ctx.exp_index[t])
        assert ctx.in_half(y)
        assert htv[t] == ctx.subfield_trace_to_base(y)
    with pytest.raises(InvalidSubfield):
        build_field(2, 1, 3).trace_to(1, 1.5)  # nonsense degree
    with pytest.raises(InvalidSubfield):
        build_field(2, 1, 3).half_step  # noqa: B018


def test_trace_to_half_lands_in_half_field():
    ctx = build_field(3, 1, 4)
    for x in range(0, ctx.size, 7):
        y = ctx.trace_to(x, 2)
        assert ctx.in_half(y)


def test_quadratic_character():
    F3 = small_field(3)
    assert F3.quadratic_character(0) == 0
    assert F3.quadratic_character(1) == 1
    assert F3.quadratic_character(2) == -1
    with pytest.raises(EvenCharacteristic):
        small_field(4).quadratic_character(1)
    for q in (3, 5, 7, 9):
        F = small_field(q)
        vals = [F.quadratic_character(a) for a in range(1, q)]
        assert vals.count(1) == (q - 1) // 2
        assert vals.count(-1) == (q - 1) // 2
        for a in range(1, q):
            for b in range(1, q):
                assert F.quadratic_character(F.mul_el(a, b)) == F.quadratic_character(
                    a
                ) * F.quadratic_character(b)


def test_upsilon():
    F5 = small_field(5)
    assert F5.upsilon(0) == 4
    assert F5.upsilon(3) == -1
    assert small_field(2).upsilon(1) == -1


def test_field_spec_roundtrip():
    ctx = field_for(4, 3)
    spec = ctx.to_spec()
    ctx2 = build_field(spec["p"], spec["e"], spec["m"], ext_modulus=spec["ext_modulus"])
    assert ctx2.alpha == ctx.alpha
    assert np.array_equal(ctx2.exp_index, ctx.exp_index)


def test_smallfield_gf9_squares():
    F9 = small_field(9)
    assert len(F9.squares) == 4
    sq = {F9.mul_el(a, a) for a in range(1, 9)}
    assert sq == F9.squares
