import random

import pytest

from fdepth import (DimensionMismatch, Monomial, ParseError, RingCtx,
                    ZeroInverse, ff_inv, format_polynomial, monomial_cmp,
                    parse_polynomial, poly_power_p)
from fdepth.ring import Polynomial


def test_ff_inv_examples():
    assert ff_inv(3, RingCtx(7, ("x",))) == 5
    assert ff_inv(1, RingCtx(2, ("x",))) == 1
    assert ff_inv(4, RingCtx(5, ("x",))) == 4


def test_ff_inv_zero_raises():
    with pytest.raises(ZeroInverse):
        ff_inv(0, RingCtx(5, ("x",)))
    with pytest.raises(ZeroInverse):
        ff_inv(10, RingCtx(5, ("x",)))


def test_ff_inv_all_residues():
    for p in (2, 3, 5, 7, 13, 251):
        ctx = RingCtx(p, ("x",))
        for a in range(1, p):
            assert a * ff_inv(a, ctx) % p == 1


def test_ringctx_validation():
    with pytest.raises(ValueError):
        RingCtx(4, ("x",))          # not prime
    with pytest.raises(ValueError):
        RingCtx(1, ("x",))
    with pytest.raises(ValueError):
        RingCtx(2 ** 16 + 1, ("x",))
    with pytest.raises(ValueError):
        RingCtx(2, ())              # no variables
    with pytest.raises(ValueError):
        RingCtx(2, ("x", "x"))      # duplicate names
    with pytest.raises(ValueError):
        RingCtx(2, ("x", "y"), "weird")
    with pytest.raises(ValueError):
        RingCtx(2, ("x", "y"), "block", split=0)
    assert RingCtx(65521, ("x",)).p == 65521  # largest prime < 2^16


def test_monomial_cmp_examples():
    ctx = RingCtx(2, ("x", "y", "z"))
    # grevlex: x^2 y > x y z (last nonzero entry of a-b negative)
    assert monomial_cmp(Monomial((2, 1, 0)), Monomial((1, 1, 1)), ctx) == 1
    lexctx = RingCtx(2, ("x", "y"), "lex")
    assert monomial_cmp(Monomial((1, 0)), Monomial((0, 2)), lexctx) == 1
    m = Monomial((1, 2, 3))
    assert monomial_cmp(m, m, ctx) == 0


def test_monomial_cmp_dimension_mismatch():
    ctx = RingCtx(2, ("x", "y"))
    with pytest.raises(DimensionMismatch):
        monomial_cmp(Monomial((1,)), Monomial((1, 2)), ctx)


def test_monomial_degree_cache():
    m = Monomial((3, 0, 2))
    assert m.degree == 5 == sum(m.exponents)


def _random_poly(rng, ctx, max_terms=4, max_deg=4):
    terms = []
    for _ in range(rng.randrange(max_terms + 1)):
        exps = [0] * ctx.n
        for _ in range(rng.randrange(max_deg + 1)):
            exps[rng.randrange(ctx.n)] += 1
        terms.append((rng.randrange(ctx.p), tuple(exps)))
    return Polynomial.from_terms(ctx, terms)


def test_ring_axioms_random():
    """Associativity, commutativity, distributivity on >= 1000 triples."""
    rng = random.Random(20240811)
    ctxs = [RingCtx(p, names)
            for p in (2, 3, 5)
            for names in (("x",), ("x", "y"), ("x", "y", "z"))]
    count = 0
    while count < 1000:
        ctx = rng.choice(ctxs)
        f, g, h = (_random_poly(rng, ctx) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f - f == ctx.zero()
        count += 1


def test_poly_mul_examples():
    ctx2 = RingCtx(2, ("x", "y"))
    f = parse_polynomial("x + y", ctx2)
    assert f * f == parse_polynomial("x^2 + y^2", ctx2)
    ctx3 = RingCtx(3, ("x", "y"))
    g = parse_polynomial("x + y", ctx3)
    assert g * g * g == parse_polynomial("x^3 + y^3", ctx3)
    assert f * ctx2.one() == f
    assert f * ctx2.zero() == ctx2.zero()


def test_poly_power_p_examples():
    ctx2 = RingCtx(2, ("x", "y"))
    f = parse_polynomial("x + y", ctx2)
    assert poly_power_p(f, 1, ctx2) == parse_polynomial("x^2 + y^2", ctx2)
    ctx3 = RingCtx(3, ("x",))
    assert poly_power_p(parse_polynomial("x", ctx3), 2, ctx3) == \
        parse_polynomial("x^9", ctx3)
    assert poly_power_p(ctx3.zero(), 5, ctx3) == ctx3.zero()


def test_poly_power_p_matches_repeated_multiplication():
    """Oracle equivalence: f^(p^e) computed by plain multiplication."""
    rng = random.Random(7)
    for p in (2, 3, 5):
        ctx = RingCtx(p, ("x", "y", "z"))
        for _ in range(40):
            f = _random_poly(rng, ctx, max_terms=3, max_deg=3)
            for e in (0, 1, 2):
                assert poly_power_p(f, e, ctx) == f ** (p ** e)


def _random_mono(rng, n, max_deg=5):
    return tuple(rng.randrange(max_deg) for _ in range(n))


@pytest.mark.parametrize("order,split", [("grevlex", 0), ("lex", 0), ("block", 2)])
def test_order_axioms_random(order, split):
    """Total order: antisymmetry, transitivity; multiplicative."""
    rng = random.Random(99)
    ctx = RingCtx(5, ("a", "b", "c", "d"), order, split)
    for _ in range(400):
        a, b, c = (Monomial(_random_mono(rng, 4)) for _ in range(3))
        ab = monomial_cmp(a, b, ctx)
        assert ab == -monomial_cmp(b, a, ctx)
        if ab == 0:
            assert a.exponents == b.exponents
        bc = monomial_cmp(b, c, ctx)
        if ab > 0 and bc > 0:
            assert monomial_cmp(a, c, ctx) > 0
        # multiplicative: a > b implies ac > bc
        prod_a = Monomial(tuple(x + y for x, y in zip(a.exponents, c.exponents)))
        prod_b = Monomial(tuple(x + y for x, y in zip(b.exponents, c.exponents)))
        assert monomial_cmp(prod_a, prod_b, ctx) == ab


def test_canonical_term_invariants():
    """No zero coefficients, no duplicate monomials, strictly descending."""
    ctx = RingCtx(5, ("x", "y"))
    f = Polynomial.from_terms(ctx, [(3, (1, 0)), (2, (1, 0)), (5, (0, 0)),
                                    (4, (0, 1)), (1, (0, 1))])
    coeffs = [c for c, _ in f.terms]
    monos = [m.exponents for _, m in f.terms]
    assert all(1 <= c <= 4 for c in coeffs)
    assert len(set(monos)) == len(monos)
    for a, b in zip(monos, monos[1:]):
        assert monomial_cmp(Monomial(a), Monomial(b), ctx) == 1
    # cancellation to zero
    z = Polynomial.from_terms(ctx, [(2, (1, 1)), (3, (1, 1))])
    assert z.is_zero()


def test_parse_format_roundtrip():
    ctx = RingCtx(7, ("x", "y", "z"))
    for text in ("x^3 + y^3 + z^3", "2*x*y - z^2", "5", "x", "- x + 3",
                 "x*x*y^2", "1 + x + x^2 + x^3"):
        f = parse_polynomial(text, ctx)
        assert parse_polynomial(format_polynomial(f), ctx) == f


def test_parse_rejects_garbage():
    ctx = RingCtx(7, ("x", "y"))
    for bad in ("", "w + 1", "x ^", "x +", "* x", "x ** 2", "x^y"):
        with pytest.raises(ParseError):
            parse_polynomial(bad, ctx)


def test_parse_whitespace_and_signs():
    ctx = RingCtx(7, ("x", "y"))
    assert parse_polynomial("  x - y ", ctx) == \
        parse_polynomial("x + 6*y", ctx)
    assert parse_polynomial("3*x*y^2", ctx) == \
        parse_polynomial("y^2 * x * 3", ctx)
