import random

import pytest

from fdepth import (Ideal, NotMonomial, NotSquarefree, ResourceExhausted,
                    RingCtx, Submodule, UnitIdeal, VectorPoly, ZeroDimensional,
                    buchberger, dim_quotient, eliminate, height, ideal_equal,
                    membership, minimal_primes_monomial, parse_polynomial,
                    punctured_connected, radical_monomial, reduce, syzygies)


def P(text, ctx):
    return parse_polynomial(text, ctx)


@pytest.fixture
def lex2():
    return RingCtx(5, ("x", "y"), "lex")


@pytest.fixture
def f2xy():
    return RingCtx(2, ("x", "y"))


# ---------------------------------------------------------------------------
# reduce

def test_reduce_two_steps():
    ctx = RingCtx(7, ("x", "y", "z"), "lex")
    basis = [P("x^2 - z", ctx), P("y - 1", ctx)]
    assert reduce(P("x^2*y", ctx), basis) == P("z", ctx)


def test_reduce_self_is_zero(lex2):
    f = P("x^2 + 3*x*y", lex2)
    assert reduce(f, [f]).is_zero()


def test_reduce_against_gb(lex2):
    # division by hand: x reduces to y^2 against {x - y^2, y^3 - 1}
    gb = [P("x - y^2", lex2), P("y^3 - 1", lex2)]
    assert reduce(P("x", lex2), gb) == P("y^2", lex2)


def test_reduce_idempotent(lex2):
    rng = random.Random(42)
    gb = list(buchberger(Ideal(lex2, ["x^2 - y", "x*y - 1"])))
    for _ in range(50):
        terms = [(rng.randrange(5), (rng.randrange(4), rng.randrange(4)))
                 for _ in range(4)]
        from fdepth.ring import Polynomial
        f = Polynomial.from_terms(lex2, terms)
        r = reduce(f, gb)
        assert reduce(r, gb) == r


def test_reduce_deterministic_reducer_order():
    # x^2 y^2 is divisible by both leads; list order picks the first
    ctx = RingCtx(5, ("x", "y"))
    f = P("x^2*y^2", ctx)
    r1 = reduce(f, [P("x^2", ctx), P("y^2", ctx)])
    r2 = reduce(f, [P("y^2", ctx), P("x^2", ctx)])
    assert r1.is_zero() and r2.is_zero()
    g = P("x^2*y^2 + x^3", ctx)
    assert reduce(g, [P("x^2 - y", ctx)]) == P("y^3 + x*y", ctx)


# ---------------------------------------------------------------------------
# buchberger

def test_buchberger_lex_classic(lex2):
    I = Ideal(lex2, ["x^2 - y", "x*y - 1"])
    gb = buchberger(I)
    assert gb == (P("x - y^2", lex2).monic(), P("y^3 - 1", lex2).monic())
    # certificate: inputs and all S-pairs reduce to zero against the output
    for g in I.gens:
        assert reduce(g, list(gb)).is_zero()


def test_buchberger_monomials(f2xy):
    assert buchberger(Ideal(f2xy, ["x", "y"])) == (P("x", f2xy), P("y", f2xy))
    assert buchberger(Ideal(f2xy, [])) == ()


def test_buchberger_is_autoreduced():
    ctx = RingCtx(7, ("x", "y", "z"))
    I = Ideal(ctx, ["x^2 + y*z", "x*y - z^2", "y^3 - x*z"])
    gb = buchberger(I)
    lms = [g.lm_exps() for g in gb]
    for i, g in enumerate(gb):
        assert g.lt()[0] == 1  # monic
        for c, m in g.terms[1:]:
            # no tail term divisible by another leading term
            for k, lm in enumerate(lms):
                assert not all(a <= b for a, b in zip(lm, m.exponents))


def test_pair_cap():
    ctx = RingCtx(7, ("x", "y", "z"))
    I = Ideal(ctx, ["x^2 + y*z", "x*y - z^2", "y^3 - x*z"])
    with pytest.raises(ResourceExhausted):
        I2 = Ideal(ctx, [g for g in I.gens])
        I2.groebner(pair_cap=1)


# ---------------------------------------------------------------------------
# membership / equality

def test_membership_examples(lex2):
    I = Ideal(lex2, ["x^2 - y", "x*y - 1"])
    assert not membership(P("x", lex2), I)       # NF = y^2 != 0
    assert membership(P("x^2 - y", lex2), I)
    assert membership(lex2.zero(), I)


def test_ideal_equal(f2xy):
    I = Ideal(f2xy, ["x^2", "x*y"])
    J = Ideal(f2xy, ["x^2", "x*y", "x^2 + x*y"])
    assert ideal_equal(I, J)
    assert not ideal_equal(Ideal(f2xy, ["x"]), Ideal(f2xy, ["x^2"]))
    assert ideal_equal(Ideal(f2xy, ["x + y", "y"]), Ideal(f2xy, ["x", "y"]))


# ---------------------------------------------------------------------------
# syzygies

def test_syzygies_examples(f2xy):
    S = syzygies(Ideal(f2xy, ["x^2", "x*y"]))
    assert len(S.gens) == 1
    v = S.gens[0]
    assert v == VectorPoly([P("y", f2xy), P("x", f2xy)])  # (y, -x) mod 2

    K = syzygies(Ideal(f2xy, ["x", "y"]))
    assert len(K.gens) == 1

    assert syzygies(Ideal(f2xy, ["1"])).is_zero()


def test_syzygies_annihilate():
    ctx = RingCtx(7, ("x", "y", "z"))
    gens = [P("x*y - z^2", ctx), P("x^2 + y*z", ctx), P("y^2 - x*z", ctx)]
    S = syzygies(Ideal(ctx, gens))
    assert S.gens, "a 3-generator height-2-ish ideal has syzygies"
    for v in S.gens:
        acc = ctx.zero()
        for c, g in zip(v.entries, gens):
            acc = acc + c * g
        assert acc.is_zero()


def test_syzygies_generate_taylor_relations():
    """Independent oracle for monomial ideals: every Taylor relation
    (lcm/m_i) e_i - (lcm/m_j) e_j lies in the computed syzygy module."""
    ctx = RingCtx(3, ("x", "y", "z", "w"))
    gens = ["x*z", "x*w", "y*z", "y*w"]
    I = Ideal(ctx, gens)
    S = syzygies(I)
    monos = [g.lt()[1].exponents for g in I.gens]
    zero = ctx.zero()
    for i in range(len(monos)):
        for j in range(i + 1, len(monos)):
            lcm = tuple(max(a, b) for a, b in zip(monos[i], monos[j]))
            entries = [zero] * len(monos)
            from fdepth.ring import Polynomial
            entries[i] = Polynomial.from_terms(
                ctx, [(1, tuple(a - b for a, b in zip(lcm, monos[i])))])
            entries[j] = Polynomial.from_terms(
                ctx, [(-1, tuple(a - b for a, b in zip(lcm, monos[j])))])
            assert S.contains(VectorPoly(entries))


def test_syzygies_of_regular_sequence_are_koszul():
    """For a regular sequence the Koszul relations generate; membership in
    both directions pins the computed module."""
    ctx = RingCtx(5, ("x", "y", "z"))
    gens = [P("x", ctx), P("y", ctx), P("z", ctx)]
    S = syzygies(Ideal(ctx, gens))
    zero = ctx.zero()
    koszul = []
    for i in range(3):
        for j in range(i + 1, 3):
            entries = [zero] * 3
            entries[i] = gens[j]
            entries[j] = -gens[i]
            koszul.append(VectorPoly(entries))
    M = Submodule(ctx, 3, koszul)
    assert all(S.contains(v) for v in koszul)
    assert all(M.contains(v) for v in S.gens)


def test_submodule_membership():
    ctx = RingCtx(5, ("x", "y"))
    v1 = VectorPoly([P("x", ctx), P("y", ctx)])
    v2 = VectorPoly([P("y", ctx), ctx.zero()])
    M = Submodule(ctx, 2, [v1, v2])
    assert M.contains(v1 + v2)
    assert M.contains(v1.scale(P("x*y", ctx)))
    assert not M.contains(VectorPoly([ctx.one(), ctx.zero()]))


# ---------------------------------------------------------------------------
# eliminate

def test_eliminate_cusp_parametrization():
    ctx = RingCtx(7, ("x", "y", "t"))
    I = Ideal(ctx, ["x - t^2", "y - t^3"])
    E = eliminate(I, ["t"])
    assert E.ctx.var_names == ("x", "y")
    target = Ideal(E.ctx, ["x^3 - y^2"])
    assert ideal_equal(E, target)
    # membership both directions in the big ring
    assert membership(P("y^2 - x^3", ctx), I)


def test_eliminate_free_variable():
    ctx = RingCtx(5, ("x", "t"))
    E = eliminate(Ideal(ctx, ["x - t"]), ["t"])
    assert E.is_zero_ideal()
    E2 = eliminate(Ideal(ctx, ["t", "x"]), ["t"])
    assert ideal_equal(E2, Ideal(E2.ctx, ["x"]))


def test_eliminate_nothing_returns_same_ideal():
    ctx = RingCtx(5, ("x", "y"))
    I = Ideal(ctx, ["x*y - 1"])
    assert ideal_equal(eliminate(I, []), I)


def test_eliminate_rejects_all_variables():
    ctx = RingCtx(5, ("x", "y"))
    with pytest.raises(ValueError):
        eliminate(Ideal(ctx, ["x"]), ["x", "y"])


# ---------------------------------------------------------------------------
# dimension / height

def test_dim_examples():
    ctx4 = RingCtx(2, ("x", "y", "z", "w"))
    assert dim_quotient(Ideal(ctx4, ["x*z", "x*w", "y*z", "y*w"])) == 2
    ctx2 = RingCtx(2, ("x", "y"))
    assert dim_quotient(Ideal(ctx2, ["x^2", "x*y"])) == 1
    assert dim_quotient(Ideal(ctx2, [])) == 2
    assert dim_quotient(Ideal(ctx2, ["3"])) == -1


def test_dim_via_minimal_primes_oracle():
    """dim R/I = n - min prime size for squarefree monomial ideals."""
    for gens, names in [
        (["x*z", "x*w", "y*z", "y*w"], ("x", "y", "z", "w")),
        (["x*y", "y*z"], ("x", "y", "z")),
        (["x*y*z"], ("x", "y", "z")),
    ]:
        ctx = RingCtx(3, names)
        I = Ideal(ctx, gens)
        primes = minimal_primes_monomial(I)
        assert dim_quotient(I) == ctx.n - min(len(q) for q in primes)


def test_height_examples():
    ctx4 = RingCtx(2, ("x", "y", "z", "w"))
    assert height(Ideal(ctx4, ["x*z", "x*w", "y*z", "y*w"])) == 2
    ctx2 = RingCtx(2, ("x", "y"))
    assert height(Ideal(ctx2, ["x"])) == 1
    assert height(Ideal(ctx2, ["x", "y"])) == 2
    with pytest.raises(UnitIdeal):
        height(Ideal(ctx2, ["1"]))


def test_dim_height_duality_on_corpus():
    corpus = [
        (("x", "y", "z", "w"), ["x*z", "x*w", "y*z", "y*w"]),
        (("x", "y", "z", "w"), ["x*y", "y*z", "z*w", "w*x"]),
        (("x", "y", "z"), ["x*y", "y*z"]),
        (("x", "y"), ["x^2", "x*y"]),
        (("x", "y", "z"), ["x", "y", "z"]),
        (("x", "y", "z"), ["x^2 + y*z"]),
    ]
    for names, gens in corpus:
        ctx = RingCtx(3, names)
        I = Ideal(ctx, gens)
        assert dim_quotient(I) + height(I) == ctx.n


# ---------------------------------------------------------------------------
# monomial combinatorics

def test_radical_monomial_examples():
    ctx = RingCtx(2, ("x", "y"))
    assert ideal_equal(radical_monomial(Ideal(ctx, ["x^2", "x*y"])),
                       Ideal(ctx, ["x"]))
    assert ideal_equal(radical_monomial(Ideal(ctx, ["x^2*y^3"])),
                       Ideal(ctx, ["x*y"]))
    sqfree = Ideal(ctx, ["x*y"])
    assert ideal_equal(radical_monomial(sqfree), sqfree)


def test_radical_monomial_idempotent_and_contains():
    ctx = RingCtx(3, ("x", "y", "z"))
    I = Ideal(ctx, ["x^3*y", "y^2*z^4", "z^2"])
    rad = radical_monomial(I)
    assert ideal_equal(radical_monomial(rad), rad)
    for g in I.gens:
        assert membership(g, rad)
    with pytest.raises(NotMonomial):
        radical_monomial(Ideal(ctx, ["x + y"]))


def test_minimal_primes_examples():
    ctx = RingCtx(2, ("x", "y", "z", "w"))
    I = Ideal(ctx, ["x*z", "x*w", "y*z", "y*w"])
    assert minimal_primes_monomial(I) == [("x", "y"), ("z", "w")]
    ctx2 = RingCtx(2, ("x", "y"))
    assert minimal_primes_monomial(Ideal(ctx2, ["x*y"])) == [("x",), ("y",)]
    assert minimal_primes_monomial(Ideal(ctx2, ["x"])) == [("x",)]
    with pytest.raises(NotSquarefree):
        minimal_primes_monomial(Ideal(ctx2, ["x^2"]))


def test_punctured_connected_examples():
    ctx4 = RingCtx(2, ("x", "y", "z", "w"))
    assert not punctured_connected(Ideal(ctx4, ["x*z", "x*w", "y*z", "y*w"]))
    ctx3 = RingCtx(2, ("x", "y", "z"))
    assert punctured_connected(Ideal(ctx3, ["x*y"]))
    assert punctured_connected(Ideal(ctx3, ["x"]))  # prime: one vertex
    with pytest.raises(ZeroDimensional):
        punctured_connected(Ideal(ctx3, ["x", "y", "z"]))
    with pytest.raises(UnitIdeal):
        punctured_connected(Ideal(ctx3, ["1"]))


def test_gb_cache_is_reduced_and_consistent():
    """Cached GB generates the same ideal as the input generators."""
    ctx = RingCtx(7, ("x", "y", "z"))
    I = Ideal(ctx, ["x^2*y - z", "x*z - y^2", "y^3 - x"])
    gb = buchberger(I)
    J = Ideal(ctx, [str(g) for g in gb])
    assert ideal_equal(I, J)
