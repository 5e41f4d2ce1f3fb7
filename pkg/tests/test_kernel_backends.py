"""Differential tests of the two kernel backends.

Both backends are importable side by side regardless of which one the
package selected, so every operation can be compared on random inputs via
the exchange format (tuples of (coeff, exps))."""

import random

import pytest

from fdepth import _kernel_py as pyk

cyk = pytest.importorskip("fdepth._speedups")

ORDERS = [(0, 0), (1, 0), (2, 2)]


def rand_terms(rng, n, p, max_terms=6, max_exp=5):
    out = []
    for _ in range(rng.randrange(max_terms + 1)):
        out.append((rng.randrange(p),
                    tuple(rng.randrange(max_exp) for _ in range(n))))
    return out


def both(terms, p, n, okind, split):
    f_py = pyk.poly_from_terms(terms, p, n, okind, split)
    f_cy = cyk.poly_from_terms(terms, p, n, okind, split)
    return f_py, f_cy


def assert_same(f_py, f_cy):
    assert pyk.poly_terms(f_py) == cyk.poly_terms(f_cy)


def test_construction_and_queries_agree():
    rng = random.Random(1)
    for okind, split in ORDERS:
        for _ in range(200):
            n = rng.randrange(1, 5) if okind != 2 else rng.randrange(3, 6)
            p = rng.choice([2, 3, 5, 251])
            terms = rand_terms(rng, n, p)
            f_py, f_cy = both(terms, p, n, okind, split)
            assert_same(f_py, f_cy)
            assert pyk.poly_is_zero(f_py) == cyk.poly_is_zero(f_cy)
            assert pyk.poly_nterms(f_py) == cyk.poly_nterms(f_cy)
            assert pyk.poly_lt(f_py) == cyk.poly_lt(f_cy)
            assert pyk.poly_total_degree(f_py) == cyk.poly_total_degree(f_cy)
            assert pyk.poly_is_homogeneous(f_py) == cyk.poly_is_homogeneous(f_cy)
            assert pyk.poly_terms(pyk.poly_tail(f_py)) == \
                cyk.poly_terms(cyk.poly_tail(f_cy))


def test_mono_ops_agree():
    rng = random.Random(2)
    for okind, split in ORDERS:
        for _ in range(500):
            n = 4
            a = tuple(rng.randrange(6) for _ in range(n))
            b = tuple(rng.randrange(6) for _ in range(n))
            assert pyk.mono_cmp(a, b, okind, split) == \
                cyk.mono_cmp(a, b, okind, split)
            assert pyk.mono_key(a, okind, split) == \
                cyk.mono_key(a, okind, split)
            assert pyk.mono_divides(a, b) == cyk.mono_divides(a, b)
            assert pyk.mono_lcm(a, b) == cyk.mono_lcm(a, b)
            assert pyk.mono_mul(a, b) == cyk.mono_mul(a, b)
            assert pyk.mono_deg(a) == cyk.mono_deg(a)


def test_arithmetic_agrees():
    rng = random.Random(3)
    for okind, split in ORDERS:
        for _ in range(200):
            n = 3
            p = rng.choice([2, 3, 7])
            t1, t2 = rand_terms(rng, n, p), rand_terms(rng, n, p)
            f_py, f_cy = both(t1, p, n, okind, split)
            g_py, g_cy = both(t2, p, n, okind, split)
            assert pyk.poly_terms(pyk.poly_add(f_py, g_py, p, okind, split)) \
                == cyk.poly_terms(cyk.poly_add(f_cy, g_cy, p, okind, split))
            assert pyk.poly_terms(pyk.poly_sub(f_py, g_py, p, okind, split)) \
                == cyk.poly_terms(cyk.poly_sub(f_cy, g_cy, p, okind, split))
            assert pyk.poly_terms(pyk.poly_mul(f_py, g_py, p, okind, split)) \
                == cyk.poly_terms(cyk.poly_mul(f_cy, g_cy, p, okind, split))
            assert pyk.poly_terms(pyk.poly_neg(f_py, p)) == \
                cyk.poly_terms(cyk.poly_neg(f_cy, p))
            c = rng.randrange(p)
            assert pyk.poly_terms(pyk.poly_scale(f_py, c, p)) == \
                cyk.poly_terms(cyk.poly_scale(f_cy, c, p))
            m = tuple(rng.randrange(3) for _ in range(n))
            assert pyk.poly_terms(pyk.poly_mul_term(f_py, c, m, p)) == \
                cyk.poly_terms(cyk.poly_mul_term(f_cy, c, m, p))
            assert pyk.poly_terms(
                pyk.poly_sub_mul_term(f_py, c, m, g_py, p, okind, split)) == \
                cyk.poly_terms(
                    cyk.poly_sub_mul_term(f_cy, c, m, g_cy, p, okind, split))
            assert pyk.poly_terms(pyk.poly_power_bracket(f_py, p, p)) == \
                cyk.poly_terms(cyk.poly_power_bracket(f_cy, p, p))


def test_normal_form_agrees():
    rng = random.Random(4)
    for okind, split in ORDERS:
        for _ in range(100):
            n = 3
            p = rng.choice([2, 5])
            f_py, f_cy = both(rand_terms(rng, n, p, max_terms=8), p, n,
                              okind, split)
            basis_py, basis_cy = [], []
            for _ in range(rng.randrange(1, 4)):
                t = rand_terms(rng, n, p, max_terms=3)
                g_py, g_cy = both(t, p, n, okind, split)
                if not pyk.poly_is_zero(g_py):
                    basis_py.append(g_py)
                    basis_cy.append(g_cy)
            if not basis_py:
                continue
            r_py = pyk.poly_nf(f_py, basis_py, p, okind, split)
            r_cy = cyk.poly_nf(f_cy, basis_cy, p, okind, split)
            assert pyk.poly_terms(r_py) == cyk.poly_terms(r_cy)


def test_exponent_overflow_guards():
    with pytest.raises(OverflowError):
        cyk.poly_from_terms([(1, (2 ** 31,))], 5, 1, 0, 0)
    f = cyk.poly_from_terms([(1, (2 ** 30,))], 5, 1, 0, 0)
    with pytest.raises(OverflowError):
        cyk.poly_power_bracket(f, 5 ** 14, 5)
