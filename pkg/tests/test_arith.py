from fractions import Fraction
from math import comb, gcd

import pytest

from isoring.arith import (
    BUILTINS,
    FormalLog,
    additive_companion,
    catalan_number,
    companion_of,
    dirichlet_conv,
    dirichlet_inverse,
    global_rep,
    infer_core,
    is_multiplicative,
    local_rep,
    rearick_log,
    representability_check,
    trig,
    trig_sum,
)
from isoring.errors import NonUnit
from isoring.logexp import conv, delta, log_op
from isoring.sequences import Core, Seq

from oracles import divisor_count, divisor_sum, mangoldt_prime, mobius, totient

zeta, mu, tau, sigma, phi, zeta_1, dlt, catalan = (BUILTINS[n] for n in
                                                    ["zeta", "mu", "tau", "sigma", "phi", "zeta_1", "delta", "catalan"])
PRIMES = (2, 3, 5, 7)


def test_builtins_match_oracles():
    for n in range(1, 80):
        assert tau(n) == divisor_count(n)
        assert sigma(n) == divisor_sum(n)
        assert phi(n) == totient(n)
        assert mu(n) == mobius(n)
        assert zeta(n) == 1 and zeta_1(n) == n
        assert dlt(n) == (1 if n == 1 else 0)
    assert [catalan(n) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]


def test_multiplicativity_flags():
    for f in (zeta, mu, tau, sigma, phi, zeta_1, dlt):
        assert f.multiplicative and is_multiplicative(f, 120)
    assert not catalan.multiplicative and not is_multiplicative(catalan, 30)


def test_infer_core_examples():
    assert infer_core([1, 1, 1, 1, 1]).values == (1,)
    assert infer_core([1, 2, 3, 4, 5]).values == (2, -1)
    p = 5
    assert infer_core([1, p - 1, p * p - p, p ** 3 - p * p]).values == (p - 1,) * 3
    with pytest.raises(NonUnit):
        infer_core([2, 1, 1])


@pytest.mark.parametrize("p", PRIMES)
def test_local_cores(p):
    assert local_rep(zeta, p, 12).core.values == (1,)
    assert local_rep(tau, p, 12).core.values == (2, -1)
    assert local_rep(sigma, p, 12).core.values == (p + 1, -p)
    assert local_rep(zeta_1, p, 12).core.values == (p,)
    assert local_rep(dlt, p, 12).core.values == ()
    rep = local_rep(phi, p, 12)
    assert not rep.finite
    assert rep.core_values() == [p - 1] * 12


@pytest.mark.parametrize("p", PRIMES)
def test_local_reps_reproduce_values(p):
    for f in (zeta, mu, tau, sigma, phi, zeta_1, dlt):
        rep = local_rep(f, p, 12)
        assert rep.values == [f(p ** n) for n in range(13)]
        assert rep.reproduces()


def test_mu_core_is_all_minus_one():
    # (1, -1, 0, 0, ...) = (1 - X) needs 1 - t_1 X - t_2 X^2 - ... = 1/(1 - X), i.e. t_j = -1 for every j
    rep = local_rep(mu, 3, 12)
    assert rep.values[:3] == [1, -1, 0]
    assert not rep.finite
    assert rep.core_values() == [-1] * 12
    # the single-parameter core [-1] gives (-1)^n instead
    assert Seq(Core.parse("-1")).take(4) == [1, -1, 1, -1, 1]


def test_local_rep_needs_multiplicative():
    with pytest.raises(ValueError):
        local_rep(catalan, 2, 5)


def test_global_catalan_core():
    rep = global_rep(catalan, 15)
    assert not rep.finite
    assert rep.core_values()[:6] == [1, 1, 2, 5, 14, 42]
    assert rep.core_values() == [catalan_number(j - 1) for j in range(1, 16)]
    assert rep.reproduces()


def test_global_delta_core_is_empty():
    rep = global_rep(dlt, 10)
    assert rep.finite and rep.core.values == ()


def test_dirichlet_examples():
    assert dirichlet_conv(zeta, zeta, 12)[12] == 6
    assert dirichlet_conv(zeta, zeta_1, 6)[6] == 12
    inv = dirichlet_inverse(zeta, 30)
    assert inv[2] == -1 and inv[4] == 0
    assert all(inv[n] == mobius(n) for n in range(1, 31))


def test_dirichlet_inverse_identity():
    for f in (tau, sigma, phi, catalan):
        inv = dirichlet_inverse(f, 60)
        prod = dirichlet_conv(f, inv, 60)
        assert all(prod[n] == (1 if n == 1 else 0) for n in range(1, 61))
    with pytest.raises(NonUnit):
        dirichlet_inverse(lambda n: 0, 5)


def test_formal_log_arithmetic():
    a = FormalLog.of(12)
    assert a.coeffs == {2: 2, 3: 1}
    assert str(a) == "2*log(2) + log(3)"
    assert a - FormalLog.of(4) == FormalLog.of(3)
    assert (a * Fraction(1, 2)).coeffs == {2: 1, 3: Fraction(1, 2)}
    assert FormalLog() == 0 and str(FormalLog()) == "0"
    assert FormalLog.from_json(a.to_json()) == a


def test_rearick_examples():
    L = rearick_log(zeta, 12)
    assert L[8] == FormalLog({2: 1})
    assert L[6] == 0
    assert L[1] == 0
    assert rearick_log(tau, 4)[4] == FormalLog({2: 2})
    with pytest.raises(ValueError):
        rearick_log(lambda n: 2, 4)


def test_rearick_vanishing():
    for f in (zeta, tau, sigma, phi, mu):
        L = rearick_log(f, 200)
        for m in range(1, 201):
            if mangoldt_prime(m) is None:
                assert L[m] == 0, (f.name, m)


def test_mangoldt():
    L = rearick_log(zeta, 200)
    for m in range(2, 201):
        p = mangoldt_prime(m)
        assert L[m] == (FormalLog({p: 1}) if p else FormalLog())


def test_rearick_additivity():
    for f, g in [(zeta, zeta), (zeta, zeta_1)]:
        fg = dirichlet_conv(f, g, 100)
        Lfg = rearick_log(fg.__getitem__, 100)
        Lf, Lg = rearick_log(f, 100), rearick_log(g, 100)
        assert all(Lfg[n] == Lf[n] + Lg[n] for n in range(1, 101))


def test_rearick_bridge():
    for f in (zeta, mu, tau, sigma, phi, zeta_1):
        for p in (2, 3):
            N = p ** 8
            L = rearick_log(f, N)
            G = local_rep(f, p, 8).log()
            for n in range(1, 9):
                assert L[p ** n] == FormalLog({p: G[n]})


def test_companions():
    for p in PRIMES:
        assert companion_of(tau, 8, p)[1:] == [2] * 8
        assert companion_of(sigma, 8, p)[1:] == [p ** n + 1 for n in range(1, 9)]
        assert companion_of(phi, 8, p)[1:] == [p ** n - 1 for n in range(1, 9)]
        assert companion_of(mu, 8, p)[1:] == [-1] * 8


def test_additive_companion_is_additive():
    for f in (tau, sigma, phi):
        g = additive_companion(f, 100)
        assert g[1] == 0
        for m in range(1, 101):
            for n in range(1, 100 // m + 1):
                if gcd(m, n) == 1:
                    assert g[m * n] == g[m] + g[n]


def test_catalan_shift_and_companion():
    F = global_rep(catalan, 16).values
    assert conv(F, F)[:16] == F[1:17]
    Xi = global_rep(catalan, 15).log()
    for n in range(1, 16):
        assert Xi[n] == comb(2 * n - 1, n) == Fraction(n + 1, 2) * catalan_number(n)


def test_trig_tables_spot_values():
    t = trig(local_rep(tau, 3, 4), 3)
    assert (t.cos[2], t.sin[2]) == (2, 1)
    p = 5
    s = trig(local_rep(sigma, p, 4), 3)
    assert s.cos[3] == s.sin[3] == Fraction(p ** 3 + p ** 2 + p + 1, 2)
    g = trig(global_rep(catalan, 4), 3)
    assert (g.cos[3], g.sin[3]) == (Fraction(3, 2), Fraction(7, 2))
    for pair in (t, s, g):
        assert pair.agree
        assert (pair.cos[0], pair.sin[0]) == (1, 0)


def _pythagoras(pair, n):
    C2, S2 = conv(pair.cos, pair.cos), conv(pair.sin, pair.sin)
    return [a - b for a, b in zip(C2, S2)] == delta(n)


def test_trig_pythagoras_builtins():
    for f in (zeta, mu, tau, sigma, phi, zeta_1, dlt):
        for p in (2, 3):
            pair = trig(local_rep(f, p, 10), 10)
            assert pair.agree and _pythagoras(pair, 10)
    pair = trig(global_rep(catalan, 10), 10)
    assert pair.agree and _pythagoras(pair, 10)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_trig_pythagoras_generic(k):
    pair = trig(Core.generic(k), 10 if k < 3 else 8)
    assert pair.agree
    assert _pythagoras(pair, len(pair.cos) - 1)


@pytest.mark.parametrize("k", [1, 2])
def test_trig_addition_laws_generic(k):
    n = 6
    a, b = Core.generic(k), Core.generic(k, offset=k)
    Ga, Gb = log_op(Seq(a).take(n), a), log_op(Seq(b).take(n), b)
    ta, tb, tab = trig(a, n), trig(b, n), trig_sum(Ga, Gb)
    cc, ss = conv(ta.cos, tb.cos), conv(ta.sin, tb.sin)
    sc, cs = conv(ta.sin, tb.cos), conv(ta.cos, tb.sin)
    assert tab.cos == [x + y for x, y in zip(cc, ss)]
    assert tab.sin == [x + y for x, y in zip(sc, cs)]


def test_representability_reports():
    r = representability_check(tau, 50)
    assert r.multiplicative and r.locally_representable
    assert all(rep.core.values == (2, -1) for rep in r.local.values())

    r = representability_check(catalan, 20)
    assert not r.multiplicative and not r.locally_representable
    assert r.globally_representable

    r = representability_check(dlt, 20)
    assert r.locally_representable and r.globally_representable
    assert all(rep.core.values == () for rep in r.local.values())
    assert r.global_rep.core.values == ()
    assert r.to_json()["global"]["core"] == []
