"""Randomized algebraic laws, driven by hypothesis."""
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from fgq.formats import format_module, format_table, parse_module, parse_table
from fgq.genmod import PointedQuasigroup, RPoly, check_module, module_from_form, poly_act, rho, sigma
from fgq.identities import is_FG
from fgq.isotopes import IsotopeConvention, isotope_neutral, loop_neutral, principal_isotope
from fgq.linear import ArithmeticForm, build_linear, extract_form, form_at_neutral
from fgq.qcore import CayleyTable, alpha_beta, congruence_closure, is_congruence, quotient, validate_table
from fgq.search import random_latin, random_linear
from fgq.structure import mq, mq_via_form

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def latin_tables(draw, min_order=1, max_order=7):
    n = draw(st.integers(min_order, max_order))
    seed = draw(st.integers(0, 2**32 - 1))
    return CayleyTable(random_latin(n, np.random.default_rng(seed)))


@st.composite
def fg_tables(draw, max_order=12):
    seed = draw(st.integers(0, 2**32 - 1))
    while True:
        d = random_linear(None, seed, 1)[0]
        if d.group.n <= max_order:
            return build_linear(d.group, d.f, d.g, d.e)
        seed += 1


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, 2)] * 4).filter(lambda e: sum(e) > 0),
        st.integers(-3, 3), max_size=4))
    return RPoly(terms)


@SETTINGS
@given(latin_tables())
def test_random_latin_is_latin(t):
    assert validate_table(t)
    assert oracles.is_latin(t.rows())


@SETTINGS
@given(latin_tables(), st.data())
def test_isotope_is_loop_with_predicted_neutral(t, data):
    a = data.draw(st.integers(0, t.n - 1))
    b = data.draw(st.integers(0, t.n - 1))
    for conv in IsotopeConvention:
        iso = principal_isotope(t, a, b, conv)
        assert validate_table(iso)
        assert loop_neutral(iso) == isotope_neutral(t, a, b, conv)
    assert isotope_neutral(t, a, b) == t.mul(b, a)


@SETTINGS
@given(latin_tables())
def test_alpha_beta_defining_equations(t):
    alpha, beta = alpha_beta(t)
    for x in range(t.n):
        assert t.mul(x, alpha[x]) == x == t.mul(beta[x], x)


@SETTINGS
@given(latin_tables(min_order=2, max_order=6), st.data())
def test_congruence_closure_is_least(t, data):
    a = data.draw(st.integers(0, t.n - 1))
    b = data.draw(st.integers(0, t.n - 1))
    p = congruence_closure(t, [(a, b)])
    assert p.labels[a] == p.labels[b]
    assert is_congruence(t, p)
    assert list(p.labels) == oracles.congruence_classes(t.rows(), [(a, b)])
    assert validate_table(quotient(t, p))


@SETTINGS
@given(fg_tables(), st.data())
def test_extracted_forms_recompose(t, data):
    assert is_FG(t)
    a = data.draw(st.integers(0, t.n - 1))
    b = data.draw(st.integers(0, t.n - 1))
    form = extract_form(t, a, b)
    assert form.table() == t
    assert form.neutral == t.mul(b, a)
    assert form == form_at_neutral(t, form.neutral)
    assert mq_via_form(form) == mq(t)


@SETTINGS
@given(fg_tables(), st.data())
def test_rho_sigma_inverse(t, data):
    p = data.draw(st.integers(0, t.n - 1))
    pq = PointedQuasigroup(t, p)
    pm = rho(pq)
    assert check_module(pm.module)
    assert sigma(pm) == pq
    assert rho(sigma(pm)) == pm
    assert (p in mq(t)) == pm.is_centrally_pointed()


@SETTINGS
@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == RPoly.zero()


@SETTINGS
@given(st.integers(0, 2**32 - 1), polys(), polys())
def test_action_is_additive_and_multiplicative(seed, p, q):
    d = random_linear(None, seed, 1)[0]
    m = module_from_form(ArithmeticForm(d.group, d.f, d.g, d.e)).module
    g = m.group
    for x in range(g.n):
        px, qx = poly_act(p, m, x), poly_act(q, m, x)
        assert poly_act(p + q, m, x) == int(g.add(px, qx))
        assert poly_act(p * q, m, x) == poly_act(p, m, qx)


@SETTINGS
@given(st.integers(1, 6), st.integers(0, 2**32 - 1), st.booleans(), st.sampled_from([" ", "  ", "\t"]))
def test_table_text_round_trip(n, seed, with_point, sep):
    rng = np.random.default_rng(seed)
    cells = rng.integers(n, size=(n, n))
    t = CayleyTable(cells)
    point = int(rng.integers(n)) if with_point else None
    canonical = format_table(t, point)
    assert parse_table(canonical) == (t, point)
    noisy = "# generated\n\n" + "\n".join(sep + sep.join(line.split()) + sep for line in canonical.splitlines())
    assert format_table(*parse_table(noisy)) == canonical


@SETTINGS
@given(fg_tables(max_order=8), st.data())
def test_module_text_round_trip(t, data):
    pm = rho(PointedQuasigroup(t, data.draw(st.integers(0, t.n - 1))))
    text = format_module(pm)
    assert parse_module(text) == pm
    assert format_module(parse_module(text)) == text
