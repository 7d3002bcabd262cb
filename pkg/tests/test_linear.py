import numpy as np
import pytest

import oracles
from fgq.errors import CapacityError, InvalidFormError, NotAGroupError, NotFGError, PreconditionError
from fgq.identities import IdentityName, check_identity
from fgq.linear import (ArithmeticForm, Convention, GroupTable, automorphisms, build_linear, canonical_strong_form,
                        center, check_F_linear, cyclic_group, dihedral_group, direct_product, enumerate_forms,
                        extract_form, form_at_neutral, form_violation, inner_automorphism, is_automorphism,
                        is_form_homomorphism, phi, quaternion_group, strong_forms)
from fgq.qcore import CayleyTable, compose, table_from_function
from fgq.search import group_catalog
from fgq.structure import mq

Z5 = cyclic_group(5)
S3 = dihedral_group(3)
IDENT5 = tuple(range(5))


def times(k, n):
    return tuple((k * x) % n for x in range(n))


def involutions(g):
    return [x for x in range(g.n) if x != g.neutral and g.add(x, x) == g.neutral]


def s3_translate(c):
    return build_linear(S3, tuple(range(6)), tuple(range(6)), c)


class TestGroups:
    def test_from_table_rejects_non_group(self, q5):
        with pytest.raises(NotAGroupError):
            GroupTable.from_table(q5)

    def test_center(self):
        assert center(Z5) == frozenset(range(5))
        assert center(S3) == frozenset({S3.neutral})
        assert center(direct_product(cyclic_group(2), cyclic_group(2))) == frozenset(range(4))
        assert len(center(quaternion_group())) == 2
        assert len(center(dihedral_group(4))) == 2

    def test_catalog_tables_are_groups(self):
        for name, g in group_catalog().items():
            assert oracles.is_group(g.table.rows()), name

    @pytest.mark.parametrize("name,count", [("Z2", 1), ("Z5", 4), ("Z2xZ2", 6), ("D3", 6), ("Z6", 2),
                                            ("Z8", 4), ("Z2xZ4", 8), ("Z2^3", 168), ("D4", 8), ("Q8", 24),
                                            ("Z16", 8)])
    def test_automorphism_counts(self, name, count):
        assert len(automorphisms(group_catalog()[name])) == count

    @pytest.mark.parametrize("name", ["Z3", "Z4", "Z5", "Z2xZ2", "Z6", "D3"])
    def test_automorphisms_match_brute_force(self, name):
        g = group_catalog()[name]
        assert automorphisms(g) == oracles.group_automorphisms(g.table.rows())

    def test_z5_automorphisms_are_scalings(self):
        assert sorted(automorphisms(Z5)) == sorted(times(k, 5) for k in range(1, 5))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            automorphisms(cyclic_group(17))

    def test_inner_automorphism_of_abelian_is_identity(self):
        assert inner_automorphism(Z5, 3) == IDENT5


class TestBuildLinear:
    def test_q5(self, q5):
        assert build_linear(Z5, times(2, 5), times(3, 5), 1) == q5

    def test_z3(self, z3):
        assert build_linear(cyclic_group(3), (0, 1, 2), (0, 1, 2), 0) == z3

    def test_s3_translate(self):
        c = involutions(S3)[0]
        t = s3_translate(c)
        cells = S3.cells
        for x in range(6):
            for y in range(6):
                assert t.mul(x, y) == cells[cells[x, c], y]

    @pytest.mark.parametrize("conv", list(Convention))
    def test_conventions_against_oracle(self, conv):
        g = dihedral_group(4)
        auts = automorphisms(g)
        f, gg, e = auts[3], auts[5], 6
        rows = g.table.rows()
        expect = {
            Convention.STD: lambda x, y: rows[rows[f[x]][e]][gg[y]],
            Convention.DOT1: lambda x, y: rows[rows[f[x]][gg[y]]][e],
            Convention.DOT2: lambda x, y: rows[rows[e][f[x]]][gg[y]],
        }[conv]
        assert build_linear(g, f, gg, e, conv) == table_from_function(8, expect)

    def test_rejects_non_automorphism(self):
        with pytest.raises(InvalidFormError):
            build_linear(Z5, (0, 1, 2, 4, 3), IDENT5, 0)


class TestCheckFLinear:
    def test_q5_both(self):
        assert check_F_linear(ArithmeticForm(Z5, times(2, 5), times(3, 5), 1), "both")

    def test_s3_identity_maps(self):
        for e in range(6):
            assert check_F_linear(ArithmeticForm(S3, tuple(range(6)), tuple(range(6)), e), "both")

    def test_s3_conjugation_left_fails(self):
        f = inner_automorphism(S3, involutions(S3)[0])
        form = ArithmeticForm(S3, f, tuple(range(6)), S3.neutral)
        assert not check_F_linear(form, "left")
        assert not check_identity(form.table(), IdentityName.FL)

    @pytest.mark.parametrize("conv", list(Convention))
    def test_agrees_with_identity_scans(self, conv):
        rng = np.random.default_rng(11)
        cat = group_catalog()
        for name in ("D3", "D4", "Q8", "Z2xZ4"):
            g = cat[name]
            auts = automorphisms(g)
            for _ in range(15):
                f = auts[rng.integers(len(auts))]
                gg = auts[rng.integers(len(auts))]
                e = int(rng.integers(g.n))
                t = build_linear(g, f, gg, e, conv)
                rows = t.rows()
                form = ArithmeticForm(g, f, gg, e)
                assert check_F_linear(form, "left", conv) == oracles.holds(rows, "Fl")
                assert check_F_linear(form, "right", conv) == oracles.holds(rows, "Fr")
                assert check_F_linear(form, "both", conv) == oracles.is_F(rows)


class TestPhi:
    def test_abelian_identity(self):
        assert phi(ArithmeticForm(Z5, IDENT5, IDENT5, 3)) == IDENT5

    def test_neutral_identity(self):
        assert phi(ArithmeticForm(S3, tuple(range(6)), tuple(range(6)), S3.neutral)) == tuple(range(6))

    def test_transposition_conjugation(self):
        c = involutions(S3)[0]
        got = phi(ArithmeticForm(S3, tuple(range(6)), tuple(range(6)), c))
        cells, inv = S3.cells, S3.inverse
        assert got == tuple(int(cells[cells[inv[c], x], c]) for x in range(6))
        assert got != tuple(range(6))


class TestExtractForm:
    def test_q5(self, q5):
        form = extract_form(q5, 0, 0)
        assert form.group.table == table_from_function(5, lambda x, y: (x + y + 4) % 5)
        assert form.neutral == 1
        assert form.f == (4, 1, 3, 0, 2)  # 2x + 4
        assert form.g == (3, 1, 4, 2, 0)  # 3y + 3
        assert form.e == 1
        assert form_violation(form, q5) is None

    def test_z3(self, z3):
        form = extract_form(z3, 0, 0)
        assert form.group.table == z3
        assert (form.f, form.g, form.e) == ((0, 1, 2), (0, 1, 2), 0)

    def test_s3_translate_recovers_identity_maps(self):
        c = involutions(S3)[0]
        t = s3_translate(c)
        for a in range(6):
            for b in range(6):
                form = extract_form(t, a, b)
                assert form.f == form.g == tuple(range(6))
                assert form.table() == t
        form = form_at_neutral(t, S3.neutral)
        assert form.group == S3 and form.e == c

    def test_not_fg(self, twisted_z4):
        with pytest.raises(NotFGError):
            extract_form(twisted_z4, 0, 0)
        with pytest.raises(NotFGError):
            enumerate_forms(twisted_z4)

    def test_recomposition_against_oracle(self, q5):
        for a in range(5):
            for b in range(5):
                form = extract_form(q5, a, b)
                rows = oracles.linear_table(form.group.table.rows(), form.f, form.g, form.e)
                assert rows == q5.rows()


class TestForms:
    def test_q5_forms(self, q5):
        forms = enumerate_forms(q5)
        assert [f.neutral for f in forms] == [0, 1, 2, 3, 4]
        assert len(strong_forms(q5)) == 5

    def test_small_counts(self, z3):
        assert len(enumerate_forms(z3)) == 3
        assert len(enumerate_forms(CayleyTable([[0]]))) == 1

    def test_s3_translate_single_strong_form(self):
        for c in range(6):
            assert len(strong_forms(s3_translate(c))) == 1

    @pytest.mark.parametrize("name", ["Z4", "Z2xZ2", "D3", "D4", "Q8"])
    def test_group_strong_count(self, name):
        g = group_catalog()[name]
        expected = g.n if g.is_abelian() else len(center(g))
        assert len(strong_forms(g.table)) == expected

    def test_canonical_strong_form(self, q5):
        form = canonical_strong_form(q5)
        assert form.is_strong()
        for c in range(6):
            assert canonical_strong_form(s3_translate(c)).is_strong()

    def test_strong_neutrals_are_mq(self):
        for c in range(6):
            t = s3_translate(c)
            assert {f.neutral for f in strong_forms(t)} == set(mq(t)) == {int(S3.inverse[c])}


class TestFormHomomorphism:
    def test_identity(self, q5):
        form = extract_form(q5, 0, 0)
        assert is_form_homomorphism(tuple(range(5)), form, form)

    def test_zero_map(self):
        q5_form = ArithmeticForm(Z5, times(2, 5), times(3, 5), 1)
        trivial = ArithmeticForm(Z5, IDENT5, IDENT5, 0)
        # the zero map sends e1 = 1 to 0 = e2 and intertwines everything
        assert is_form_homomorphism((0,) * 5, q5_form, trivial)
        assert not is_form_homomorphism((0,) * 5, q5_form, ArithmeticForm(Z5, IDENT5, IDENT5, 2))

    def test_e_not_preserved(self):
        s = ArithmeticForm(Z5, IDENT5, IDENT5, 1)
        t = ArithmeticForm(Z5, IDENT5, IDENT5, 3)
        assert not is_form_homomorphism(IDENT5, s, t)

    def test_precondition(self):
        s = ArithmeticForm(Z5, IDENT5, IDENT5, 0)
        with pytest.raises(PreconditionError):
            is_form_homomorphism((1, 2, 3, 4, 0), s, s)

    def test_matches_quasigroup_homomorphism(self, q5):
        rng = np.random.default_rng(5)
        for _ in range(200):
            p, q = (int(v) for v in rng.integers(5, size=2))
            m = rng.integers(5, size=5)
            m[p] = q
            m = tuple(int(v) for v in m)
            assert is_form_homomorphism(m, form_at_neutral(q5, p), form_at_neutral(q5, q)) == \
                oracles.is_homomorphism(m, q5.rows(), q5.rows())


def test_form_violation_names_the_problem():
    bad = ArithmeticForm(S3, inner_automorphism(S3, involutions(S3)[0]), tuple(range(6)), 0)
    assert "central" in form_violation(bad)
    assert form_violation(ArithmeticForm(Z5, times(2, 5), times(3, 5), 1)) is None
    assert is_automorphism(times(2, 5), Z5)
    assert compose(times(2, 5), times(3, 5)) == times(6, 5)
