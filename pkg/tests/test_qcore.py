import numpy as np
import pytest

import oracles
from fgq.errors import CongruenceError, DegenerateInputError, StructureError
from fgq.qcore import (CayleyTable, Partition, alpha_beta, compose, congruence_closure, invert, is_congruence,
                       is_homomorphism, is_permutation, is_simple, left_division, left_translation,
                       principal_congruence, quotient, right_division, right_translation, subtable,
                       table_from_function, validate_table)


def zn(n):
    return table_from_function(n, lambda x, y: (x + y) % n)


class TestConstruction:
    def test_rejects_non_square(self):
        with pytest.raises(StructureError):
            CayleyTable([[0, 1], [1, 0], [0, 1]])

    def test_rejects_out_of_range(self):
        with pytest.raises(StructureError):
            CayleyTable([[0, 2], [1, 0]])

    def test_rejects_empty(self):
        with pytest.raises(StructureError):
            CayleyTable([])

    def test_non_latin_is_constructible_but_invalid(self):
        t = CayleyTable([[0, 1, 2], [1, 2, 0], [2, 0, 0]])
        assert not validate_table(t)

    def test_equality_and_hash(self, z3):
        other = CayleyTable([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        assert z3 == other and hash(z3) == hash(other)
        assert repr(z3) == "CayleyTable(012/120/201)"

    def test_cells_are_read_only(self, z3):
        with pytest.raises(ValueError):
            z3.cells[0, 0] = 1


def test_validate_examples(z3, twisted_z4):
    assert validate_table(z3)
    assert validate_table(twisted_z4)
    assert not validate_table(CayleyTable([[0, 1, 2], [1, 2, 0], [2, 0, 0]]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_validate_matches_oracle_on_all_maps(n):
    rng = np.random.default_rng(n)
    for _ in range(300):
        rows = rng.integers(n, size=(n, n)).tolist()
        assert validate_table(CayleyTable(rows)) == oracles.is_latin(rows)


def test_alpha_beta_examples(z3, q5, twisted_z4):
    assert alpha_beta(z3) == ((0, 0, 0), (0, 0, 0))
    alpha, beta = alpha_beta(q5)
    assert alpha == tuple((3 * x + 3) % 5 for x in range(5))
    assert beta == tuple((4 * x + 2) % 5 for x in range(5))
    assert alpha_beta(twisted_z4)[0] == (0, 0, 3, 1)


def test_alpha_beta_against_oracle():
    for rows in oracles.all_latin(4):
        assert alpha_beta(CayleyTable(rows)) == tuple(map(tuple, oracles.alpha_beta(rows)))


def test_translations_and_divisions(q5):
    L = left_division(q5)
    R = right_division(q5)
    for a in range(5):
        la, ra = left_translation(q5, a), right_translation(q5, a)
        assert tuple(L[a]) == invert(la)
        assert tuple(R[a]) == invert(ra)
        for w in range(5):
            assert q5.mul(a, L[a, w]) == w
            assert q5.mul(R[a, w], a) == w


def test_permutation_helpers():
    assert is_permutation((2, 0, 1))
    assert not is_permutation((0, 0, 1))
    p = (2, 0, 1)
    assert compose(p, invert(p)) == (0, 1, 2)
    assert compose((1, 2, 0), (2, 0, 1)) == (0, 1, 2)


class TestHomomorphism:
    def test_identity(self, z3):
        assert is_homomorphism((0, 1, 2), z3, z3)

    def test_constant_to_idempotent(self, z3):
        assert is_homomorphism((0, 0, 0), z3, z3)

    def test_doubling_on_z4_agrees_with_oracle(self):
        z4 = zn(4)
        m = (0, 2, 0, 2)
        assert is_homomorphism(m, z4, z4) == oracles.is_homomorphism(m, z4.rows(), z4.rows())
        assert is_homomorphism(m, z4, z4)

    def test_non_homomorphism(self):
        z4 = zn(4)
        assert is_homomorphism((0, 3, 2, 1), z4, z4)  # negation, abelian
        assert not is_homomorphism((1, 1, 1, 1), z4, z4)

    def test_size_mismatch(self, z3):
        with pytest.raises(StructureError):
            is_homomorphism((0, 1), z3, z3)


class TestCongruences:
    def test_principal_examples(self, z3):
        assert principal_congruence(z3, 0, 0).is_discrete
        assert principal_congruence(z3, 0, 1).is_full
        assert principal_congruence(zn(4), 0, 2).blocks == [[0, 2], [1, 3]]

    def test_closure_against_oracle(self):
        rng = np.random.default_rng(7)
        tables = oracles.all_latin(4)
        for i in rng.choice(len(tables), 60, replace=False):
            rows = tables[i]
            a, b = (int(v) for v in rng.integers(4, size=2))
            p = congruence_closure(CayleyTable(rows), [(a, b)])
            assert list(p.labels) == oracles.congruence_classes(rows, [(a, b)])
            assert is_congruence(CayleyTable(rows), p)

    def test_simple_examples(self, q5):
        assert is_simple(zn(5))
        assert not is_simple(zn(4))
        assert is_simple(q5)

    def test_simple_against_oracle(self):
        for rows in oracles.all_latin(4)[::7]:
            assert is_simple(CayleyTable(rows)) == oracles.is_simple(rows)

    def test_simple_degenerate(self):
        with pytest.raises(DegenerateInputError):
            is_simple(CayleyTable([[0]]))

    def test_quotient_examples(self, q5):
        z4 = zn(4)
        assert quotient(z4, Partition.from_blocks(4, [[0, 2], [1, 3]])) == zn(2)
        assert quotient(q5, Partition.discrete(5)) == q5
        assert quotient(q5, Partition.full(5)) == CayleyTable([[0]])

    def test_quotient_rejects_non_congruence(self):
        with pytest.raises(CongruenceError) as info:
            quotient(zn(4), Partition.from_blocks(4, [[0, 1], [2], [3]]))
        assert info.value.witness is not None


class TestPartition:
    def test_canonical_labels(self):
        p = Partition.from_blocks(5, [[3, 1], [0, 4], [2]])
        assert p.labels == (0, 1, 2, 1, 0)
        assert p.representatives == (0, 1, 2)
        assert p.projection() == (0, 1, 2, 1, 0)

    def test_refines(self):
        assert Partition.discrete(3).refines(Partition.full(3))
        assert not Partition.full(3).refines(Partition.discrete(3))

    def test_rejects_non_covering(self):
        with pytest.raises(StructureError):
            Partition.from_blocks(3, [[0, 1]])


def test_subtable(z3):
    z4 = zn(4)
    assert subtable(z4, [0, 2]) == zn(2)
    assert subtable(z4, [0, 1]) is None
