"""Tests for the factorization, the P-chain and the verifier."""

import dataclasses
import pytest
from fractions import Fraction

from src.algebra.cfrac import convergents, expand, parity_sign
from src.algebra.exact import sgn
from src.algebra.words import evaluate, reduce_word
from src.data.parsers import format_word
from src.decomposition.decomposer import (
    alpha_gamma,
    chain,
    compute_bj,
    decompose,
    decompose_all,
    decompose_d_zero,
    det_exponent,
    final_p_matrix,
    p0_closed_form,
    p_matrix,
    sign_exponent,
)
from src.decomposition.sampling import random_unimodular
from src.decomposition.verifier import verify
from src.errors import NotUnimodularError
from src.models.continued_fraction import ContinuedFraction, Representation
from src.models.matrix import Mat2, I
from src.models.word import Letter, Word, WordTerm


EQ_FIRST_WORD = "A^-3 B A^-4 B A^3 B A^4 B^-1 A"
EQ_SECOND_WORD = "A B^-1 A^2 B^-1 A^-2 B A^-4 B A^2 B A^-3 B A^3 B^-1 A"

D_ZERO_PATTERNS = [(1, 1), (-1, -1), (1, -1), (-1, 1)]


@pytest.fixture(scope="module")
def corpus_traces(unimodular_corpus):
    """Both traces for every corpus matrix, decomposed once."""
    return [(m, decompose_all(m)) for m in unimodular_corpus]


class TestWorkedExample:
    """Test (-65 17; 42 -11) through every intermediate."""

    def test_first_word(self, worked_matrix):
        assert format_word(decompose(worked_matrix).word) == EQ_FIRST_WORD

    def test_second_word(self, worked_matrix):
        trace = decompose(worked_matrix, Representation.SECOND)
        assert format_word(trace.word) == EQ_SECOND_WORD

    def test_first_trace_fields(self, worked_matrix, worked_cf_first):
        trace = decompose(worked_matrix)
        assert trace.cf == worked_cf_first
        assert trace.j == 3
        assert trace.sign_exponent == 0
        assert trace.det_exponent == 0
        assert trace.b_j == 4
        assert trace.table[2] == (-3, 2)

    def test_second_trace_fields(self, worked_matrix, worked_cf_second):
        trace = decompose(worked_matrix, Representation.SECOND)
        assert trace.cf == worked_cf_second
        assert trace.sign_exponent == 2
        assert trace.b_j == 3
        assert trace.table[3] == (-14, 9)

    def test_decompose_all(self, worked_matrix):
        first, second = decompose_all(worked_matrix)
        assert first.representation == Representation.FIRST
        assert second.representation == Representation.SECOND
        assert evaluate(first.word) == evaluate(second.word) == worked_matrix


class TestExponents:
    """Test the sign and determinant exponents."""

    @pytest.mark.parametrize("j,d,expected", [
        (3, -11, 0), (4, -11, 2), (1, 1, 0), (2, 1, 2), (2, -5, 0), (1, -3, 2),
    ])
    def test_sign_exponent(self, j, d, expected):
        assert sign_exponent(j, d) == expected

    def test_det_exponent(self):
        assert det_exponent(Mat2(-65, 17, 42, -11)) == 0
        assert det_exponent(Mat2(1, 0, 0, -1)) == 1

    def test_bj_first(self, worked_matrix, worked_cf_first):
        assert compute_bj(worked_matrix, convergents(worked_cf_first)) == 4

    def test_bj_second(self, worked_matrix, worked_cf_second):
        assert compute_bj(worked_matrix, convergents(worked_cf_second)) == 3

    def test_bj_upper_triangular(self):
        """(1 n; 0 1) with [n] gives b_1 = 0."""
        for n in (-7, 0, 1, 12):
            assert compute_bj(Mat2(1, n, 0, 1), convergents(ContinuedFraction((n,)))) == 0


class TestAlphaGamma:
    """Test the closed-form chain coefficients."""

    def test_first_step(self, worked_cf_first):
        assert alpha_gamma(1, convergents(worked_cf_first), 17, -11) == (-16, 5)

    def test_gamma_vanishes_at_the_end(self, worked_cf_first):
        alpha, gamma = alpha_gamma(3, convergents(worked_cf_first), 17, -11)
        assert gamma == 0
        assert alpha == 1

    @pytest.mark.parametrize("k", [0, 4, -1])
    def test_out_of_range(self, worked_cf_first, k):
        with pytest.raises(IndexError):
            alpha_gamma(k, convergents(worked_cf_first), 17, -11)

    def test_matches_chain(self, worked_matrix, worked_cf_first):
        table = convergents(worked_cf_first)
        matrices = chain(worked_matrix, worked_cf_first)
        for k in range(1, table.j + 1):
            assert p_matrix(k, table, worked_matrix) == matrices[k]


class TestChain:
    """Test the P_0 .. P_j chain."""

    def test_p0(self, worked_matrix, worked_cf_first):
        assert chain(worked_matrix, worked_cf_first)[0] == Mat2(28, 135, -11, -53)
        assert p0_closed_form(worked_matrix) == Mat2(28, 135, -11, -53)

    def test_final(self, worked_matrix, worked_cf_first):
        matrices = chain(worked_matrix, worked_cf_first)
        assert len(matrices) == 4
        assert matrices[-1] == Mat2(1, 4, 0, 1)
        assert final_p_matrix(worked_matrix, convergents(worked_cf_first)) == Mat2(1, 4, 0, 1)

    def test_identity(self):
        matrices = chain(I, ContinuedFraction((0,)))
        assert matrices == [Mat2(-1, -2, 1, 1), I]

    def test_every_link_keeps_the_determinant(self, worked_matrix, worked_cf_second):
        assert all(p.det == 1 for p in chain(worked_matrix, worked_cf_second))

    def test_rejects_d_zero(self):
        with pytest.raises(ValueError):
            chain(Mat2(0, 1, -1, 0), ContinuedFraction((0,)))

    def test_rejects_wrong_expansion(self, worked_matrix):
        with pytest.raises(ValueError):
            chain(worked_matrix, ContinuedFraction((1, 2)))

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodularError):
            chain(Mat2(2, 0, 0, 2), ContinuedFraction((0,)))


class TestSpecialMatrices:
    """Test identity, powers of A and the d = 0 words."""

    def test_identity_is_empty_word(self):
        trace = decompose(I)
        assert trace.word == Word()
        assert format_word(trace.word) == "I"
        assert verify(trace).passed

    @pytest.mark.parametrize("n", range(-20, 21))
    def test_powers_of_a(self, n):
        trace = decompose(Mat2(1, n, 0, 1))
        expected = Word((WordTerm(Letter.A, n),)) if n else Word()
        assert trace.word == expected

    @pytest.mark.parametrize("a,b,c,expected", [
        (0, 1, -1, "A B^-1 A"),
        (3, 1, 1, "C B^-1 A B^2"),
        (0, -1, 1, "B A^-1 B"),
        (1, 1, 1, "C B^-1 A"),
    ])
    def test_d_zero_words(self, a, b, c, expected):
        assert format_word(decompose(Mat2(a, b, c, 0)).word) == expected

    @pytest.mark.parametrize("b,c", D_ZERO_PATTERNS)
    def test_d_zero_sweep(self, b, c):
        for a in range(-10, 11):
            m = Mat2(a, b, c, 0)
            for rep in Representation:
                trace = decompose(m, rep)
                assert trace.is_d_zero
                assert evaluate(trace.word) == m
                assert trace.word.is_reduced
                assert trace.word.contains(Letter.C) == (m.det == -1)
                assert verify(trace).passed

    def test_d_zero_rejects_nonzero_d(self, worked_matrix):
        with pytest.raises(ValueError):
            decompose_d_zero(worked_matrix)

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodularError, match="determinant is 4"):
            decompose(Mat2(2, 0, 0, 2))


class TestVerify:
    """Test the verification report."""

    def test_worked_example_passes(self, worked_matrix):
        report = verify(decompose(worked_matrix))
        assert report.passed
        assert report["evaluation"].passed
        assert report["final_closed_form"].passed

    def test_tampered_exponent(self, worked_matrix):
        trace = decompose(worked_matrix)
        terms = list(trace.word.terms)
        terms[0] = WordTerm(terms[0].letter, terms[0].exponent + 1)
        report = verify(dataclasses.replace(trace, word=Word(tuple(terms))))
        assert not report.passed
        assert not report["evaluation"].passed

    def test_tampered_bj(self, worked_matrix):
        trace = decompose(worked_matrix)
        report = verify(dataclasses.replace(trace, b_j=trace.b_j + 1))
        assert not report["exponents"].passed
        assert report["evaluation"].passed

    def test_tampered_d_zero_exponents(self):
        trace = decompose(Mat2(0, 1, -1, 0))
        assert verify(trace)["exponents"].passed
        tampered = dataclasses.replace(trace, det_exponent=1, sign_exponent=2, b_j=7)
        report = verify(tampered)
        assert not report.passed
        assert not report["exponents"].passed
        assert report["evaluation"].passed

    def test_d_zero_word_must_be_the_closed_form(self):
        """A different word for the same matrix is caught."""
        trace = decompose(Mat2(0, 1, -1, 0))
        quartic = Word.of(*([('A', 1), ('B', -1), ('A', 1)] * 4))
        other = reduce_word(trace.word + quartic)
        report = verify(dataclasses.replace(trace, word=other))
        assert report["evaluation"].passed
        assert not report["closed_form_word"].passed

    def test_tampered_chain(self, worked_matrix):
        trace = decompose(worked_matrix)
        report = verify(dataclasses.replace(trace, chain=trace.chain[:-1]))
        assert not report["recurrence"].passed

    def test_wrong_cf_is_reported_not_raised(self, worked_matrix):
        trace = decompose(worked_matrix)
        report = verify(dataclasses.replace(trace, cf=ContinuedFraction((1, 2))))
        assert not report.passed
        assert [c.name for c in report.failures]

    def test_report_to_dict(self, worked_matrix):
        data = verify(decompose(worked_matrix)).to_dict()
        assert data['passed'] is True
        assert {c['name'] for c in data['checks']} >= {"evaluation", "reduced", "c_free"}


class TestSampling:
    """Test the seeded matrix generator."""

    def test_zero_length_is_identity(self):
        assert random_unimodular(123, 0) == I

    def test_deterministic(self):
        assert random_unimodular(7, 25, allow_c=True) == random_unimodular(7, 25, allow_c=True)

    def test_sl2_has_det_one(self):
        for seed in range(200):
            assert random_unimodular(seed, 30).det == 1

    def test_gl2_is_unimodular(self):
        dets = {random_unimodular(seed, 30, allow_c=True).det for seed in range(200)}
        assert dets == {1, -1}

    def test_negative_length(self):
        with pytest.raises(ValueError):
            random_unimodular(0, -1)


class TestCorpus:
    """Every corpus matrix, both representations."""

    def test_words_evaluate_back(self, corpus_traces):
        for m, traces in corpus_traces:
            for trace in traces:
                assert evaluate(trace.word) == m
                assert trace.word.is_reduced

    def test_c_only_when_det_is_minus_one(self, corpus_traces):
        for m, traces in corpus_traces:
            for trace in traces:
                if m.det == 1:
                    assert not trace.word.contains(Letter.C)

    def test_verifier_passes(self, corpus_traces):
        for m, traces in corpus_traces:
            for trace in traces:
                report = verify(trace)
                assert report.passed, (m, report.failures)

    def test_chain_invariants(self, corpus_traces):
        for m, traces in corpus_traces:
            if m.d == 0:
                continue
            for trace in traces:
                table = trace.table
                assert len(trace.chain) == trace.j + 1
                assert trace.chain[0] == p0_closed_form(m)
                for k in range(1, trace.j + 1):
                    assert trace.chain[k] == p_matrix(k, table, m)
                    assert trace.chain[k].det == m.det
                assert trace.chain[-1] == final_p_matrix(m, table)
                assert alpha_gamma(trace.j, table, m.b, m.d)[1] == 0

    def test_endpoint(self, corpus_traces):
        for m, traces in corpus_traces:
            if m.d == 0:
                continue
            for trace in traces:
                p_j, q_j = trace.table.final
                assert q_j == abs(m.d)
                assert p_j == sgn(m.d) * m.b

    def test_final_matrix_shape(self, corpus_traces):
        """P_j is +-A^b_j for det 1 and +-C A^(2 + b_j) for det -1."""
        for m, traces in corpus_traces:
            if m.d == 0:
                continue
            for trace in traces:
                factor = parity_sign(trace.j) * sgn(m.d)
                shape = Mat2(1, trace.b_j, 0, 1) if m.det == 1 else Mat2(1, 2 + trace.b_j, 0, -1)
                assert trace.chain[-1] == shape.scale(factor)

    def test_first_representation_is_the_expansion(self, corpus_traces):
        for m, (first, _) in corpus_traces:
            if m.d != 0:
                assert first.cf == expand(Fraction(m.b, m.d))
