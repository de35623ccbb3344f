import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisaut import aut, gl2
from heisaut.aut import Automorphism, InnerVector, act, compose, inner, project
from heisaut.cocycles import (
    ZERO_COCYCLE,
    Cocycle,
    RelatorViolation,
    SectionOnGenerators,
    canonical_section,
    coboundary,
    cocycle_lattice,
    extend,
    format_cocycle,
    format_section,
    in_cocycle_lattice,
    parse_cocycle,
    parse_section,
    section_difference,
    solve_coboundary,
    twist,
    validate_cocycle,
)
from heisaut.gl2 import Letter
from heisaut.zlattice import in_lattice

coords = st.integers(min_value=-10**9, max_value=10**9)
vectors = st.builds(InnerVector, coords, coords)
cocycles = st.builds(coboundary, vectors)
letter_pairs = st.tuples(st.sampled_from(tuple(Letter)),
                         st.integers(min_value=-9, max_value=9))
raw_words = st.lists(letter_pairs, max_size=12)
words = st.builds(gl2.GeneratorWord, st.builds(tuple, raw_words))
matrices = st.builds(lambda raw: gl2.eval_letters(raw), raw_words)


def brute_extend(phi: Cocycle, raw) -> InnerVector:
    # oracle: expand every power into single letters and fold the
    # cocycle identity one letter at a time
    total = InnerVector(0, 0)
    acc = gl2.IDENTITY
    for sym, exp in raw:
        base = gl2.eval_letters(((sym, 1),))
        step = 1 if exp >= 0 else -1
        for _ in range(abs(exp)):
            letter = base if step > 0 else gl2.mat_inverse(base)
            value = phi.value(sym) if step > 0 else \
                InnerVector(0, 0) - act(gl2.mat_inverse(base), phi.value(sym))
            total = total + act(acc, value)
            acc = gl2.mat_multiply(acc, letter)
    return total


class TestValidation:
    def test_zero_and_coboundaries_pass(self):
        zero = InnerVector(0, 0)
        assert validate_cocycle(zero, zero, zero) == ZERO_COCYCLE
        phi = coboundary(InnerVector(7, -3))
        assert validate_cocycle(phi.v_rho, phi.v_tau, phi.v_kappa) == phi

    def test_braid_relator_rejects_bad_values(self):
        with pytest.raises(RelatorViolation) as info:
            Cocycle(InnerVector(0, 1), InnerVector(0, 0), InnerVector(0, 0))
        assert info.value.relator == "rho tau rho = tau rho tau"
        assert "(1,1)" in str(info.value)

    def test_kappa_conjugation_relator(self):
        # a bad kappa value passes both braid checks but trips the
        # first conjugation relator
        with pytest.raises(RelatorViolation) as info:
            Cocycle(InnerVector(0, 0), InnerVector(0, 0), InnerVector(1, 0))
        assert info.value.relator == "kappa tau kappa^-1 = tau^-1"

    @given(cocycles, cocycles)
    def test_closed_under_addition(self, phi1, phi2):
        # construction re-checks the relators, so arithmetic staying
        # inside the valid set is exactly "these lines do not raise"
        total = phi1 + phi2
        assert total.v_rho == phi1.v_rho + phi2.v_rho
        assert total - phi2 == phi1
        assert phi1 - phi2 == phi1 + (-phi2)
        assert -(-phi1) == phi1
        assert phi1 + ZERO_COCYCLE == phi1

    def test_value_lookup(self):
        phi = coboundary(InnerVector(2, 5))
        assert phi.value(Letter.RHO) == phi.v_rho
        assert phi.value(Letter.TAU) == phi.v_tau
        assert phi.value(Letter.KAPPA) == phi.v_kappa


class TestCoboundary:
    def test_fixed_values(self):
        assert coboundary(InnerVector(0, 1)).v_rho == InnerVector(1, 0)
        assert coboundary(InnerVector(1, 0)).v_tau == InnerVector(0, -1)
        assert coboundary(InnerVector(0, 0)) == ZERO_COCYCLE

    @given(vectors, vectors)
    def test_additive(self, a1, a2):
        assert coboundary(a1 + a2) == coboundary(a1) + coboundary(a2)

    @given(vectors)
    def test_solve_roundtrip(self, a):
        assert solve_coboundary(coboundary(a)) == a

    def test_solve_fixed(self):
        phi = coboundary(InnerVector(3, -2))
        assert solve_coboundary(phi) == InnerVector(3, -2)

    @given(vectors, matrices)
    @settings(max_examples=60)
    def test_matches_group_formula(self, a, m):
        # coboundary of a evaluated on any word w is w.a - a
        phi = coboundary(a)
        w = gl2.decompose(m)
        assert extend(phi, w) == act(m, a) - a


class TestExtend:
    def test_empty_word(self):
        assert extend(coboundary(InnerVector(5, 9)),
                      gl2.EMPTY_WORD) == InnerVector(0, 0)

    def test_generator_values(self):
        phi = coboundary(InnerVector(1, 2))
        for sym, text in ((Letter.RHO, "A"), (Letter.TAU, "B"),
                          (Letter.KAPPA, "D")):
            assert extend(phi, gl2.parse_word(text)) == phi.value(sym)

    @given(cocycles, words, words)
    @settings(max_examples=60)
    def test_cocycle_identity_on_concatenation(self, phi, w1, w2):
        lhs = extend(phi, w1 * w2)
        rhs = extend(phi, w1) + act(gl2.eval_word(w1), extend(phi, w2))
        assert lhs == rhs

    @given(cocycles, st.lists(letter_pairs, max_size=8))
    def test_matches_single_letter_oracle(self, phi, raw):
        assert extend(phi, gl2.GeneratorWord(tuple(raw))) == \
            brute_extend(phi, raw)

    @given(cocycles, matrices)
    @settings(max_examples=60)
    def test_word_independent(self, phi, m):
        left = gl2.decompose(m, strategy="left")
        right = gl2.decompose(m, strategy="right")
        assert extend(phi, left) == extend(phi, right)


class TestLattice:
    def test_report(self):
        report = cocycle_lattice()
        assert report.rank == 2
        assert report.equals_coboundary_lattice
        assert len(report.basis) == 2
        assert len(report.coboundary_basis) == 2

    def test_membership(self):
        report = cocycle_lattice()
        assert in_cocycle_lattice(coboundary(InnerVector(17, -40)), report)
        # flattened value assignments that violate the relator system
        assert not in_lattice((0, 1, 0, 0, 0, 0), report.basis)
        assert not in_lattice((0, 0, 0, 1, 1, 0), report.basis)

    @given(cocycles)
    def test_every_valid_cocycle_in_lattice(self, phi):
        assert in_cocycle_lattice(phi, cocycle_lattice())


class TestSections:
    def test_canonical_matches_section_map(self):
        alpha = canonical_section()
        assert alpha.value(Letter.RHO) == aut.section(gl2.A)
        assert alpha.value(Letter.KAPPA) == aut.section(gl2.D)

    @given(matrices)
    def test_at_agrees_with_section(self, m):
        alpha = canonical_section()
        assert alpha.at(m) == aut.section(m)
        assert alpha.at(m, strategy="right") == aut.section(m)

    def test_rejects_wrong_projection(self):
        good = canonical_section()
        with pytest.raises(ValueError):
            SectionOnGenerators(good.alpha_tau, good.alpha_rho,
                                good.alpha_kappa)

    def test_accepts_twisted_generator_values(self):
        # shifting alpha_rho by the inner automorphism of a valid
        # cocycle value keeps every relator intact
        good = canonical_section()
        shifted = Automorphism(gl2.A, 0, 1)
        alpha = SectionOnGenerators(shifted, good.alpha_tau,
                                    good.alpha_kappa)
        assert alpha == twist(good, coboundary(InnerVector(0, 1)))

    def test_rejects_broken_relators(self):
        good = canonical_section()
        bad_rho = Automorphism(gl2.A, -1, 0)
        with pytest.raises(RelatorViolation):
            SectionOnGenerators(bad_rho, good.alpha_tau, good.alpha_kappa)


class TestTwist:
    @given(cocycles)
    def test_difference_recovers_cocycle(self, phi):
        alpha0 = canonical_section()
        assert section_difference(twist(alpha0, phi), alpha0) == phi

    def test_self_difference_is_zero(self):
        alpha0 = canonical_section()
        assert section_difference(alpha0, alpha0) == ZERO_COCYCLE

    @given(cocycles, matrices)
    @settings(max_examples=60)
    def test_twisted_section_still_splits(self, phi, m):
        twisted = twist(canonical_section(), phi)
        assert project(twisted.at(m)) == m

    @given(cocycles, matrices)
    @settings(max_examples=40)
    def test_twisted_section_formula(self, phi, m):
        # the twisted section differs from the canonical one by the
        # inner automorphism attached to the extended cocycle value
        twisted = twist(canonical_section(), phi)
        w = gl2.decompose(m)
        assert twisted.at(m) == compose(inner(extend(phi, w)),
                                        aut.section(m))


class TestSyntax:
    def test_fixed(self):
        text = "{rho=(0,0), tau=(0,0), kappa=(0,0)}"
        assert parse_cocycle(text) == ZERO_COCYCLE
        assert format_cocycle(ZERO_COCYCLE) == text

    @given(cocycles)
    def test_cocycle_roundtrip(self, phi):
        assert parse_cocycle(format_cocycle(phi)) == phi

    def test_section_roundtrip(self):
        for alpha in (canonical_section(),
                      twist(canonical_section(),
                            coboundary(InnerVector(2, -3)))):
            assert parse_section(format_section(alpha)) == alpha

    @pytest.mark.parametrize("bad", ["", "{rho=(0,0)}",
                                     "{rho=(0,0), tau=(0,0), kappa=(x,0)}"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_cocycle(bad)

    def test_parse_validates(self):
        with pytest.raises(RelatorViolation):
            parse_cocycle("{rho=(0,1), tau=(0,0), kappa=(0,0)}")
