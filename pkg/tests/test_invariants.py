import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import CharacteristicUndefined, DimensionMismatch, GradingViolation, NotNilpotent
from core.models.invariants import NOT_NILPOTENT
from core.models.matrix import Partition
from core.models.superalgebra import Element, SuperAlgebra, change_basis, is_lie, x, y
from core.services.invariant_service import InvariantService, invariant_service
from core.services.verification_service import verification_service


def test_series_of_leib12(leib12):
    series = invariant_service.central_series(leib12)
    assert str(series) == "L^1 (1|2) ⊇ L^2 (0|1) ⊇ L^3 (0|0); nilindex 3"
    assert invariant_service.nilindex(leib12) == 3


def test_series_of_graded_lie_n4(graded_lie_n4):
    series = invariant_service.central_series(graded_lie_n4)
    assert series.dims == [(4, 0), (2, 0), (1, 0), (0, 0)]
    assert series.nilindex == 4
    assert invariant_service.generator_dims(graded_lie_n4) == (2, 0)


def test_non_nilpotent_series(non_nilpotent):
    series = invariant_service.central_series(non_nilpotent)
    assert not series.is_nilpotent
    assert series.nilindex is None
    assert str(series) == "L^1 (2|0) ⊇ L^2 (1|0) ⊇ L^3 (1|0); not nilpotent"
    with pytest.raises(NotNilpotent) as info:
        invariant_service.nilindex(non_nilpotent)
    assert info.value.dims == (1, 0)


def test_abelian_nilindex():
    assert invariant_service.nilindex(SuperAlgebra(2, 1)) == 2
    assert invariant_service.nilindex(SuperAlgebra(0, 0)) == 1


def test_characteristic_sequence(leib12, leib22b, graded_lie_n4):
    assert str(invariant_service.characteristic_sequence(leib12)) == "(1|2)"
    assert str(invariant_service.characteristic_sequence(leib22b)) == "(1,1|2)"
    charseq = invariant_service.characteristic_sequence(graded_lie_n4)
    assert charseq.even_part == Partition((3, 1))
    assert charseq.odd_part == Partition(())
    assert charseq.to_dict() == {"even": [3, 1], "odd": []}


def test_characteristic_sequence_is_reproducible(graded_lie_n4):
    first = invariant_service.characteristic_sequence(graded_lie_n4, trials=4, seed=11)
    second = InvariantService(trials=4, seed=11).characteristic_sequence(graded_lie_n4)
    assert first == second


def test_characteristic_sequence_needs_even_part():
    with pytest.raises(CharacteristicUndefined):
        invariant_service.characteristic_sequence(SuperAlgebra(0, 2))


def test_characteristic_candidates_avoid_square(graded_lie_n4):
    candidates = invariant_service.characteristic_candidates(graded_lie_n4, trials=3, seed=0)
    assert len(candidates) == 5
    for vector in candidates:
        assert vector[0] or vector[1]


def test_right_mult_needs_even_element(leib12):
    with pytest.raises(GradingViolation):
        invariant_service.right_mult_matrices(leib12, Element.basis(1, 2, y(1)))
    m0, m1 = invariant_service.right_mult_matrices(leib12, Element.basis(1, 2, x(1)))
    assert m0.is_zero()
    assert m1[1, 0] == 1


def test_natural_gradation_is_lie(graded_lie_n4):
    gradation = invariant_service.natural_gradation(graded_lie_n4)
    assert gradation.degrees == (1, 1, 2, 3)
    assert gradation.component_dims() == [2, 1, 1]
    assert gradation.respects_grading()
    assert is_lie(gradation.algebra)
    assert not is_lie(graded_lie_n4)


def test_natural_gradation_reorders_by_degree(square_plus_abelian):
    gradation = invariant_service.natural_gradation(square_plus_abelian)
    assert gradation.degrees == (1, 1, 1, 2)
    assert gradation.algebra.bracket(x(1), x(1)) == Element.basis(4, 0, x(4))
    assert not is_lie(gradation.algebra)


def test_natural_gradation_errors(leib12, non_nilpotent):
    with pytest.raises(DimensionMismatch):
        invariant_service.natural_gradation(leib12)
    with pytest.raises(NotNilpotent):
        invariant_service.natural_gradation(non_nilpotent)


def test_fingerprint_text(leib12):
    fp = invariant_service.fingerprint(leib12)
    assert fp.to_text() == (
        "series=(1|2),(0|1);nilindex=3;charseq=(1|2);annihilator=(0|2);lie=false;generators=(1|1)"
    )
    assert fp.to_dict()["nilindex"] == 3


def test_fingerprint_of_non_nilpotent(non_nilpotent):
    fp = invariant_service.fingerprint(non_nilpotent)
    assert fp.nilindex == NOT_NILPOTENT
    assert fp.charseq is None
    assert fp.series_dims == ((2, 0), (1, 0))
    assert "charseq=undefined" in fp.to_text()


def test_leib22_variants_share_fingerprint(leib22a, leib22b):
    assert leib22a != leib22b
    assert invariant_service.fingerprint(leib22a) == invariant_service.fingerprint(leib22b)


def test_single_generated(leib12):
    assert not invariant_service.is_single_generated(leib12)
    assert invariant_service.is_single_generated(SuperAlgebra(1, 0))


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
def test_fingerprint_is_invariant_under_basis_change(leib22a, graded_lie_n4, seed):
    rng = random.Random(seed)
    for algebra in (leib22a, graded_lie_n4):
        p_even, p_odd = verification_service.random_basis_change(rng, algebra.n, algebra.m)
        copy = change_basis(algebra, p_even, p_odd)
        assert invariant_service.fingerprint(copy).to_text() == invariant_service.fingerprint(algebra).to_text()
