import random

import pytest

from core.exceptions import DimensionMismatch, GradingViolation
from core.models.matrix import Matrix
from core.models.superalgebra import (
    Element, SuperAlgebra, change_basis, even_part, graded_jacobi_violations, is_lie, make_superalgebra,
    multiply, right_annihilator, sign, superidentity_residual, superidentity_violations, x, y,
)
from core.services.verification_service import verification_service


def test_sign():
    assert sign(0, 0) == sign(0, 1) == sign(1, 0) == 1
    assert sign(1, 1) == -1


def test_make_superalgebra_accepts_all_value_forms():
    by_terms = make_superalgebra(1, 2, {(y(1), x(1)): {y(2): 1}})
    by_vector = make_superalgebra(1, 2, {(y(1), x(1)): (0, 1)})
    by_element = make_superalgebra(1, 2, {(y(1), x(1)): Element.basis(1, 2, y(2))})
    assert by_terms == by_vector == by_element
    assert by_terms.bracket(y(1), x(1)) == Element.basis(1, 2, y(2))


def test_zero_brackets_are_dropped():
    algebra = make_superalgebra(2, 0, {(x(1), x(1)): {x(2): 0}})
    assert algebra.table == {}
    assert algebra == SuperAlgebra(2, 0)


def test_odd_product_of_odd_pair_is_rejected():
    with pytest.raises(GradingViolation) as info:
        make_superalgebra(1, 1, {(y(1), y(1)): {y(1): 1}}, lines={(y(1), y(1)): 2})
    assert info.value.line == 2
    assert info.value.pair == (y(1), y(1))


def test_index_out_of_range_is_rejected():
    with pytest.raises(GradingViolation):
        make_superalgebra(1, 0, {(x(2), x(1)): {x(1): 1}})
    with pytest.raises(GradingViolation):
        make_superalgebra(1, 0, {(x(1), x(1)): {x(3): 1}})
    with pytest.raises(GradingViolation):
        make_superalgebra(2, 0, {(x(1), x(1)): (1,)})


def test_negative_dims():
    with pytest.raises(DimensionMismatch):
        SuperAlgebra(-1, 0)


def test_samples_are_leibniz(leib12, leib22a, leib22b, graded_lie_n4):
    for algebra in (leib12, leib22a, leib22b, graded_lie_n4):
        assert superidentity_violations(algebra) == []


def test_violation_is_reported_per_triple():
    idempotent = make_superalgebra(1, 0, {(x(1), x(1)): {x(1): 1}})
    violations = superidentity_violations(idempotent)
    assert len(violations) == 1
    triple, residual = violations[0]
    assert triple == (x(1), x(1), x(1))
    assert str(residual) == "x1"


def test_odd_sign_enters_residual(odd_square):
    """(y1, y1, y1): [y1,[y1,y1]] − [[y1,y1],y1] − [[y1,y1],y1]."""
    algebra = make_superalgebra(1, 1, {(y(1), y(1)): {x(1): 1}, (x(1), y(1)): {y(1): 1}})
    residual = superidentity_residual(algebra, (y(1), y(1), y(1)))
    assert str(residual) == "-2*y1"
    assert superidentity_residual(odd_square, (y(1), y(1), y(1))).is_zero()


def test_multiply_is_bilinear(leib22b):
    a = Element.from_terms(2, 2, {y(1): 2, x(1): 1})
    b = Element.from_terms(2, 2, {x(1): 1, x(2): 3})
    product = multiply(leib22b, a, b)
    # 2[y1,x1] + 6[y1,x2] = 2y2 + 12y2
    assert product == Element.from_terms(2, 2, {y(2): 14})


def test_lie_superalgebra_is_leibniz_and_jacobi(heisenberg_plus_line, odd_square):
    assert is_lie(heisenberg_plus_line)
    assert superidentity_violations(heisenberg_plus_line) == []
    assert graded_jacobi_violations(heisenberg_plus_line) == []
    # [y1,y1] = x1 симметрична, как и положено нечётной паре
    assert is_lie(odd_square)
    assert graded_jacobi_violations(odd_square) == []


def test_non_lie(leib12, square_plus_abelian):
    assert not is_lie(leib12)
    assert not is_lie(square_plus_abelian)


def test_right_annihilator(leib12, leib22b):
    assert right_annihilator(leib12).dims == (0, 2)
    assert right_annihilator(leib22b).dims == (1, 1)
    assert right_annihilator(SuperAlgebra(2, 3)).dims == (2, 3)


def test_annihilator_is_ideal(leib12, leib22a, leib22b, graded_lie_n4):
    for algebra in (leib12, leib22a, leib22b, graded_lie_n4):
        assert verification_service.annihilator_is_ideal(algebra)


def test_change_basis_identity_is_noop(leib22b):
    assert change_basis(leib22b, Matrix.identity(2), Matrix.identity(2)) == leib22b


def test_change_basis_swaps_and_preserves_identity(leib22b):
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    swapped = change_basis(leib22b, swap, Matrix.identity(2))
    assert swapped.bracket(y(1), x(2)) == Element.basis(2, 2, y(2))
    assert swapped.bracket(y(1), y(1)) == Element.basis(2, 2, x(1))
    assert superidentity_violations(swapped) == []


def test_random_basis_changes_keep_leibniz(leib22a):
    rng = random.Random(3)
    for _ in range(5):
        p_even, p_odd = verification_service.random_basis_change(rng, 2, 2)
        copy = change_basis(leib22a, p_even, p_odd)
        assert superidentity_violations(copy) == []
        assert change_basis(copy, p_even.inverse(), p_odd.inverse()) == leib22a


def test_change_basis_checks_shapes(leib22b):
    with pytest.raises(DimensionMismatch):
        change_basis(leib22b, Matrix.identity(3), Matrix.identity(2))


def test_even_part(leib22b):
    part = even_part(leib22b)
    assert part.dims == (2, 0)
    assert part.table == {}


def test_canonical_order(leib22a):
    pairs = [pair for pair, _ in leib22a.sorted_products()]
    assert pairs == [(x(1), y(1)), (x(2), y(1)), (y(1), x(1)), (y(1), x(2)), (y(1), y(1))]
