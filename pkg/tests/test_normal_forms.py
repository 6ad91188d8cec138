import pytest

from core.exceptions import FamilyError, ShapeError
from core.families.normal_forms import leading_position, op_v, op_w, s_power
from core.models.scalar import ONE, ZERO, root_of_unity


def test_s_power():
    assert s_power(0, 5, 3) == ONE
    assert s_power(1, 4, 1) == root_of_unity(4, 1)
    assert s_power(1, 2, 3) == -1


@pytest.mark.parametrize("kind", [0, 1, 2])
def test_op_v_places_unit_and_keeps_tail(kind):
    assert op_v(kind, 1, 3, (5, 6, 7)) == (1, 6, 7)
    assert op_v(kind, 2, 3, (5, 6, 7)) == (0, 1, 7)
    assert op_v(kind, 3, 3, (5, 6, 7)) == (0, 0, 1)


def test_op_v_last_position_is_zero_vector():
    assert op_v(1, 4, 3, (5, 6, 7)) == (ZERO, ZERO, ZERO)
    assert op_v(0, 1, 0, ()) == ()


def test_op_v_zero_sign():
    assert op_v(0, 1, 2, (4, 5), delta=-1) == (1, -5)


def test_op_v_root_index():
    # S_{1,2}^3 = −1
    assert op_v(1, 2, 3, (0, 0, 3), m=1) == (0, 1, -3)


@pytest.mark.parametrize("args, error", [
    ((3, 1, 2, (1, 2)), FamilyError),
    ((1, 1, 2, (1,)), ShapeError),
    ((1, 0, 2, (1, 2)), FamilyError),
    ((1, 4, 2, (1, 2)), FamilyError),
])
def test_op_v_errors(args, error):
    with pytest.raises(error):
        op_v(*args)


def test_op_v_negative_root_index():
    with pytest.raises(FamilyError):
        op_v(1, 1, 2, (1, 2), m=-1)


@pytest.mark.parametrize("s, expected", [
    (1, (1, 1, 3, 4)),
    (2, (1, 0, 1, 4)),
    (3, (1, 0, 0, 1)),
    (4, (1, 0, 0, 0)),
])
def test_op_w_from_first_position(s, expected):
    assert op_w(s, 3, (1, 2, 3, 4)) == expected


@pytest.mark.parametrize("s, expected", [
    (1, (0, 1, 1, 3)),
    (2, (0, 1, 0, 1)),
    (3, (0, 1, 0, 0)),
])
def test_op_w_from_second_position(s, expected):
    assert op_w(s, 3, (0, 1, 2, 3)) == expected


@pytest.mark.parametrize("s", [0, 5])
def test_op_w_rejects_shift(s):
    with pytest.raises(FamilyError):
        op_w(s, 3, (1, 2, 3, 4))


@pytest.mark.parametrize("vector", [
    (1, 2, 3),
    (2, 0, 0, 0),
    (0, 0, 0, 0),
    (0, 0, 0, 1),
])
def test_op_w_rejects_shape(vector):
    with pytest.raises(ShapeError):
        op_w(1, 3, vector)


def test_leading_position():
    assert leading_position((ZERO, ZERO, ONE)) == 3
    assert leading_position((ZERO,)) == 0
