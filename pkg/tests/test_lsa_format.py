import pytest

from core.exceptions import GradingViolation, LsaDuplicateBracket, LsaSyntaxError, LsaUnknownBasis
from core.models.superalgebra import Element, SuperAlgebra, x, y
from utils.lsa_format import parse_lsa, parse_lsa_document, serialize_lsa

LEIB22_WITH_HALF = "dims 2 2\n[x1, y1] = 1/2 y2\n[x2, y1] = y2\n[y1, x1] = y2\n[y1, x2] = 2 y2\n[y1, y1] = x2\n"


def test_parses_bracket_table():
    algebra = parse_lsa(LEIB22_WITH_HALF)
    assert algebra.dims == (2, 2)
    assert algebra.bracket(y(1), x(2)) == Element.from_terms(2, 2, {y(2): 2})
    assert str(algebra.bracket(x(1), y(1))) == "1/2*y2"


def test_accepts_spacing_and_star_variants(leib22a):
    text = "dims 2 2\n[x1,y1]=1/2*y2\n[x2 , y1] = y2\n  [y1, x1] = +y2\n[y1, x2] = 2*y2\n[y1, y1] = x2   # квадрат\n"
    assert parse_lsa(text) == leib22a


def test_cyclotomic_coefficients():
    algebra = parse_lsa("dims 1 1\n[y1, x1] = (1 + z(4)^1) y1 - z(3)^2*y1\n")
    value = algebra.bracket(y(1), x(1))
    assert not value.is_zero()
    assert parse_lsa(serialize_lsa(algebra)) == algebra


def test_zero_right_hand_side():
    assert parse_lsa("dims 1 0\n[x1, x1] = 0\n") == SuperAlgebra(1, 0)


def test_comments_are_collected():
    document = parse_lsa_document("# первая\ndims 1 2\n\n[y1, x1] = y2 # цепочка\n")
    assert document.comments == ["первая", "цепочка"]
    assert document.lines == {(y(1), x(1)): 4}


def test_syntax_error_has_position():
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa("dims 1 0\n[x1 x1] = x1\n")
    assert info.value.line == 2
    assert info.value.column == 5


@pytest.mark.parametrize("line, column", [
    ("[x1, x1 = x1", 9),
    ("[x1, x1] x1", 10),
    ("[z1, x1] = x1", 2),
    ("[x1, x1] = foo", 12),
    ("  [x1,x1]=x1 ]", 14),
])
def test_syntax_error_column_points_at_failure(line, column):
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa(f"dims 1 0\n{line}\n")
    assert (info.value.line, info.value.column) == (2, column)


def test_header_syntax_error_column():
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa("dims 2\n")
    assert (info.value.line, info.value.column) == (1, 7)


def test_trailing_garbage_is_rejected():
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa("dims 2 0\n[x1, x1] = x2 foo\n")
    assert (info.value.line, info.value.column) == (2, 15)


def test_missing_header():
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa("# пусто\n")
    assert (info.value.line, info.value.column) == (1, 1)


def test_header_rules():
    with pytest.raises(LsaSyntaxError):
        parse_lsa("dims 1 0\ndims 1 0\n")
    with pytest.raises(LsaSyntaxError) as info:
        parse_lsa("[x1, x1] = x1\ndims 1 0\n")
    assert info.value.line == 1


def test_unknown_basis():
    with pytest.raises(LsaUnknownBasis):
        parse_lsa("dims 1 1\n[x1, y1] = x3\n")
    with pytest.raises(LsaUnknownBasis):
        parse_lsa("dims 1 1\n[y2, x1] = y1\n")


def test_duplicate_bracket():
    with pytest.raises(LsaDuplicateBracket):
        parse_lsa("dims 2 0\n[x1, x1] = x2\n[x1,x1] = 2 x2\n")


def test_grading_violation_carries_line():
    with pytest.raises(GradingViolation) as info:
        parse_lsa("dims 1 1\n\n[y1, y1] = y1\n")
    assert info.value.line == 3


def test_serialize_canonical_form(leib22b):
    assert serialize_lsa(SuperAlgebra(1, 1)) == "dims 1 1\n"
    assert serialize_lsa(leib22b) == (
        "dims 2 2\n[x2, y1] = y2\n[y1, x1] = y2\n[y1, x2] = 2*y2\n[y1, y1] = x2\n"
    )


def test_corpus_round_trip(small_corpus):
    for member in small_corpus:
        assert parse_lsa(serialize_lsa(member.algebra)) == member.algebra, member.label
