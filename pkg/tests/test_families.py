import pytest

from config.family_catalog import FamilyTag, e_first_beta, f_first_beta, family_catalog
from core.exceptions import FamilyArityError, FamilyDimsError, TranscriptionError
from core.families import build_family, get_family
from core.families.base_family import BracketTable
from core.families.theorem_families import null_filiform, thm21_mixed
from core.models.superalgebra import superidentity_violations, x, y
from core.services.invariant_service import invariant_service
from utils.lsa_format import parse_scalar, serialize_lsa

INSTANCES = [
    ("LEIB_1M", 1, 3, []),
    ("LEIB_N1", 3, 1, [0]),
    ("LEIB_N1", 3, 1, [1]),
    ("LEIB_22_A", 2, 2, []),
    ("LEIB_22_B", 2, 2, []),
    ("LEIB_2M_A", 2, 3, []),
    ("LEIB_2M_B", 2, 1, []),
    ("LEIB_2M_B", 2, 3, []),
    ("L", 3, 2, [1]),
    ("L", 4, 3, [0, 0]),
    ("L", 4, 3, [1, -1]),
    ("G", 3, 2, [1]),
    ("G", 4, 3, [1, 1]),
    ("M", 3, 3, [1, 1]),
    ("M", 4, 4, [1, "1/2", -1]),
    ("H", 3, 3, [1, 0]),
    ("H", 4, 4, [1, -1, 0]),
    ("E_EVEN", 2, 3, [1, 1]),
    ("E_ODD", 3, 4, [1, -1, 1]),
    ("E_EVEN", 4, 5, [0, 1, 1]),
    ("F", 2, 4, [1]),
    ("F", 3, 5, [0]),
    ("F", 4, 6, [1, -1]),
]


def _params(values):
    return [parse_scalar(v) if isinstance(v, str) else v for v in values]


@pytest.mark.parametrize("tag, n, m, params", INSTANCES)
def test_family_instances_are_leibniz_with_nilindex_n_plus_m(tag, n, m, params):
    algebra = build_family(tag, n, m, _params(params))
    assert algebra.dims == (n, m)
    assert superidentity_violations(algebra) == []
    assert invariant_service.nilindex(algebra) == n + m


@pytest.mark.parametrize("tag, n, m, params", [i for i in INSTANCES if i[0] in ("L", "G", "M", "H")])
def test_even_chain_characteristic_sequence(tag, n, m, params):
    algebra = build_family(tag, n, m, _params(params))
    assert str(invariant_service.characteristic_sequence(algebra)) == f"({n - 1},1|{m})"


@pytest.mark.parametrize("tag, n, m, params", [i for i in INSTANCES if i[0] in ("E_ODD", "E_EVEN", "F")])
def test_odd_chain_characteristic_sequence(tag, n, m, params):
    algebra = build_family(tag, n, m, _params(params))
    assert str(invariant_service.characteristic_sequence(algebra)) == f"({n}|{m - 1},1)"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_null_filiform_has_maximal_nilindex(n):
    algebra = null_filiform(n)
    assert superidentity_violations(algebra) == []
    assert invariant_service.nilindex(algebra) == n + 1
    assert invariant_service.is_single_generated(algebra)


@pytest.mark.parametrize("n, m, nilindex", [(0, 1, 2), (1, 1, 3), (1, 2, 4), (2, 2, 5), (2, 3, 6), (3, 3, 7)])
def test_thm21_mixed_has_maximal_nilindex(n, m, nilindex):
    algebra = thm21_mixed(n, m)
    assert superidentity_violations(algebra) == []
    assert invariant_service.nilindex(algebra) == nilindex
    assert invariant_service.generator_dims(algebra) == (0, 1)


def test_thm21_mixed_needs_balanced_dims():
    with pytest.raises(FamilyDimsError):
        thm21_mixed(3, 1)


def test_arity_is_checked():
    with pytest.raises(FamilyArityError):
        build_family("L", 4, 3, [0])
    with pytest.raises(FamilyArityError):
        build_family("LEIB_22_A", 2, 2, [1])


def test_dims_are_checked():
    with pytest.raises(FamilyDimsError):
        build_family("L", 4, 4, [0, 0])
    with pytest.raises(FamilyDimsError):
        build_family("E_ODD", 4, 5, [0, 0, 0])
    with pytest.raises(FamilyDimsError):
        build_family("LEIB_2M_A", 2, 1, [])


def test_m_accepts_only_zero_gamma4():
    build_family("M", 3, 3, [1, 1, 0])
    with pytest.raises(TranscriptionError):
        build_family("M", 3, 3, [1, 1, 1])


def test_h_rejects_nonzero_gamma():
    with pytest.raises(TranscriptionError):
        build_family("H", 3, 3, [0, 1])


def test_bracket_table_rejects_bad_transcription():
    table = BracketTable("test", 2, 1)
    table.set(x(1), x(1), [(1, x(2))])
    with pytest.raises(TranscriptionError):
        table.set(x(1), x(1), [(1, x(2))])
    with pytest.raises(TranscriptionError):
        table.set(x(1), y(2), [(1, y(1))])
    with pytest.raises(TranscriptionError):
        table.set(y(1), y(1), [(1, x(3))])


def test_get_family_by_name():
    assert get_family("l").tag == FamilyTag.L
    assert get_family(FamilyTag.E_ODD).name == "E_ODD"


def test_family_l_serialization_contains_odd_square():
    text = serialize_lsa(build_family("L", 4, 3, [0, 0]))
    assert "[y1, y1] = x1" in text.splitlines()


def test_catalog_lookup():
    assert family_catalog.get("e_odd").tag == FamilyTag.E_ODD
    assert family_catalog.get(FamilyTag.L).arity(5) == 3
    tags = {spec.tag for spec in family_catalog.families_for_dims(2, 2)}
    assert tags == {FamilyTag.THM21_MIXED, FamilyTag.LEIB_22_A, FamilyTag.LEIB_22_B}
    assert len(family_catalog.get_summary()) == len(FamilyTag)


def test_first_beta_indices():
    assert e_first_beta(3) == 3
    assert e_first_beta(4) == 4
    assert f_first_beta(2) == 3
    assert f_first_beta(4) == 4


def test_dims_rule_text():
    assert family_catalog.get(FamilyTag.F).dims_rule() == "n ≥ 2, m = n+2"
