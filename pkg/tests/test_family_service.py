from collections import Counter

import pytest

from config.family_catalog import FamilyTag
from core.exceptions import FamilyDimsError, FamilyError
from core.models.scalar import ONE, ZERO
from core.models.superalgebra import superidentity_violations
from core.services.family_service import family_service
from core.services.invariant_service import invariant_service


def _params(entry):
    return tuple(int(str(p)) for p in entry.params)


def test_canonical_list_for_n_n_minus_1():
    entries = family_service.canonical_list(3, 2)
    assert [(e.tag, _params(e)) for e in entries] == [
        (FamilyTag.L, (1,)), (FamilyTag.L, (0,)), (FamilyTag.G, (1,)), (FamilyTag.G, (0,)),
    ]
    assert all(e.algebra is not None for e in entries)


def test_canonical_list_for_n_n_flags_unrealizable():
    entries = family_service.canonical_list(3, 3)
    assert len(entries) == 7
    unrealizable = [e for e in entries if e.unrealizable]
    assert len(unrealizable) == 2
    assert all(e.tag == FamilyTag.H and e.algebra is None for e in unrealizable)
    realizable_h = {_params(e) for e in entries if e.tag == FamilyTag.H and not e.unrealizable}
    assert realizable_h == {(0, 0), (1, 0)}
    m_params = [_params(e) for e in entries if e.tag == FamilyTag.M]
    assert m_params == [(1, 1), (0, 1), (0, 0)]


def test_canonical_entries_have_maximal_nilindex():
    for n, m in ((3, 2), (3, 3), (2, 3), (2, 4)):
        for entry in family_service.canonical_list(n, m):
            if entry.algebra is None:
                continue
            assert superidentity_violations(entry.algebra) == []
            assert invariant_service.nilindex(entry.algebra) == n + m


def test_canonical_list_small_dims():
    entries = family_service.canonical_list(1, 2)
    assert len(entries) == 1
    assert entries[0].tag == FamilyTag.LEIB_1M
    leib_n1 = family_service.canonical_list(3, 1)
    assert [_params(e) for e in leib_n1] == [(0,), (1,)]


def test_canonical_list_uncovered_dims():
    with pytest.raises(FamilyDimsError):
        family_service.canonical_list(5, 0)


def test_canonical_list_needs_samples():
    with pytest.raises(FamilyError):
        family_service.canonical_list(3, 2, sample_params=())


def test_canonical_entry_serialization():
    entry = family_service.canonical_list(3, 2)[0]
    data = entry.to_dict()
    assert data["tag"] == "L"
    assert data["dims"] == [3, 2]
    assert data["params"] == ["1"]
    assert data["unrealizable"] is None
    assert entry.description.startswith("L(1)")


def test_parameter_grid_full_product():
    grid = list(family_service.parameter_grid(FamilyTag.L, 4))
    assert len(grid) == 16
    assert len(set(grid)) == 16


def test_parameter_grid_fixes_h_gamma():
    grid = list(family_service.parameter_grid(FamilyTag.H, 3))
    assert len(grid) == 4
    assert all(params[-1] == ZERO for params in grid)


def test_parameter_grid_samples_wide_families():
    first = list(family_service.parameter_grid(FamilyTag.L, 8, samples=10, seed=5))
    second = list(family_service.parameter_grid(FamilyTag.L, 8, samples=10, seed=5))
    assert len(first) == 10
    assert all(len(params) == 6 for params in first)
    assert first == second


def test_small_corpus_members_are_leibniz_of_maximal_nilindex(small_corpus):
    for member in small_corpus:
        assert superidentity_violations(member.algebra) == [], member.label
        # Leib_{1,1}(1) совпадает с однопорождённой T_{1,1}
        bonus = 1 if invariant_service.is_single_generated(member.algebra) else 0
        assert invariant_service.nilindex(member.algebra) == member.n + member.m + bonus, member.label
    for member in small_corpus:
        if member.tag in (FamilyTag.NULL_FILIFORM, FamilyTag.THM21_MIXED):
            assert invariant_service.is_single_generated(member.algebra), member.label


def test_small_corpus_covers_every_family(small_corpus):
    counts = Counter(member.tag for member in small_corpus)
    assert set(counts) == set(FamilyTag) - {FamilyTag.E_ODD}
    assert counts[FamilyTag.LEIB_N1] == 2 * 4


def test_corpus_member_label(small_corpus):
    member = next(m for m in small_corpus if m.tag == FamilyTag.LEIB_N1 and m.params == (ONE,))
    assert member.label == "LEIB_N1(1|1)[1]"
