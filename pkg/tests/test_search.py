import pytest

from core.exceptions import SearchBudgetExceeded, SearchSpecError
from core.models.superalgebra import superidentity_violations
from core.services.search_service import (
    PrunedSearch, SearchService, SearchSpec, format_cursor, parse_cursor,
)
from core.services.verification_service import verification_service
from utils.lsa_format import serialize_lsa

search_service = SearchService()


def _tables(algebras):
    return sorted(serialize_lsa(a) for a in algebras)


def test_spec_validation():
    with pytest.raises(SearchSpecError):
        SearchSpec.create(1, 0, [1, -1])
    with pytest.raises(SearchSpecError):
        SearchSpec.create(1, 0, [0, 1, 1])
    with pytest.raises(SearchSpecError):
        SearchSpec.create(1, 0, [0, 1], jobs=0)
    with pytest.raises(SearchSpecError):
        SearchSpec.create(1, 0, [0, 1], max_prefixes=0)
    with pytest.raises(SearchSpecError):
        SearchSpec.create(-1, 0, [0])


def test_cursor_text():
    assert parse_cursor("0.1.2") == (0, 1, 2)
    assert parse_cursor("") == ()
    assert format_cursor((1, 1)) == "1.1"
    with pytest.raises(SearchSpecError):
        parse_cursor("0.a")


def test_variables_follow_block_order():
    search = PrunedSearch(SearchSpec.create(1, 1, [0, 1, -1]))
    assert [pair for pair, _ in search.variables] == [
        ((0, 1), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (0, 1)), ((1, 1), (1, 1)),
    ]
    assert search.formula == "3^4"
    assert search.space_size == 81


def test_triangular_mode_frees_only_upper_targets():
    search = PrunedSearch(SearchSpec.create(2, 0, [0, 1, -1], triangular=True))
    assert search.variables == [(((0, 1), (0, 1)), 1)]
    assert search.formula == "3^1"
    assert len(list(search_service.enumerate(SearchSpec.create(2, 0, [0, 1, -1], triangular=True)))) == 3


def test_one_dimensional_even_part_is_abelian_only():
    tables = list(search_service.enumerate(SearchSpec.create(1, 0, [0, 1, -1])))
    assert _tables(tables) == ["dims 1 0\n"]


def test_one_dimensional_odd_part_has_no_variables():
    spec = SearchSpec.create(0, 1, [0, 1, -1])
    assert PrunedSearch(spec).variables == []
    assert len(list(search_service.enumerate(spec))) == 1


@pytest.mark.parametrize("n, m, coefficients", [
    (1, 0, [0, 1, -1]),
    (0, 1, [0, 1, -1]),
    (1, 1, [0, 1, -1]),
    (2, 0, [0, 1]),
    pytest.param(2, 0, [0, 1, -1], marks=pytest.mark.slow),
])
def test_pruned_search_matches_brute_force(n, m, coefficients):
    spec = SearchSpec.create(n, m, coefficients)
    pruned = list(search_service.enumerate(spec))
    assert _tables(pruned) == _tables(search_service.brute_force(spec))
    assert all(superidentity_violations(a) == [] for a in pruned)


def test_budget_is_enforced():
    strict = SearchService(budget=10)
    with pytest.raises(SearchBudgetExceeded) as info:
        strict.census(SearchSpec.create(1, 1, [0, 1, -1]))
    assert info.value.formula == "3^4"
    assert info.value.estimate == 81
    report = strict.census(SearchSpec.create(1, 1, [0, 1, -1], force=True))
    assert report.search_space == 81


def test_resume_must_match_split_depth():
    with pytest.raises(SearchSpecError):
        search_service.census(SearchSpec.create(1, 1, [0, 1, -1], split_depth=2, resume=(0,)))
    with pytest.raises(SearchSpecError):
        search_service.census(SearchSpec.create(1, 1, [0, 1, -1], split_depth=2, resume=(0, 3)))


def test_max_prefixes_and_resume_cover_everything():
    full = search_service.census(SearchSpec.create(1, 1, [0, 1, -1], split_depth=2))
    first = search_service.census(SearchSpec.create(1, 1, [0, 1, -1], split_depth=2, max_prefixes=4))
    assert first.prefixes_done == 4
    assert first.next_cursor == "1.1"
    rest = search_service.census(
        SearchSpec.create(1, 1, [0, 1, -1], split_depth=2, resume=parse_cursor(first.next_cursor))
    )
    assert rest.prefixes_done == 5
    assert rest.next_cursor is None
    assert first.aggregate.valid + rest.aggregate.valid == full.aggregate.valid
    assert first.aggregate.nodes_visited + rest.aggregate.nodes_visited == full.aggregate.nodes_visited


def test_split_depth_is_capped_by_variable_count():
    _, prefixes = search_service.plan(SearchSpec.create(1, 0, [0, 1, -1], split_depth=4))
    assert prefixes == [(0,), (1,), (2,)]


def test_census_of_one_dimensional_algebra():
    report = search_service.census(SearchSpec.create(1, 0, [0, 1, -1]))
    data = report.to_dict()
    assert list(data)[0] == "schema_version"
    assert data["valid"] == 1
    assert data["nilpotent"] == 1
    assert data["non_nilpotent"] == 0
    assert data["histogram"] == [{"nilindex": 2, "charseq": "(1|)", "count": 1}]
    assert data["prop31"] == {"not_applicable:single_generated": 1}
    assert data["witnesses"] == []
    assert len(data["maximal_fingerprints"]) == 1


def test_census_histogram_sums_to_nilpotent_count():
    report = search_service.census(SearchSpec.create(1, 1, [0, 1, -1]))
    assert sum(row["count"] for row in report.histogram) == report.aggregate.nilpotent
    assert report.aggregate.nilpotent + report.aggregate.non_nilpotent == report.aggregate.valid
    assert any(";nilindex=3;" in row["fingerprint"] for row in report.maximal_fingerprints)
    assert verification_service.verify_maximal_nilindex(report).passed


def test_census_summary_lines():
    report = search_service.census(SearchSpec.create(2, 0, [0, 1, -1], triangular=True))
    lines = report.summary_lines()
    assert lines[0] == "Census (2|0) over {0, 1, -1} triangular: search space 3^1 = 3"
    assert lines[-1] == "witnesses: 0"
    assert any(";nilindex=3;" in row["fingerprint"] for row in report.maximal_fingerprints)


@pytest.mark.slow
@pytest.mark.parametrize("n, m", [(1, 1), (2, 0)])
@pytest.mark.parametrize("jobs", [2, 8])
def test_census_is_independent_of_jobs(n, m, jobs):
    spec = dict(n=n, m=m, coefficients=[0, 1, -1], split_depth=2)
    single = search_service.census(SearchSpec.create(**spec, jobs=1)).to_dict()
    pooled = search_service.census(SearchSpec.create(**spec, jobs=jobs)).to_dict()
    assert single == pooled
    pooled_tables = [serialize_lsa(a) for a in search_service.enumerate(SearchSpec.create(**spec, jobs=jobs))]
    single_tables = [serialize_lsa(a) for a in search_service.enumerate(SearchSpec.create(**spec, jobs=1))]
    assert pooled_tables == single_tables


@pytest.mark.slow
def test_no_maximal_nilindex_when_odd_part_is_unbalanced():
    report = search_service.census(SearchSpec.create(2, 1, [0, 1, -1], jobs=4))
    assert not any(row["nilindex"] == 4 for row in report.histogram)
    assert not any(";nilindex=4;" in row["fingerprint"] for row in report.maximal_fingerprints)
    assert all(section.passed for section in verification_service.census_sections(report))


@pytest.mark.slow
def test_census_with_two_odd_generators():
    report = search_service.census(SearchSpec.create(1, 2, [0, 1, -1], jobs=4))
    model = verification_service.model_fingerprint(1, 2).to_text()
    attainers = [row for row in report.maximal_fingerprints if ";nilindex=4;" in row["fingerprint"]]
    assert all(row["fingerprint"] == model for row in attainers)
    assert all(section.passed for section in verification_service.census_sections(report))
