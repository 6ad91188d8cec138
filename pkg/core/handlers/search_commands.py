"""
Команды перебора и проверки утверждений: search и verify-theorems.
"""
import logging
import sys
from fractions import Fraction
from typing import List

import click

from config.settings import settings
from core.handlers.output import EXIT_VIOLATION, emit, handle_errors, json_option, parse_csv_scalars
from core.services.family_service import PARAMETER_GRID, family_service
from core.services.search_service import SearchSpec, parse_cursor, search_service
from core.services.verification_service import VerificationSection, verification_service

logger = logging.getLogger(__name__)

CENSUS_DIMS = ((1, 0), (0, 1), (2, 0), (1, 1), (2, 1), (1, 2))
CENSUS_COEFFICIENTS = (0, 1, -1)


@click.command()
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Размерность чётной части")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Размерность нечётной части")
@click.option("--coeffs", default="0,1,-1", show_default=True, help="Набор коэффициентов через запятую")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Число процессов")
@click.option("--resume", default=None, help="Курсор префикса, например 0.2.1.0")
@click.option("--max-prefixes", type=click.IntRange(min=1), default=None,
              help="Остановиться после K префиксов и вывести next_cursor")
@click.option("--triangular", is_flag=True, help="Только строго верхнетреугольные константы")
@click.option("--force", is_flag=True, help="Игнорировать бюджет перебора")
@json_option
@handle_errors
def search(n: int, m: int, coeffs: str, jobs: int, resume: str, max_prefixes: int,
           triangular: bool, force: bool, as_json: bool):
    """Перепись таблиц (n|m) над конечным набором коэффициентов."""
    spec = SearchSpec.create(
        n, m, parse_csv_scalars(coeffs),
        triangular=triangular,
        jobs=settings.jobs if jobs is None else jobs,
        resume=parse_cursor(resume) if resume is not None else None,
        max_prefixes=max_prefixes,
        force=force,
    )
    result = search_service.census(spec)
    emit(as_json, result.to_dict(), result.summary_lines())


def _census_sections(max_total_dim: int, jobs: int) -> List[VerificationSection]:
    sections = []
    for n, m in CENSUS_DIMS:
        if n + m > max_total_dim:
            continue
        report = search_service.census(SearchSpec.create(n, m, CENSUS_COEFFICIENTS, jobs=jobs))
        sections.extend(verification_service.census_sections(report))
    return sections


@click.command(name="verify-theorems")
@click.option("--max-total-dim", type=click.IntRange(min=1), default=3, show_default=True,
              help="Переписи для n+m ≤ D")
@click.option("--max-n", type=click.IntRange(min=3), default=4, show_default=True,
              help="Наибольшее n в корпусе семейств")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Число процессов для переписей")
@click.option("--seed", type=int, default=0, show_default=True, help="Зерно случайных замен базиса")
@json_option
@handle_errors
def verify_theorems(max_total_dim: int, max_n: int, jobs: int, seed: int, as_json: bool):
    """Проверить утверждения классификации на корпусе семейств и переписях."""
    jobs = settings.jobs if jobs is None else jobs
    grid = ", ".join(str(Fraction(v)) for v in PARAMETER_GRID)
    corpus = list(family_service.family_corpus(max_n=max_n))
    logger.info(f"Корпус семейств: {len(corpus)} экземпляров")
    sections = verification_service.sweep_corpus(corpus, f"family corpus n ≤ {max_n} over {{{grid}}}")
    step = max(len(corpus) // 10, 1)
    sections.append(verification_service.verify_isomorphism_invariance(corpus[::step][:10], seed=seed))
    sections.extend(_census_sections(max_total_dim, jobs))
    passed = all(section.passed for section in sections)
    lines = [section.summary() for section in sections]
    lines.append("All checks passed" if passed else "Some checks FAILED")
    emit(as_json, {"passed": passed, "sections": [s.to_dict() for s in sections]}, lines)
    if not passed:
        sys.exit(EXIT_VIOLATION)


def setup_search_commands(group: click.Group) -> None:
    """Регистрация команд перебора."""
    group.add_command(search)
    group.add_command(verify_theorems)
    logger.debug("Команды перебора зарегистрированы")
