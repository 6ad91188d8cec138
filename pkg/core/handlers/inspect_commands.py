"""
Команды исследования одной алгебры: check, series, charseq, annihilator,
gradation, fingerprint и compare.
"""
import logging
import sys

import click

from config.settings import settings
from core.handlers.output import EXIT_VIOLATION, emit, handle_errors, json_option, read_algebra
from core.models.invariants import format_dims
from core.models.superalgebra import (
    basis_name, even_part, is_lie, right_annihilator, subspace_elements, superidentity_violations,
)
from core.services.invariant_service import invariant_service
from utils.lsa_format import serialize_lsa

logger = logging.getLogger(__name__)


@click.command()
@click.argument("file")
@json_option
@handle_errors
def check(file: str, as_json: bool):
    """Проверить супертождество Лейбница на всех базисных тройках."""
    algebra = read_algebra(file)
    violations = superidentity_violations(algebra)
    rows = [
        {"triple": [basis_name(b) for b in triple], "residual": str(residual)}
        for triple, residual in violations
    ]
    if violations:
        lines = [f"Leibniz superalgebra: FAILED on {len(violations)} triples"]
        lines += [f"  ({', '.join(row['triple'])}): {row['residual']}" for row in rows]
    else:
        lines = ["Leibniz superalgebra: OK"]
    emit(as_json, {"dims": list(algebra.dims), "valid": not violations, "violations": rows}, lines)
    if violations:
        sys.exit(EXIT_VIOLATION)


@click.command()
@click.argument("file")
@json_option
@handle_errors
def series(file: str, as_json: bool):
    """Нижний центральный ряд и нильиндекс."""
    algebra = read_algebra(file)
    result = invariant_service.central_series(algebra)
    payload = {
        "dims": [list(d) for d in result.dims],
        "nilpotent": result.is_nilpotent,
        "nilindex": result.nilindex,
    }
    emit(as_json, payload, [str(result)])


@click.command()
@click.argument("file")
@click.option("--trials", type=click.IntRange(min=0), default=None, help="Число случайных кандидатов x")
@click.option("--seed", type=int, default=None, help="Зерно генератора кандидатов")
@json_option
@handle_errors
def charseq(file: str, trials: int, seed: int, as_json: bool):
    """Характеристическая последовательность (C₀ | C₁)."""
    algebra = read_algebra(file)
    trials = settings.trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    result = invariant_service.characteristic_sequence(algebra, trials, seed)
    payload = {"charseq": result.to_dict(), "text": str(result), "trials": trials, "seed": seed}
    emit(as_json, payload, [f"Characteristic sequence: {result}"])


@click.command()
@click.argument("file")
@json_option
@handle_errors
def annihilator(file: str, as_json: bool):
    """Правый аннулятор R(L) = {z : [L, z] = 0}."""
    algebra = read_algebra(file)
    subspace = right_annihilator(algebra)
    basis = [str(e) for e in subspace_elements(algebra, subspace)]
    lines = [f"R(L) {format_dims(subspace.dims)}"] + [f"  {e}" for e in basis]
    emit(as_json, {"dims": list(subspace.dims), "basis": basis}, lines)


@click.command()
@click.argument("file")
@json_option
@handle_errors
def gradation(file: str, as_json: bool):
    """Естественная градуировка чётной части."""
    algebra = read_algebra(file)
    if algebra.m:
        logger.info(f"Градуировка строится по чётной части ({algebra.n}|0)")
        algebra = even_part(algebra)
    result = invariant_service.natural_gradation(algebra)
    lie = is_lie(result.algebra)
    table = serialize_lsa(result.algebra)
    payload = {
        "degrees": list(result.degrees),
        "component_dims": result.component_dims(),
        "lie": lie,
        "table": table,
    }
    lines = [
        f"gr components: {', '.join(str(d) for d in result.component_dims())}; "
        f"degrees {', '.join(str(d) for d in result.degrees)}; {'Lie' if lie else 'non-Lie'}",
        table.rstrip("\n"),
    ]
    emit(as_json, payload, lines)


@click.command()
@click.argument("file")
@json_option
@handle_errors
def fingerprint(file: str, as_json: bool):
    """Отпечаток инвариантов."""
    algebra = read_algebra(file)
    result = invariant_service.fingerprint(algebra)
    emit(as_json, {"fingerprint": result.to_dict()}, [result.to_text()])


@click.command()
@click.argument("first")
@click.argument("second")
@json_option
@handle_errors
def compare(first: str, second: str, as_json: bool):
    """Сравнить отпечатки двух алгебр; код 1, если они различны."""
    left = invariant_service.fingerprint(read_algebra(first)).to_dict()
    right = invariant_service.fingerprint(read_algebra(second)).to_dict()
    fields = [key for key in left if key != "text"]
    differing = [key for key in fields if left[key] != right[key]]
    if differing:
        lines = [f"Fingerprints differ: {', '.join(differing)}", f"  {left['text']}", f"  {right['text']}"]
    else:
        lines = [f"Fingerprints equal: {left['text']}"]
    emit(as_json, {"equal": not differing, "differing": differing, "first": left, "second": right}, lines)
    if differing:
        sys.exit(EXIT_VIOLATION)


def setup_inspect_commands(group: click.Group) -> None:
    """Регистрация команд исследования одной алгебры."""
    for command in (check, series, charseq, annihilator, gradation, fingerprint, compare):
        group.add_command(command)
    logger.debug("Команды исследования зарегистрированы")
