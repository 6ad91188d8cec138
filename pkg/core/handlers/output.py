"""
Общие помощники команд: чтение .lsa, вывод текста или JSON, коды выхода.
"""
import functools
import json
import logging
import sys
from typing import Callable, Dict, Iterable, List

import click

from core.exceptions import NotNilpotent, SuperAlgebraError
from core.models.scalar import Scalar
from core.models.superalgebra import SuperAlgebra
from utils.lsa_format import parse_lsa, parse_scalar

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def read_algebra(path: str) -> SuperAlgebra:
    """Алгебра из файла; `-` означает стандартный ввод."""
    with click.open_file(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_lsa(text)


def parse_csv_scalars(text: str) -> List[Scalar]:
    """Список скаляров через запятую; пустая строка даёт пустой список."""
    if text is None or not text.strip():
        return []
    return [parse_scalar(item) for item in text.split(",")]


def report(payload: Dict[str, object]) -> Dict[str, object]:
    """JSON-отчёт с версией схемы первым полем."""
    return {"schema_version": SCHEMA_VERSION, **payload}


def emit(as_json: bool, payload: Dict[str, object], lines: Iterable[str]):
    if as_json:
        click.echo(json.dumps(report(payload), ensure_ascii=False, indent=2))
    else:
        for line in lines:
            click.echo(line)


def handle_errors(command: Callable) -> Callable:
    """
    Переводит ошибки предметной области в коды выхода.

    Ненильпотентность там, где её не ждали, считается нарушением свойства (1),
    остальные ошибки ввода и разбора дают 2.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except NotNilpotent as e:
            logger.error(f"{command.__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_VIOLATION)
        except SuperAlgebraError as e:
            logger.error(f"{command.__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except (OSError, ValueError) as e:
            logger.error(f"{command.__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


json_option = click.option("--json", "as_json", is_flag=True, help="Машиночитаемый вывод")
