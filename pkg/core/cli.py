"""
Командная строка `lsa` для супералгебр Лейбница.

Настраивает логирование и регистрирует группы команд: исследование
одной алгебры, семейства, перебор и проверку утверждений.
"""
import logging
import sys

import click

from config.settings import settings
from core.handlers.family_commands import setup_family_commands
from core.handlers.inspect_commands import setup_inspect_commands
from core.handlers.search_commands import setup_search_commands

logger = logging.getLogger(__name__)


def configure_logging(level: str, log_file: str = None) -> None:
    """Логи идут в stderr и, если задано, в файл; stdout остаётся для результатов."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


@click.group(name="lsa")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                                               case_sensitive=False),
              default=None, help="Уровень логирования (по умолчанию LSA_LOG_LEVEL)")
def cli(log_level: str):
    """Точная арифметика и инварианты конечномерных супералгебр Лейбница."""
    configure_logging(log_level or settings.log_level, settings.log_file)
    logger.debug("Логирование настроено")


setup_inspect_commands(cli)
setup_family_commands(cli)
setup_search_commands(cli)
