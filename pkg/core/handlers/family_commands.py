"""
Команды семейств: построение экземпляра и список представителей.
"""
import logging

import click

from config.family_catalog import FamilyTag, family_catalog
from core.families import build_family
from core.handlers.output import emit, handle_errors, json_option, parse_csv_scalars
from core.services.family_service import family_service
from utils.lsa_format import serialize_lsa

logger = logging.getLogger(__name__)

TAG_CHOICE = click.Choice([tag.value for tag in FamilyTag], case_sensitive=False)


@click.command()
@click.argument("tag", type=TAG_CHOICE)
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Размерность чётной части")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Размерность нечётной части")
@click.option("--params", default="", help="Параметры через запятую, например 1,-1,1/2,z(4)^1")
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Записать .lsa в файл вместо стандартного вывода")
@json_option
@handle_errors
def family(tag: str, n: int, m: int, params: str, output: str, as_json: bool):
    """Построить экземпляр семейства TAG и вывести его в формате .lsa."""
    spec = family_catalog.get(tag)
    values = parse_csv_scalars(params)
    algebra = build_family(spec.tag, n, m, values)
    text = serialize_lsa(algebra)
    if output:
        with click.open_file(output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"{spec.tag.value}({n}|{m}) записана в {output}")
    payload = {
        "tag": spec.tag.value,
        "dims": [n, m],
        "params": [str(v) for v in values],
        "table": text,
    }
    if as_json:
        emit(True, payload, [])
    elif not output:
        click.echo(text, nl=False)


@click.command(name="list")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Размерность чётной части")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Размерность нечётной части")
@click.option("--sample", default="1", help="Образцы свободных параметров через запятую (по циклу)")
@click.option("--root", "root_index", type=int, default=0, help="Индекс корня в S_{m,t}")
@json_option
@handle_errors
def list_command(n: int, m: int, sample: str, root_index: int, as_json: bool):
    """Список попарно неизоморфных супералгебр нильиндекса n+m при (n|m)."""
    entries = family_service.canonical_list(n, m, parse_csv_scalars(sample) or [1], root_index)
    lines = []
    for entry in entries:
        suffix = f"  unrealizable: {entry.unrealizable}" if entry.unrealizable else ""
        lines.append(f"{entry.description}{suffix}")
    lines.append(f"{len(entries)} entries")
    emit(as_json, {"dims": [n, m], "entries": [e.to_dict() for e in entries]}, lines)


def setup_family_commands(group: click.Group) -> None:
    """Регистрация команд семейств."""
    group.add_command(family)
    group.add_command(list_command)
    logger.debug("Команды семейств зарегистрированы")
