"""
Точка входа командной строки `lsa`.

    python main.py check data/leib22b.lsa
    python main.py family NULL_FILIFORM --n 3 --m 0 | python main.py check -
"""
import sys
from pathlib import Path

# Добавляем корневую директорию проекта в PYTHONPATH
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from core.cli import cli


if __name__ == "__main__":
    cli(prog_name="lsa")
