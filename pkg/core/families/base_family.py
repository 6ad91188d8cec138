"""
Базовый класс для всех классифицированных семейств.

Определяет общий порядок построения: проверка размерностей и арности
по каталогу, заполнение таблицы скобок и сборка супералгебры.
"""
import logging
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Sequence, Tuple

from config.family_catalog import FamilySpec, FamilyTag, family_catalog
from core.exceptions import FamilyArityError, FamilyDimsError, TranscriptionError
from core.models.scalar import Number, Scalar
from core.models.superalgebra import Basis, Pair, SuperAlgebra, basis_name, make_superalgebra, pair_name

logger = logging.getLogger(__name__)

Term = Tuple[Number, Basis]


class BracketTable:
    """
    Накопитель скобок семейства.

    Каждая скобка задаётся один раз; индекс вне базиса или повторное
    задание считаются ошибкой выписывания таблицы.
    """

    def __init__(self, family: str, n: int, m: int):
        """
        Args:
            family: Имя семейства для сообщений об ошибках
            n: Размерность чётной части
            m: Размерность нечётной части
        """
        self.family = family
        self.n = n
        self.m = m
        self.table: Dict[Pair, Dict[Basis, Scalar]] = {}

    def _check(self, b: Basis, context: str):
        parity, index = b
        bound = self.n if parity == 0 else self.m
        if not 1 <= index <= bound:
            raise TranscriptionError(
                f"{self.family}: {context} ссылается на {basis_name(b)} вне ({self.n}|{self.m})"
            )

    def set(self, a: Basis, b: Basis, terms: Iterable[Term]):
        """
        Задаёт скобку [a, b] = Σ coef·basis.

        Args:
            a: Левый множитель
            b: Правый множитель
            terms: Пары (коэффициент, базисный вектор); нулевые отбрасываются
        """
        pair = (a, b)
        context = pair_name(pair)
        self._check(a, context)
        self._check(b, context)
        if pair in self.table:
            raise TranscriptionError(f"{self.family}: скобка {context} задана дважды")
        value: Dict[Basis, Scalar] = {}
        for coef, target in terms:
            coef = Scalar.coerce(coef)
            if coef.is_zero():
                continue
            self._check(target, context)
            value[target] = value.get(target, Scalar.coerce(0)) + coef
        if value:
            self.table[pair] = value

    def build(self) -> SuperAlgebra:
        return make_superalgebra(self.n, self.m, self.table)


class BaseFamily(ABC):
    """
    Базовый класс семейства супералгебр.

    Отвечает за:
    - Проверку размерностей и числа параметров по каталогу
    - Приведение параметров к скалярам
    - Сборку проверенной супералгебры из таблицы скобок
    """

    def __init__(self, tag: FamilyTag):
        """
        Инициализация семейства.

        Args:
            tag: Метка семейства в каталоге
        """
        self.tag = tag
        self.spec: FamilySpec = family_catalog.get(tag)
        self.logger = logging.getLogger(f"family.{tag.value.lower()}")

    @property
    def name(self) -> str:
        return self.tag.value

    def validate(self, n: int, m: int, params: Sequence[Number]) -> List[Scalar]:
        """Проверка размерностей и арности; возвращает параметры-скаляры."""
        if not self.spec.accepts_dims(n, m):
            self.logger.error(f"Размерности ({n}|{m}) не подходят {self.name}")
            raise FamilyDimsError(f"{self.name}: размерности ({n}|{m}) недопустимы, нужно {self.spec.dims_rule()}")
        if not self.spec.accepts_arity(n, len(params)):
            expected = self.spec.param_names(n)
            self.logger.error(f"{self.name}: получено {len(params)} параметров вместо {len(expected)}")
            raise FamilyArityError(
                f"{self.name} при n = {n} ожидает {len(expected)} параметров ({', '.join(expected) or 'нет'}), "
                f"получено {len(params)}"
            )
        return [Scalar.coerce(p) for p in params]

    def build(self, n: int, m: int, params: Sequence[Number] = ()) -> SuperAlgebra:
        """
        Строит супералгебру семейства.

        Args:
            n: Размерность чётной части
            m: Размерность нечётной части
            params: Параметры в порядке каталога

        Returns:
            SuperAlgebra
        """
        values = self.validate(n, m, params)
        table = BracketTable(self.name, n, m)
        self.fill(table, n, m, values)
        algebra = table.build()
        self.logger.debug(f"{self.name}({n}|{m}) построена: {len(algebra.table)} скобок")
        return algebra

    @abstractmethod
    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        """
        Заполняет таблицу скобок семейства.

        Args:
            table: Накопитель скобок
            n: Размерность чётной части
            m: Размерность нечётной части
            params: Проверенные параметры
        """
        pass
