"""
Иерархия исключений ядра супералгебр Лейбница.

Все ошибки предметной области наследуются от SuperAlgebraError,
чтобы CLI мог отличать их от ошибок программы и возвращать код 2.
"""
from typing import Optional, Sequence, Tuple


class SuperAlgebraError(Exception):
    """Базовая ошибка предметной области."""


# --- Скаляры ---

class ScalarError(SuperAlgebraError):
    """Ошибка арифметики в круговом поле."""


class ScalarDivisionByZero(ScalarError, ZeroDivisionError):
    """Деление на нулевой скаляр."""

    def __init__(self):
        super().__init__("Деление на ноль в круговом поле")


class ScalarSyntaxError(ScalarError):
    """Некорректная запись скалярного литерала."""


# --- Линейная алгебра ---

class LinalgError(SuperAlgebraError):
    """Ошибка точной линейной алгебры."""


class DimensionMismatch(LinalgError):
    """Размерности операндов не согласованы."""


class SingularMatrix(LinalgError):
    """Матрица вырождена, а требуется обратимая."""


# --- Алгебры и инварианты ---

class GradingViolation(SuperAlgebraError):
    """
    Нарушение Z₂-градуировки или индекса базиса в таблице умножения.

    Attributes:
        pair: Пара базисных векторов, на которой найдено нарушение
        line: Номер строки .lsa-файла (если ошибка пришла из парсера)
    """

    def __init__(self, message: str, pair: Optional[Tuple] = None, line: Optional[int] = None):
        self.pair = pair
        self.line = line
        if line is not None:
            message = f"строка {line}: {message}"
        super().__init__(message)


class NotNilpotent(SuperAlgebraError):
    """
    Алгебра (или оператор) не нильпотентна.

    Attributes:
        dims: Градуированные размерности стабилизировавшегося члена ряда
    """

    def __init__(self, message: str = "Алгебра не нильпотентна", dims: Optional[Sequence] = None):
        self.dims = tuple(dims) if dims is not None else None
        super().__init__(message)


class CharacteristicUndefined(SuperAlgebraError):
    """Характеристическая последовательность не определена (n = 0)."""


# --- Семейства ---

class FamilyError(SuperAlgebraError):
    """Ошибка построения классифицированного семейства."""


class FamilyDimsError(FamilyError):
    """Размерности (n, m) не подходят семейству."""


class FamilyArityError(FamilyError):
    """Число параметров не совпадает с арностью семейства."""


class TranscriptionError(FamilyError):
    """Выписанная скобка противоречит супертождеству или диапазону индексов."""


class ShapeError(FamilyError):
    """Вектор не имеет формы, которую принимает оператор W."""


# --- Проверки и перебор ---

class NotApplicable(SuperAlgebraError):
    """
    Гипотеза проверяемого утверждения не выполнена.

    Attributes:
        reason: Короткое машинное имя причины
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Неприменимо: {reason}")


class SearchSpecError(SuperAlgebraError):
    """Некорректные параметры перебора: набор коэффициентов или курсор."""


class SearchBudgetExceeded(SuperAlgebraError):
    """
    Пространство перебора больше бюджета.

    Attributes:
        estimate: Оценка числа таблиц
        formula: Формула оценки в виде строки
    """

    def __init__(self, estimate: int, formula: str, budget: int):
        self.estimate = estimate
        self.formula = formula
        self.budget = budget
        super().__init__(
            f"Пространство перебора {formula} = {estimate} превышает бюджет {budget}; "
            f"используйте --force или --triangular"
        )


# --- Формат .lsa ---

class LsaError(SuperAlgebraError):
    """Ошибка чтения .lsa-документа."""


class LsaSyntaxError(LsaError):
    """
    Синтаксическая ошибка с позицией.

    Attributes:
        line: Номер строки (с 1)
        column: Номер столбца (с 1)
    """

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"строка {line}, столбец {column}: {message}")


class LsaDuplicateBracket(LsaError):
    """Одна и та же скобка задана дважды."""


class LsaUnknownBasis(LsaError):
    """Неизвестный базисный токен или индекс вне диапазона."""
