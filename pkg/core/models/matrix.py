"""
Точная плотная линейная алгебра над круговыми полями.

Приведение к ступенчатому виду, ранги, ядра, градуированные подпространства
и жордановы разбиения нильпотентных матриц по последовательности рангов.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from core.exceptions import DimensionMismatch, NotNilpotent, SingularMatrix
from core.models.scalar import ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class Matrix:
    """
    Матрица со скалярными элементами, хранение по строкам.

    Attributes:
        rows: Число строк
        cols: Число столбцов
        entries: Элементы по строкам, длина rows·cols
    """
    rows: int
    cols: int
    entries: Tuple[Scalar, ...] = field(repr=False)

    def __post_init__(self):
        """Проверка длины хранилища."""
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"Ожидалось {self.rows}×{self.cols} элементов, получено {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        """Матрица из списка строк; cols нужен для матриц без строк."""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: List[Scalar] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("Строки матрицы разной длины")
            entries.extend(Scalar.coerce(x) for x in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(size, size, tuple(ONE if i == j else ZERO for i in range(size) for j in range(size)))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"Нельзя умножить {self.rows}×{self.cols} на {other.rows}×{other.cols}")
        result: List[Scalar] = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k, a in enumerate(row):
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                result.append(acc)
        return Matrix(self.rows, other.cols, tuple(result))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Произведение M·v для вектора-столбца."""
        if len(vector) != self.cols:
            raise DimensionMismatch("Длина вектора не совпадает с числом столбцов")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, x in zip(self.row(i), vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("Степень определена только для квадратной матрицы")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        """Обратная матрица методом Гаусса–Жордана."""
        if not self.is_square:
            raise DimensionMismatch("Обратная матрица существует только для квадратной")
        size = self.rows
        augmented = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(size)] for i in range(size)]
        reduced, rank, _ = _rref_rows(augmented, limit=size)
        if rank < size:
            raise SingularMatrix("Матрица вырождена")
        return Matrix.from_rows([row[size:] for row in reduced], cols=size)


def _rref_rows(rows: List[List[Scalar]], limit: Optional[int] = None) -> Tuple[List[List[Scalar]], int, List[int]]:
    """
    Приведение списка строк к приведённому ступенчатому виду.

    Ведущий элемент ищется в первом ненулевом по порядку столбце;
    limit ограничивает столбцы, в которых ищутся ведущие элементы.

    Returns:
        (строки, ранг, номера ведущих столбцов)
    """
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    if limit is None:
        limit = width
    pivots: List[int] = []
    rank = 0
    for col in range(limit):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        if lead != ONE:
            inv = lead.inverse()
            rows[rank] = [x * inv if x else x for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank:
                factor = rows[r][col]
                if factor:
                    rows[r] = [x - factor * y if y else x for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows, rank, pivots


def rref(matrix: Matrix) -> Tuple[Matrix, int]:
    """
    Приведённый ступенчатый вид и ранг.

    Args:
        matrix: Исходная матрица

    Returns:
        (матрица той же формы с нулевыми строками внизу, ранг)
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return matrix, 0
    rows, rank, _ = _rref_rows(matrix.to_rows())
    return Matrix.from_rows(rows, cols=matrix.cols), rank


def pivot_columns(matrix: Matrix) -> List[int]:
    """Номера ведущих столбцов ступенчатого вида."""
    if matrix.rows == 0:
        return []
    return _rref_rows(matrix.to_rows())[2]


def echelon_basis(vectors: Sequence[Sequence[Scalar]], width: int) -> Matrix:
    """Базис линейной оболочки в приведённом ступенчатом виде без нулевых строк."""
    vectors = [list(v) for v in vectors if any(x for x in v)]
    if not vectors or width == 0:
        return Matrix(0, width, ())
    rows, rank, _ = _rref_rows(vectors)
    return Matrix.from_rows(rows[:rank], cols=width)


def null_space(matrix: Matrix) -> Matrix:
    """
    Базис ядра {v : M·v = 0}, строки в ступенчатом виде.

    Args:
        matrix: Матрица системы

    Returns:
        Матрица, строки которой образуют базис ядра
    """
    width = matrix.cols
    if matrix.rows == 0:
        return Matrix.identity(width)
    rows, rank, pivots = _rref_rows(matrix.to_rows())
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vector = [ZERO] * width
        vector[f] = ONE
        for r, p in enumerate(pivots):
            vector[p] = -rows[r][f]
        basis.append(vector)
    return echelon_basis(basis, width)


def reduce_vector(basis: Matrix, vector: Sequence[Scalar]) -> Vector:
    """Остаток вектора после исключения ведущих столбцов ступенчатого базиса."""
    residual = list(vector)
    for i in range(basis.rows):
        row = basis.row(i)
        lead = next(c for c, x in enumerate(row) if x)
        factor = residual[lead]
        if factor:
            residual = [x - factor * y if y else x for x, y in zip(residual, row)]
    return tuple(residual)


@dataclass(frozen=True)
class GradedSubspace:
    """
    Подпространство L₀ ⊕ L₁, заданное парой ступенчатых базисов.

    Attributes:
        even_basis: Базис чётной части в координатах x₁…x_n
        odd_basis: Базис нечётной части в координатах y₁…y_m
    """
    even_basis: Matrix
    odd_basis: Matrix

    @classmethod
    def span(cls, even_vectors: Sequence[Sequence[Scalar]], odd_vectors: Sequence[Sequence[Scalar]],
             n: int, m: int) -> "GradedSubspace":
        return cls(echelon_basis(even_vectors, n), echelon_basis(odd_vectors, m))

    @classmethod
    def whole(cls, n: int, m: int) -> "GradedSubspace":
        return cls(Matrix.identity(n), Matrix.identity(m))

    @classmethod
    def zero(cls, n: int, m: int) -> "GradedSubspace":
        return cls(Matrix(0, n, ()), Matrix(0, m, ()))

    @property
    def ambient(self) -> Tuple[int, int]:
        return self.even_basis.cols, self.odd_basis.cols

    @property
    def dims(self) -> Tuple[int, int]:
        return self.even_basis.rows, self.odd_basis.rows

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def _check(self, other: "GradedSubspace"):
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"Подпространства в разных пространствах: {self.ambient} и {other.ambient}")

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._check(other)
        n, m = self.ambient
        return GradedSubspace.span(
            self.even_basis.to_rows() + other.even_basis.to_rows(),
            self.odd_basis.to_rows() + other.odd_basis.to_rows(),
            n, m,
        )

    def contains_vector(self, even: Sequence[Scalar], odd: Sequence[Scalar]) -> bool:
        n, m = self.ambient
        if len(even) != n or len(odd) != m:
            raise DimensionMismatch("Длина вектора не совпадает с объемлющим пространством")
        return (not any(reduce_vector(self.even_basis, even))
                and not any(reduce_vector(self.odd_basis, odd)))

    def contains(self, other: "GradedSubspace") -> bool:
        self._check(other)
        return (all(not any(reduce_vector(self.even_basis, r)) for r in other.even_basis.to_rows())
                and all(not any(reduce_vector(self.odd_basis, r)) for r in other.odd_basis.to_rows()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        self._check(other)
        return self.even_basis == other.even_basis and self.odd_basis == other.odd_basis

    def __hash__(self) -> int:
        return hash((self.even_basis, self.odd_basis))

    def __str__(self) -> str:
        even, odd = self.dims
        return f"({even}|{odd})"


@dataclass(frozen=True, order=True)
class Partition:
    """
    Невозрастающее разбиение: размеры жордановых клеток.

    Attributes:
        parts: Части по убыванию
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        """Проверка монотонности."""
        if any(p <= 0 for p in self.parts):
            raise ValueError("Части разбиения должны быть положительны")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"Разбиение должно быть невозрастающим: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def rank_of_power(self, k: int) -> int:
        """Ранг k-й степени нильпотентной матрицы с таким жордановым типом."""
        return sum(max(p - k, 0) for p in self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def jordan_partition(matrix: Matrix, nil_bound: Optional[int] = None) -> Partition:
    """
    Жорданов тип нильпотентной матрицы по рангам её степеней.

    Число клеток размера ≥ k равно r_{k−1} − r_k, где r_k = rank(M^k).

    Args:
        matrix: Квадратная матрица
        nil_bound: Максимальная проверяемая степень (по умолчанию размер матрицы)

    Returns:
        Разбиение размера матрицы
    """
    if not matrix.is_square:
        raise DimensionMismatch("Жорданов тип определён только для квадратной матрицы")
    size = matrix.rows
    if nil_bound is None:
        nil_bound = size
    ranks = [size]
    power = Matrix.identity(size)
    while ranks[-1] > 0:
        if len(ranks) > nil_bound:
            raise NotNilpotent(f"M^{nil_bound} ≠ 0: матрица не нильпотентна")
        power = power @ matrix
        rank = power.rank
        if rank == ranks[-1]:
            raise NotNilpotent("Ранги степеней стабилизировались на ненулевом значении")
        ranks.append(rank)
    ranks.append(0)
    parts: List[int] = []
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exact)
    return Partition(tuple(parts))
