"""
Сервис инвариантов супералгебр.

Считает нижний центральный ряд, нильиндекс, образующие, операторы
правого умножения, характеристическую последовательность, естественную
градуировку и отпечаток.
"""
import logging
import random
from typing import Dict, List, Optional, Tuple

from config.settings import settings
from core.exceptions import CharacteristicUndefined, DimensionMismatch, GradingViolation, NotNilpotent
from core.models.invariants import NOT_NILPOTENT, CentralSeries, CharSeq, Fingerprint, NaturalGradation
from core.models.matrix import GradedSubspace, Matrix, echelon_basis, jordan_partition, pivot_columns, reduce_vector
from core.models.scalar import ZERO, Scalar
from core.models.superalgebra import (
    Element, SuperAlgebra, is_lie, make_superalgebra, multiply, right_annihilator, subspace_elements, x,
)

logger = logging.getLogger(__name__)


class InvariantService:
    """
    Сервис инвариантов.

    Отвечает за:
    - Нижний центральный ряд и нильиндекс
    - Размерности пространства образующих L/L²
    - Матрицы операторов R_x и характеристическую последовательность
    - Естественную градуировку чётной части
    - Отпечаток для сравнения алгебр
    """

    def __init__(self, trials: Optional[int] = None, seed: Optional[int] = None):
        """
        Инициализация сервиса.

        Args:
            trials: Число случайных кандидатов x (по умолчанию из настроек)
            seed: Зерно генератора кандидатов (по умолчанию из настроек)
        """
        self.trials = settings.trials if trials is None else trials
        self.seed = settings.seed if seed is None else seed
        logger.info(f"InvariantService инициализирован: trials={self.trials}, seed={self.seed}")

    # --- центральный ряд ---

    def product_subspace(self, algebra: SuperAlgebra, subspace: GradedSubspace) -> GradedSubspace:
        """[U, L]: линейная оболочка [u, b] по базисам U и L."""
        even, odd = [], []
        for u in subspace_elements(algebra, subspace):
            for b in algebra.basis:
                w = multiply(algebra, u, algebra.element(b))
                if not w.is_zero():
                    even.append(w.even)
                    odd.append(w.odd)
        return GradedSubspace.span(even, odd, algebra.n, algebra.m)

    def central_series(self, algebra: SuperAlgebra) -> CentralSeries:
        """
        Нижний центральный ряд L¹ = L, L^{k+1} = [L^k, L].

        Вычисление останавливается на нулевом члене или на повторе.
        """
        terms = [GradedSubspace.whole(algebra.n, algebra.m)]
        while not terms[-1].is_zero():
            following = self.product_subspace(algebra, terms[-1])
            terms.append(following)
            if following == terms[-2]:
                break
        return CentralSeries(tuple(terms))

    def nilindex(self, algebra: SuperAlgebra) -> int:
        """Минимальное s с L^s = 0."""
        series = self.central_series(algebra)
        if not series.is_nilpotent:
            logger.error(f"Ряд стабилизировался на {series.terms[-1]}")
            raise NotNilpotent(f"L^k стабилизировался на {series.terms[-1]}", dims=series.terms[-1].dims)
        return series.nilindex

    def generator_dims(self, algebra: SuperAlgebra, series: Optional[CentralSeries] = None) -> Tuple[int, int]:
        """Размерности L/L²."""
        series = series or self.central_series(algebra)
        square = series.terms[1] if len(series.terms) > 1 else series.terms[0]
        return algebra.n - square.dims[0], algebra.m - square.dims[1]

    # --- операторы правого умножения ---

    def _basis_right_mult(self, algebra: SuperAlgebra) -> List[Tuple[Matrix, Matrix]]:
        """R_{x_i} на L₀ и L₁ для каждого чётного базисного x_i."""
        result = []
        for i in range(1, algebra.n + 1):
            result.append(self.right_mult_matrices(algebra, algebra.element(x(i))))
        return result

    def right_mult_matrices(self, algebra: SuperAlgebra, element: Element) -> Tuple[Matrix, Matrix]:
        """
        Матрицы оператора b ↦ [b, x] на L₀ и на L₁.

        Args:
            algebra: Супералгебра
            element: Чётный элемент x

        Returns:
            (M₀, M₁): столбец k есть образ k-го базисного вектора
        """
        if any(element.odd):
            logger.error(f"Элемент {element} не чётный")
            raise GradingViolation(f"R_x определён для чётного x, получено {element}")
        n, m = algebra.n, algebra.m
        even_images = [multiply(algebra, algebra.element((0, k)), element).even for k in range(1, n + 1)]
        odd_images = [multiply(algebra, algebra.element((1, k)), element).odd for k in range(1, m + 1)]
        m0 = Matrix.from_rows([[even_images[k][i] for k in range(n)] for i in range(n)], cols=n)
        m1 = Matrix.from_rows([[odd_images[k][i] for k in range(m)] for i in range(m)], cols=m)
        return m0, m1

    @staticmethod
    def _combine(matrices: List[Matrix], coeffs: List[Scalar]) -> Matrix:
        first = matrices[0]
        entries = [ZERO] * (first.rows * first.cols)
        for matrix, c in zip(matrices, coeffs):
            if c:
                entries = [e + c * v if v else e for e, v in zip(entries, matrix.entries)]
        return Matrix(first.rows, first.cols, tuple(entries))

    def even_square(self, algebra: SuperAlgebra) -> Matrix:
        """Ступенчатый базис L₀² = [L₀, L₀]."""
        vectors = []
        for a in algebra.basis[:algebra.n]:
            for b in algebra.basis[:algebra.n]:
                product = algebra.products.get((a, b))
                if product is not None:
                    vectors.append(product.even)
        return echelon_basis(vectors, algebra.n)

    def characteristic_candidates(self, algebra: SuperAlgebra, trials: Optional[int] = None,
                                  seed: Optional[int] = None) -> List[Tuple[Scalar, ...]]:
        """
        Кандидаты x ∈ L₀ ∖ L₀².

        Базисные векторы вне L₀² и trials случайных целых комбинаций
        (коэффициенты от −3 до 3); комбинация, попавшая в L₀², сдвигается
        на первый базисный вектор вне L₀².
        """
        trials = self.trials if trials is None else trials
        seed = self.seed if seed is None else seed
        n = algebra.n
        square = self.even_square(algebra)

        def outside(vector) -> bool:
            return any(reduce_vector(square, vector))

        units = []
        for i in range(n):
            unit = tuple(Scalar.rational(1 if k == i else 0) for k in range(n))
            if outside(unit):
                units.append(unit)
        if not units:
            logger.error("L₀ = L₀²: чётная часть не нильпотентна")
            raise NotNilpotent("L₀ = [L₀, L₀], кандидатов x ∈ L₀ ∖ L₀² нет")
        candidates = list(units)
        rng = random.Random(seed)
        for _ in range(trials):
            vector = tuple(Scalar.rational(rng.randint(-3, 3)) for _ in range(n))
            if not outside(vector):
                vector = tuple(a + b for a, b in zip(vector, units[0]))
            candidates.append(vector)
        return candidates

    def characteristic_sequence(self, algebra: SuperAlgebra, trials: Optional[int] = None,
                                seed: Optional[int] = None) -> CharSeq:
        """
        Характеристическая последовательность (C₀ | C₁).

        Максимумы жордановых типов R_x на L₀ и на L₁ берутся независимо
        по всем кандидатам.

        Args:
            algebra: Супералгебра
            trials: Число случайных кандидатов
            seed: Зерно генератора

        Returns:
            CharSeq
        """
        if algebra.n == 0:
            raise CharacteristicUndefined("Характеристическая последовательность не определена при n = 0")
        basis_ops = self._basis_right_mult(algebra)
        even_ops = [op[0] for op in basis_ops]
        odd_ops = [op[1] for op in basis_ops]
        best_even = best_odd = None
        for vector in self.characteristic_candidates(algebra, trials, seed):
            c0 = jordan_partition(self._combine(even_ops, list(vector)))
            c1 = jordan_partition(self._combine(odd_ops, list(vector)))
            best_even = c0 if best_even is None or c0 > best_even else best_even
            best_odd = c1 if best_odd is None or c1 > best_odd else best_odd
        return CharSeq(best_even, best_odd)

    # --- естественная градуировка ---

    def natural_gradation(self, algebra: SuperAlgebra) -> NaturalGradation:
        """
        Естественная градуировка gr(A) = ⊕ A^i / A^{i+1} алгебры с m = 0.

        Представители A^i / A^{i+1}: строки ступенчатого базиса A^i,
        ведущие столбцы которых не ведущие у A^{i+1}.
        """
        if algebra.m != 0:
            raise DimensionMismatch("Естественная градуировка определена для чётной алгебры (m = 0)")
        series = self.central_series(algebra)
        if not series.is_nilpotent:
            logger.error("Градуировка запрошена для ненильпотентной алгебры")
            raise NotNilpotent(dims=series.terms[-1].dims)
        n = algebra.n
        representatives: List[Tuple[Scalar, ...]] = []
        degrees: List[int] = []
        for degree, (term, following) in enumerate(zip(series.terms, series.terms[1:]), start=1):
            excluded = set(pivot_columns(following.even_basis))
            for r in range(term.even_basis.rows):
                row = term.even_basis.row(r)
                lead = next(c for c, v in enumerate(row) if v)
                if lead not in excluded:
                    representatives.append(row)
                    degrees.append(degree)
        change = Matrix.from_rows([[rep[i] for rep in representatives] for i in range(n)], cols=n)
        inverse = change.inverse() if n else change
        table: Dict = {}
        for a, (u, du) in enumerate(zip(representatives, degrees), start=1):
            for b, (v, dv) in enumerate(zip(representatives, degrees), start=1):
                w = multiply(algebra, Element(u, ()), Element(v, ()))
                if w.is_zero():
                    continue
                coords = inverse.apply(w.even)
                projected = tuple(c if degrees[k] == du + dv else ZERO for k, c in enumerate(coords))
                if any(projected):
                    table[(x(a), x(b))] = projected
        return NaturalGradation(make_superalgebra(n, 0, table), tuple(degrees))

    # --- отпечаток ---

    def fingerprint(self, algebra: SuperAlgebra, trials: Optional[int] = None,
                    seed: Optional[int] = None) -> Fingerprint:
        """
        Отпечаток: размерности ряда, нильиндекс, характеристическая
        последовательность, R(L), признак Ли и образующие.

        Ненильпотентность записывается в поле nilindex, а не поднимается.
        """
        series = self.central_series(algebra)
        nilindex = series.nilindex if series.is_nilpotent else NOT_NILPOTENT
        series_dims = series.nonzero_dims() if series.is_nilpotent else series.dims[:-1]
        try:
            charseq = self.characteristic_sequence(algebra, trials, seed)
        except (CharacteristicUndefined, NotNilpotent) as e:
            logger.debug(f"Характеристическая последовательность не определена: {e}")
            charseq = None
        return Fingerprint(
            series_dims=tuple(series_dims),
            nilindex=nilindex,
            charseq=charseq,
            annihilator_dims=right_annihilator(algebra).dims,
            lie=is_lie(algebra),
            generator_dims=self.generator_dims(algebra, series),
        )

    def is_single_generated(self, algebra: SuperAlgebra) -> bool:
        return sum(self.generator_dims(algebra)) == 1


invariant_service = InvariantService()
