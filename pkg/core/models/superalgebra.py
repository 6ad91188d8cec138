"""
Модель супералгебры Лейбница, заданной структурными константами.

Базис L = L₀ ⊕ L₁ записывается парами (чётность, индекс): x_i = (0, i),
y_j = (1, j), индексы с единицы. Таблица хранит только компоненту
произведения нужной чётности; отсутствующие скобки равны нулю.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from core.exceptions import DimensionMismatch, GradingViolation
from core.models.matrix import GradedSubspace, Matrix, null_space
from core.models.scalar import ONE, ZERO, Number, Scalar

logger = logging.getLogger(__name__)

Basis = Tuple[int, int]
Pair = Tuple[Basis, Basis]
Triple = Tuple[Basis, Basis, Basis]

EVEN = 0
ODD = 1


def x(i: int) -> Basis:
    """Чётный базисный вектор x_i."""
    return (EVEN, i)


def y(j: int) -> Basis:
    """Нечётный базисный вектор y_j."""
    return (ODD, j)


def basis_name(b: Basis) -> str:
    return f"{'x' if b[0] == EVEN else 'y'}{b[1]}"


def pair_name(pair: Sequence[Basis]) -> str:
    return "[" + ", ".join(basis_name(b) for b in pair) + "]"


def sign(alpha: int, beta: int) -> int:
    """(−1)^{αβ}."""
    return -1 if alpha and beta else 1


def canonical_key(pair: Pair) -> Tuple[int, int, int, int]:
    """Порядок скобок: чётно-чётные, чётно-нечётные, нечётно-чётные, нечётно-нечётные."""
    a, b = pair
    return (a[0], b[0], a[1], b[1])


def format_coefficient(value: Scalar) -> str:
    """Скаляр как атом: многочленные значения берутся в скобки."""
    text = str(value)
    if value.is_rational or not any(ch in text for ch in " -"):
        return text
    return f"({text})"


def format_terms(terms: Iterable[Tuple[Scalar, str]]) -> str:
    """Линейная комбинация токенов: «x2 - 1/2*y3 + (1 + z(4)^1)*y1»."""
    parts: List[str] = []
    for coef, token in terms:
        if coef.is_zero():
            continue
        negative = coef.is_rational and coef.to_fraction() < 0
        magnitude = -coef if negative else coef
        body = token if magnitude == ONE else f"{format_coefficient(magnitude)}*{token}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Element:
    """
    Элемент L₀ ⊕ L₁ в координатах базиса.

    Attributes:
        even: Координаты при x₁…x_n
        odd: Координаты при y₁…y_m
    """
    even: Tuple[Scalar, ...]
    odd: Tuple[Scalar, ...]

    @classmethod
    def zero(cls, n: int, m: int) -> "Element":
        return cls((ZERO,) * n, (ZERO,) * m)

    @classmethod
    def basis(cls, n: int, m: int, b: Basis) -> "Element":
        parity, index = b
        size = n if parity == EVEN else m
        unit = tuple(ONE if k == index - 1 else ZERO for k in range(size))
        if parity == EVEN:
            return cls(unit, (ZERO,) * m)
        return cls((ZERO,) * n, unit)

    @classmethod
    def from_terms(cls, n: int, m: int, terms: Mapping[Basis, Number]) -> "Element":
        even = [ZERO] * n
        odd = [ZERO] * m
        for (parity, index), coef in terms.items():
            target = even if parity == EVEN else odd
            if not 1 <= index <= len(target):
                raise GradingViolation(f"Индекс {basis_name((parity, index))} вне базиса ({n}|{m})")
            target[index - 1] = target[index - 1] + Scalar.coerce(coef)
        return cls(tuple(even), tuple(odd))

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.even), len(self.odd)

    def is_zero(self) -> bool:
        return not any(self.even) and not any(self.odd)

    @property
    def parity(self) -> Optional[int]:
        """Чётность однородного элемента; None для нуля и неоднородных."""
        has_even, has_odd = any(self.even), any(self.odd)
        if has_even and not has_odd:
            return EVEN
        if has_odd and not has_even:
            return ODD
        return None

    def terms(self) -> Iterable[Tuple[Basis, Scalar]]:
        for i, c in enumerate(self.even, start=1):
            if c:
                yield x(i), c
        for j, c in enumerate(self.odd, start=1):
            if c:
                yield y(j), c

    def _check(self, other: "Element"):
        if self.dims != other.dims:
            raise DimensionMismatch(f"Элементы разных пространств: {self.dims} и {other.dims}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.even, other.even)),
                       tuple(a + b for a, b in zip(self.odd, other.odd)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.even), tuple(-a for a in self.odd))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, coef: Number) -> "Element":
        coef = Scalar.coerce(coef)
        if coef == ONE:
            return self
        return Element(tuple(coef * a for a in self.even), tuple(coef * a for a in self.odd))

    def __rmul__(self, coef: Number) -> "Element":
        return self.scale(coef)

    def __str__(self) -> str:
        return format_terms((c, basis_name(b)) for b, c in self.terms())


RawValue = Union[Element, Mapping[Basis, Number], Sequence[Number]]


@dataclass(frozen=True)
class SuperAlgebra:
    """
    Z₂-градуированная таблица умножения.

    Attributes:
        n: Размерность чётной части
        m: Размерность нечётной части
        table: Скобка пары базисных векторов → координаты в компоненте чётности α⊕β
    """
    n: int
    m: int
    table: Dict[Pair, Tuple[Scalar, ...]] = field(default_factory=dict)

    def __post_init__(self):
        """Проверка индексов и длины векторов произведений."""
        if self.n < 0 or self.m < 0:
            raise DimensionMismatch(f"Размерности должны быть неотрицательны: ({self.n}|{self.m})")
        for pair, vector in self.table.items():
            a, b = pair
            for basis in pair:
                if not self.contains_basis(basis):
                    raise GradingViolation(f"Базисный вектор {basis_name(basis)} вне ({self.n}|{self.m})",
                                           pair=pair)
            size = self.n if (a[0] ^ b[0]) == EVEN else self.m
            if len(vector) != size:
                raise GradingViolation(f"Скобка {pair_name(pair)} должна лежать в компоненте размерности {size}",
                                       pair=pair)

    def contains_basis(self, b: Basis) -> bool:
        parity, index = b
        return parity in (EVEN, ODD) and 1 <= index <= (self.n if parity == EVEN else self.m)

    @property
    def dims(self) -> Tuple[int, int]:
        return self.n, self.m

    @property
    def dim(self) -> int:
        return self.n + self.m

    @cached_property
    def basis(self) -> Tuple[Basis, ...]:
        return tuple(x(i) for i in range(1, self.n + 1)) + tuple(y(j) for j in range(1, self.m + 1))

    @cached_property
    def products(self) -> Dict[Pair, Element]:
        """Ненулевые скобки базисных векторов как элементы."""
        result = {}
        for (a, b), vector in self.table.items():
            if (a[0] ^ b[0]) == EVEN:
                result[(a, b)] = Element(tuple(vector), (ZERO,) * self.m)
            else:
                result[(a, b)] = Element((ZERO,) * self.n, tuple(vector))
        return result

    def key(self) -> Tuple:
        """Каноническое представление таблицы для сравнения и хеширования."""
        return (self.n, self.m, tuple((pair, self.table[pair]) for pair in sorted(self.table, key=canonical_key)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def zero_element(self) -> Element:
        return Element.zero(self.n, self.m)

    def element(self, b: Basis) -> Element:
        return Element.basis(self.n, self.m, b)

    def bracket(self, a: Basis, b: Basis) -> Element:
        return self.products.get((a, b)) or self.zero_element()

    def sorted_products(self) -> List[Tuple[Pair, Element]]:
        return [(pair, self.products[pair]) for pair in sorted(self.products, key=canonical_key)]


def _coerce_value(n: int, m: int, pair: Pair, value: RawValue, line: Optional[int] = None) -> Tuple[Scalar, ...]:
    """Приведение значения скобки к вектору компоненты чётности α⊕β."""
    a, b = pair
    target = a[0] ^ b[0]
    size = n if target == EVEN else m
    if isinstance(value, Mapping):
        try:
            value = Element.from_terms(n, m, value)
        except GradingViolation as e:
            raise GradingViolation(str(e), pair=pair, line=line) from e
    if isinstance(value, Element):
        if value.dims != (n, m):
            raise GradingViolation(f"Значение {pair_name(pair)} в чужом пространстве", pair=pair, line=line)
        wrong = value.odd if target == EVEN else value.even
        if any(wrong):
            raise GradingViolation(
                f"{pair_name(pair)} = {value}: произведение векторов чётностей {a[0]} и {b[0]} "
                f"должно быть {'чётным' if target == EVEN else 'нечётным'}",
                pair=pair, line=line,
            )
        return value.even if target == EVEN else value.odd
    vector = tuple(Scalar.coerce(c) for c in value)
    if len(vector) != size:
        raise GradingViolation(f"Вектор {pair_name(pair)} должен иметь длину {size}", pair=pair, line=line)
    return vector


def make_superalgebra(n: int, m: int, table: Mapping[Pair, RawValue],
                      lines: Optional[Mapping[Pair, int]] = None) -> SuperAlgebra:
    """
    Проверенная супералгебра из таблицы скобок.

    Значение скобки можно задать элементом, словарём {базис: коэффициент}
    или вектором компоненты нужной чётности. Нулевые скобки отбрасываются.

    Args:
        n: Размерность чётной части
        m: Размерность нечётной части
        table: Скобки базисных пар
        lines: Номера строк источника для сообщений об ошибках

    Returns:
        SuperAlgebra
    """
    lines = lines or {}
    normalized: Dict[Pair, Tuple[Scalar, ...]] = {}
    for pair, value in table.items():
        line = lines.get(pair)
        for b in pair:
            parity, index = b
            bound = n if parity == EVEN else m
            if parity not in (EVEN, ODD) or not 1 <= index <= bound:
                raise GradingViolation(f"Базисный вектор {basis_name(b)} вне ({n}|{m})", pair=pair, line=line)
        vector = _coerce_value(n, m, pair, value, line)
        if any(vector):
            normalized[pair] = vector
    return SuperAlgebra(n, m, normalized)


def multiply(algebra: SuperAlgebra, a: Element, b: Element) -> Element:
    """Билинейное продолжение таблицы на элементы."""
    result_even = [ZERO] * algebra.n
    result_odd = [ZERO] * algebra.m
    left = list(a.terms())
    right = list(b.terms())
    for ba, ca in left:
        for bb, cb in right:
            product = algebra.products.get((ba, bb))
            if product is None:
                continue
            coef = ca * cb
            for i, v in enumerate(product.even):
                if v:
                    result_even[i] = result_even[i] + coef * v
            for j, v in enumerate(product.odd):
                if v:
                    result_odd[j] = result_odd[j] + coef * v
    return Element(tuple(result_even), tuple(result_odd))


def superidentity_residual(algebra: SuperAlgebra, triple: Triple) -> Element:
    """[x,[y,z]] − [[x,y],z] + (−1)^{|y||z|}[[x,z],y] на базисной тройке."""
    bx, by, bz = (algebra.element(b) for b in triple)
    lhs = multiply(algebra, bx, algebra.bracket(triple[1], triple[2]))
    first = multiply(algebra, algebra.bracket(triple[0], triple[1]), bz)
    second = multiply(algebra, algebra.bracket(triple[0], triple[2]), by)
    return lhs - first + second.scale(sign(triple[1][0], triple[2][0]))


def superidentity_violations(algebra: SuperAlgebra) -> List[Tuple[Triple, Element]]:
    """
    Все базисные тройки с ненулевым остатком супертождества Лейбница.

    Пустой список ⟺ алгебра является супералгеброй Лейбница.
    """
    violations = []
    for a in algebra.basis:
        for b in algebra.basis:
            for c in algebra.basis:
                residual = superidentity_residual(algebra, (a, b, c))
                if not residual.is_zero():
                    violations.append(((a, b, c), residual))
    if violations:
        logger.debug(f"Супертождество нарушено на {len(violations)} тройках")
    return violations


def graded_jacobi_violations(algebra: SuperAlgebra) -> List[Tuple[Triple, Element]]:
    """
    Базисные тройки с ненулевым остатком градуированного тождества Якоби.

    (−1)^{αγ}[x,[y,z]] + (−1)^{βα}[y,[z,x]] + (−1)^{γβ}[z,[x,y]]
    """
    violations = []
    for a in algebra.basis:
        for b in algebra.basis:
            for c in algebra.basis:
                ea, eb, ec = (algebra.element(t) for t in (a, b, c))
                residual = (
                    multiply(algebra, ea, algebra.bracket(b, c)).scale(sign(a[0], c[0]))
                    + multiply(algebra, eb, algebra.bracket(c, a)).scale(sign(b[0], a[0]))
                    + multiply(algebra, ec, algebra.bracket(a, b)).scale(sign(c[0], b[0]))
                )
                if not residual.is_zero():
                    violations.append(((a, b, c), residual))
    return violations


def is_lie(algebra: SuperAlgebra) -> bool:
    """Градуированная антисимметричность [a,b] = −(−1)^{αβ}[b,a] на базисе."""
    for a in algebra.basis:
        for b in algebra.basis:
            total = algebra.bracket(a, b) + algebra.bracket(b, a).scale(sign(a[0], b[0]))
            if not total.is_zero():
                return False
    return True


def _annihilator_part(algebra: SuperAlgebra, parity: int) -> Matrix:
    """Решения [b, z] = 0 по всем базисным b для z чётности parity."""
    size = algebra.n if parity == EVEN else algebra.m
    rows: List[List[Scalar]] = []
    for b in algebra.basis:
        images = [algebra.bracket(b, (parity, k + 1)) for k in range(size)]
        target = b[0] ^ parity
        width = algebra.n if target == EVEN else algebra.m
        for t in range(width):
            rows.append([(img.even if target == EVEN else img.odd)[t] for img in images])
    if not rows:
        return Matrix.identity(size)
    return null_space(Matrix.from_rows(rows, cols=size))


def right_annihilator(algebra: SuperAlgebra) -> GradedSubspace:
    """
    Правый аннулятор R(L) = {z : [L, z] = 0}.

    Returns:
        Градуированное подпространство в ступенчатом виде
    """
    return GradedSubspace(_annihilator_part(algebra, EVEN), _annihilator_part(algebra, ODD))


def element_in(subspace: GradedSubspace, element: Element) -> bool:
    return subspace.contains_vector(element.even, element.odd)


def subspace_elements(algebra: SuperAlgebra, subspace: GradedSubspace) -> List[Element]:
    """Базис подпространства как однородные элементы."""
    zero_odd = (ZERO,) * algebra.m
    zero_even = (ZERO,) * algebra.n
    return ([Element(row, zero_odd) for row in (subspace.even_basis.row(i) for i in range(subspace.even_basis.rows))]
            + [Element(zero_even, row) for row in (subspace.odd_basis.row(i) for i in range(subspace.odd_basis.rows))])


def change_basis(algebra: SuperAlgebra, p_even: Matrix, p_odd: Matrix) -> SuperAlgebra:
    """
    Перенос таблицы в новый базис.

    Столбцы P: новые базисные векторы в старых координатах.

    Args:
        algebra: Исходная супералгебра
        p_even: Обратимая n×n матрица
        p_odd: Обратимая m×m матрица

    Returns:
        Изоморфная супералгебра
    """
    if (p_even.rows, p_even.cols) != (algebra.n, algebra.n) or (p_odd.rows, p_odd.cols) != (algebra.m, algebra.m):
        raise DimensionMismatch(f"Матрицы замены не соответствуют размерностям ({algebra.n}|{algebra.m})")
    inv_even = p_even.inverse() if algebra.n else p_even
    inv_odd = p_odd.inverse() if algebra.m else p_odd
    new_basis: Dict[Basis, Element] = {}
    for i in range(algebra.n):
        new_basis[x(i + 1)] = Element(tuple(p_even[k, i] for k in range(algebra.n)), (ZERO,) * algebra.m)
    for j in range(algebra.m):
        new_basis[y(j + 1)] = Element((ZERO,) * algebra.n, tuple(p_odd[k, j] for k in range(algebra.m)))
    table: Dict[Pair, Element] = {}
    for a in algebra.basis:
        for b in algebra.basis:
            product = multiply(algebra, new_basis[a], new_basis[b])
            if product.is_zero():
                continue
            even = inv_even.apply(product.even) if algebra.n else ()
            odd = inv_odd.apply(product.odd) if algebra.m else ()
            table[(a, b)] = Element(even, odd)
    return make_superalgebra(algebra.n, algebra.m, table)


def even_part(algebra: SuperAlgebra) -> SuperAlgebra:
    """Чётная подалгебра L₀ как алгебра размерностей (n|0)."""
    table = {pair: vector for pair, vector in algebra.table.items() if pair[0][0] == EVEN and pair[1][0] == EVEN}
    return SuperAlgebra(algebra.n, 0, table)
