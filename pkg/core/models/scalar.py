"""
Точная арифметика в круговых полях Q(ζ_N).

Элемент хранится как вектор рациональных коэффициентов при 1, ζ, …, ζ^{φ(N)−1}
по модулю N-го кругового многочлена. Операнды разных порядков
вкладываются в Q(ζ_lcm) перед операцией.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, List, Tuple, Union

import sympy
from sympy.ntheory import divisors

from core.exceptions import ScalarDivisionByZero, ScalarError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, "Scalar"]


def _poly_exact_div(num: List[int], den: Tuple[int, ...]) -> List[int]:
    """Точное деление целочисленных многочленов (коэффициенты от младшего), den унитарный."""
    num = list(num)
    deg = len(den) - 1
    quotient = [0] * (len(num) - deg)
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i]
        if c:
            quotient[i - deg] = c
            for t in range(deg + 1):
                num[i - deg + t] -= c * den[t]
    if any(num[:deg]):
        raise ScalarError("Деление многочленов не нацело")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    Круговой многочлен Φ_n, коэффициенты от младшего к старшему.

    Считается делением x^n − 1 на Φ_d по всем собственным делителям d.

    Args:
        n: Порядок (n ≥ 1)

    Returns:
        Кортеж целых коэффициентов длины φ(n) + 1
    """
    if n < 1:
        raise ScalarError(f"Порядок кругового многочлена должен быть ≥ 1, получено {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(poly: List[Fraction], order: int) -> List[Fraction]:
    """Остаток от деления на Φ_order, дополненный нулями до длины φ(order)."""
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    poly = list(poly)
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for t in range(deg + 1):
                poly[i - deg + t] -= c * phi[t]
    poly = poly[:deg]
    if len(poly) < deg:
        poly.extend([Fraction(0)] * (deg - len(poly)))
    return poly


def _rational(c: Fraction) -> sympy.Rational:
    return sympy.Rational(c.numerator, c.denominator)


def _fraction(c: sympy.Rational) -> Fraction:
    return Fraction(int(c.p), int(c.q))


@dataclass(frozen=True, eq=False)
class Scalar:
    """
    Элемент кругового поля Q(ζ_N).

    Attributes:
        order: Порядок поля N
        coeffs: Коэффициенты при 1, ζ_N, …, ζ_N^{φ(N)−1}
    """
    order: int = 1
    coeffs: Tuple[Fraction, ...] = (Fraction(0),)

    def __post_init__(self):
        """Проверка длины вектора коэффициентов."""
        if self.order < 1:
            raise ScalarError(f"Порядок поля должен быть ≥ 1, получено {self.order}")
        if self.order == 1:
            if len(self.coeffs) != 1:
                raise ScalarError("Рациональный скаляр задаётся одним коэффициентом")
            object.__setattr__(self, "coeffs", (Fraction(self.coeffs[0]),))
            return
        if len(self.coeffs) != len(cyclotomic_polynomial(self.order)) - 1:
            raise ScalarError(f"Для Q(ζ_{self.order}) нужно φ(N) коэффициентов")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        # рациональное значение всегда хранится в Q(ζ_1)
        if not any(self.coeffs[1:]):
            object.__setattr__(self, "order", 1)
            object.__setattr__(self, "coeffs", (self.coeffs[0],))

    # --- конструирование ---

    @classmethod
    def _make(cls, order: int, coeffs: Iterable[Fraction]) -> "Scalar":
        return cls(order, tuple(coeffs))

    @classmethod
    def rational(cls, value: Union[int, Fraction, str]) -> "Scalar":
        """Рациональный скаляр."""
        return cls(1, (Fraction(value),))

    @classmethod
    def coerce(cls, value: Number) -> "Scalar":
        """Приведение int/Fraction/Scalar к Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(1, (Fraction(value),))
        raise ScalarError(f"Не удаётся привести {value!r} к скаляру")

    def embed(self, order: int) -> Tuple[Fraction, ...]:
        """Коэффициенты образа в Q(ζ_order); order должен делиться на self.order."""
        if order == self.order:
            return self.coeffs
        if order % self.order:
            raise ScalarError(f"Q(ζ_{self.order}) не вкладывается в Q(ζ_{order})")
        step = order // self.order
        poly = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return tuple(_reduce(poly, order))

    def _lift(self, other: "Scalar") -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        order = lcm(self.order, other.order)
        return order, self.embed(order), other.embed(order)

    # --- свойства ---

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0] == 0

    def to_fraction(self) -> Fraction:
        """Рациональное значение; ошибка для иррациональных элементов."""
        if self.order != 1:
            raise ScalarError(f"{self} не рационален")
        return self.coeffs[0]

    # --- арифметика ---

    def __add__(self, other: Number) -> "Scalar":
        other = Scalar.coerce(other)
        if self.order == 1 and other.order == 1:
            return Scalar(1, (self.coeffs[0] + other.coeffs[0],))
        order, a, b = self._lift(other)
        return Scalar._make(order, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Number) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other: Number) -> "Scalar":
        other = Scalar.coerce(other)
        if self.order == 1 and other.order == 1:
            return Scalar(1, (self.coeffs[0] * other.coeffs[0],))
        if other.order == 1:
            k = other.coeffs[0]
            return Scalar._make(self.order, (c * k for c in self.coeffs))
        if self.order == 1:
            return other * self
        order, a, b = self._lift(other)
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return Scalar._make(order, _reduce(product, order))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Обратный элемент; деление на ноль даёт ScalarDivisionByZero."""
        if self.is_zero():
            raise ScalarDivisionByZero()
        if self.order == 1:
            return Scalar(1, (1 / self.coeffs[0],))
        x = sympy.Symbol("x")
        value = sympy.Poly([_rational(c) for c in reversed(self.coeffs)], x, domain="QQ")
        modulus = sympy.Poly(list(reversed(cyclotomic_polynomial(self.order))), x, domain="QQ")
        inverse = value.invert(modulus)
        coeffs = [_fraction(c) for c in reversed(inverse.all_coeffs())]
        return Scalar._make(self.order, _reduce(coeffs, self.order))

    def __truediv__(self, other: Number) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # --- сравнение ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return self.coeffs[0] == other.coeffs[0]
        if self.order == 1 or other.order == 1:
            return False
        _, a, b = self._lift(other)
        return a == b

    @cached_property
    def canonical(self) -> Tuple[int, Tuple[Fraction, ...]]:
        """
        Наименьшее поле Q(ζ_d), d | order, содержащее элемент, и координаты в нём.

        Равные скаляры разных порядков дают одну и ту же пару.
        """
        if self.order == 1:
            return 1, self.coeffs
        target = sympy.Matrix([_rational(c) for c in self.coeffs])
        for d in divisors(self.order):
            # Q(ζ_d) = Q(ζ_{d/2}) при d ≡ 2 (mod 4)
            if d == 1 or d == self.order or d % 4 == 2:
                continue
            step = self.order // d
            width = len(cyclotomic_polynomial(d)) - 1
            columns = []
            for i in range(width):
                poly = [Fraction(0)] * (i * step + 1)
                poly[i * step] = Fraction(1)
                columns.append(_reduce(poly, self.order))
            system = sympy.Matrix(len(self.coeffs), width, lambda r, c: _rational(columns[c][r]))
            try:
                solution, _ = system.gauss_jordan_solve(target)
            except ValueError:
                continue
            return d, tuple(_fraction(v) for v in solution)
        return self.order, self.coeffs

    def __hash__(self) -> int:
        if self.order == 1:
            return hash(self.coeffs[0])
        return hash(self.canonical)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # --- запись ---

    def __str__(self) -> str:
        if self.order == 1:
            return str(self.coeffs[0])
        parts: List[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term, sign = str(abs(c)), c < 0
            else:
                atom = f"z({self.order})^{k}"
                if abs(c) == 1:
                    term = atom
                else:
                    term = f"{abs(c)}*{atom}"
                sign = c < 0
            if not parts:
                parts.append(f"-{term}" if sign else term)
            else:
                parts.append(f"- {term}" if sign else f"+ {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(1, (Fraction(0),))
ONE = Scalar(1, (Fraction(1),))


def root_of_unity(t: int, m: int) -> Scalar:
    """
    Корень из единицы S_{m,t} = ζ_t^m.

    Args:
        t: Порядок корня (t ≥ 1)
        m: Показатель (берётся по модулю t)

    Returns:
        Элемент Q(ζ_t)
    """
    if t < 1:
        raise ScalarError(f"Порядок корня из единицы должен быть ≥ 1, получено {t}")
    m %= t
    poly = [Fraction(0)] * (m + 1)
    poly[m] = Fraction(1)
    return Scalar._make(t, _reduce(poly, t))


def jth_root_of_sign(delta: int, j: int, exponent: int = None) -> Scalar:
    """
    Множитель δ·ʲ√(δ^exponent) операторов нормальной формы.

    Корень фиксирован: 1, если δ^exponent = 1, иначе главный корень ζ_{2j}.

    Args:
        delta: Знак ±1
        j: Степень корня (j ≥ 1)
        exponent: Показатель подкоренного выражения (по умолчанию j + 1)

    Returns:
        δ · r
    """
    if delta not in (1, -1):
        raise ScalarError(f"δ должно быть ±1, получено {delta}")
    if j < 1:
        raise ScalarError(f"Степень корня должна быть ≥ 1, получено {j}")
    if exponent is None:
        exponent = j + 1
    radicand = delta ** (exponent % 2)
    root = ONE if radicand == 1 else root_of_unity(2 * j, 1)
    return root * delta
