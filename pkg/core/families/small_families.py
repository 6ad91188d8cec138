"""
Семейства малых размерностей: Leib_{1,m}, Leib_{n,1}, Leib_{2,2}, Leib_{2,m}.
"""
from fractions import Fraction
from typing import List

from config.family_catalog import FamilyTag
from core.families.base_family import BaseFamily, BracketTable
from core.models.scalar import Scalar
from core.models.superalgebra import x, y


class Leib1M(BaseFamily):
    """Leib_{1,m}: [y_i, x_1] = y_{i+1}."""

    def __init__(self):
        super().__init__(FamilyTag.LEIB_1M)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        for i in range(1, m):
            table.set(y(i), x(1), [(1, y(i + 1))])


class LeibN1(BaseFamily):
    """Leib_{n,1}(α): [x_i, x_1] = x_{i+1}, [y_1, y_1] = αx_n."""

    def __init__(self):
        super().__init__(FamilyTag.LEIB_N1)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        alpha, = params
        for i in range(1, n):
            table.set(x(i), x(1), [(1, x(i + 1))])
        table.set(y(1), y(1), [(alpha, x(n))])


class Leib22(BaseFamily):
    """Две супералгебры Leib_{2,2}; вариант A дополнительно содержит [x1,y1] = ½y2."""

    def __init__(self, tag: FamilyTag):
        super().__init__(tag)
        self.with_half = tag == FamilyTag.LEIB_22_A

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        table.set(y(1), x(1), [(1, y(2))])
        if self.with_half:
            table.set(x(1), y(1), [(Fraction(1, 2), y(2))])
        table.set(x(2), y(1), [(1, y(2))])
        table.set(y(1), x(2), [(2, y(2))])
        table.set(y(1), y(1), [(1, x(2))])


class Leib2MA(BaseFamily):
    """
    Leib_{2,m}, m нечётно ≥ 3, первая таблица.

    [y_i, y_{m+1−i}] = (−1)^{i+1}x₂ ставится для всех 1 ≤ i ≤ m:
    половина диапазона нарушает супертождество на (y₂, y₁, x₁).
    """

    def __init__(self):
        super().__init__(FamilyTag.LEIB_2M_A)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        table.set(x(1), x(1), [(1, x(2))])
        for i in range(1, m):
            table.set(y(i), x(1), [(1, y(i + 1))])
            table.set(x(1), y(i), [(-1, y(i + 1))])
        for i in range(1, m + 1):
            table.set(y(i), y(m + 1 - i), [((-1) ** (i + 1), x(2))])


class Leib2MB(BaseFamily):
    """
    Leib_{2,m}, m нечётно, вторая таблица.

    Для нечётного y супертождество даёт [x₁, y] = −[y, x₁],
    поэтому [y_i, x₁] = −y_{i+1} и [x₁, y_i] = y_{i+1}.
    """

    def __init__(self):
        super().__init__(FamilyTag.LEIB_2M_B)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        for i in range(1, m):
            table.set(y(i), x(1), [(-1, y(i + 1))])
            table.set(x(1), y(i), [(1, y(i + 1))])
        for i in range(1, m + 1):
            table.set(y(m + 1 - i), y(i), [((-1) ** (i + 1), x(2))])


leib_1m = Leib1M()
leib_n1 = LeibN1()
leib_22_a = Leib22(FamilyTag.LEIB_22_A)
leib_22_b = Leib22(FamilyTag.LEIB_22_B)
leib_2m_a = Leib2MA()
leib_2m_b = Leib2MB()
