"""
Однопорождённые супералгебры максимального нильиндекса n+m+1.
"""
from typing import List

from config.family_catalog import FamilyTag
from core.families.base_family import BaseFamily, BracketTable
from core.models.scalar import Scalar
from core.models.superalgebra import Basis, SuperAlgebra, x, y


class NullFiliform(BaseFamily):
    """Нуль-филиформная алгебра Лейбница [x_i, x_1] = x_{i+1}."""

    def __init__(self):
        super().__init__(FamilyTag.NULL_FILIFORM)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        for i in range(1, n):
            table.set(x(i), x(1), [(1, x(i + 1))])


class Thm21Mixed(BaseFamily):
    """
    Однопорождённая супералгебра с нечётной образующей.

    Базис e₁…e_{n+m}: e_i с нечётным i есть y_{(i+1)/2}, с чётным i есть x_{i/2}.
    [e_i, e₁] = e_{i+1}, [e_i, e₂] = 2e_{i+2}.
    """

    def __init__(self):
        super().__init__(FamilyTag.THM21_MIXED)

    @staticmethod
    def e(i: int) -> Basis:
        return y((i + 1) // 2) if i % 2 else x(i // 2)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        total = n + m
        for i in range(1, total):
            terms = [(1, self.e(i + 1))]
            table.set(self.e(i), self.e(1), terms)
        for i in range(1, total - 1):
            table.set(self.e(i), self.e(2), [(2, self.e(i + 2))])


null_filiform_family = NullFiliform()
thm21_mixed_family = Thm21Mixed()


def null_filiform(n: int) -> SuperAlgebra:
    return null_filiform_family.build(n, 0)


def thm21_mixed(n: int, m: int) -> SuperAlgebra:
    return thm21_mixed_family.build(n, m)
