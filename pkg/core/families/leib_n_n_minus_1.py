"""
Семейства L и G из Leib_{n,n−1}.

Характеристическая последовательность (n−1,1|m), нильиндекс n+m.
"""
from fractions import Fraction
from typing import Dict, List

from config.family_catalog import FamilyTag
from core.families.base_family import BaseFamily, BracketTable
from core.models.scalar import Scalar
from core.models.superalgebra import x, y

HALF = Fraction(1, 2)


def fill_core(table: BracketTable, n: int, x_from: int, y_to: int, half_from: int, half_to: int):
    """
    Общая часть семейств L, G, M, H.

    [x₁,x₁] = x₃, [x_i,x₁] = x_{i+1} (x_from ≤ i ≤ n−1), [y_j,x₁] = y_{j+1} (j ≤ y_to),
    [x₁,y₁] = ½y₂, [x_i,y₁] = ½y_i (half_from ≤ i ≤ half_to),
    [y₁,y₁] = x₁, [y_j,y₁] = x_{j+1} (2 ≤ j ≤ n−1).
    """
    table.set(x(1), x(1), [(1, x(3))])
    for i in range(x_from, n):
        table.set(x(i), x(1), [(1, x(i + 1))])
    for j in range(1, y_to + 1):
        table.set(y(j), x(1), [(1, y(j + 1))])
    table.set(x(1), y(1), [(HALF, y(2))])
    for i in range(half_from, half_to + 1):
        table.set(x(i), y(1), [(HALF, y(i))])
    table.set(y(1), y(1), [(1, x(1))])
    for j in range(2, n):
        table.set(y(j), y(1), [(1, x(j + 1))])


def indexed(params: List[Scalar], first: int, last: int) -> Dict[int, Scalar]:
    """Словарь {k: параметр_k} для k = first…last."""
    return {k: params[k - first] for k in range(first, last + 1)}


class FamilyL(BaseFamily):
    """L(α₄, …, α_n, θ) ∈ Leib_{n,n−1}."""

    def __init__(self):
        super().__init__(FamilyTag.L)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        alpha = indexed(params, 4, n)
        theta = params[-1]
        fill_core(table, n, x_from=2, y_to=n - 2, half_from=2, half_to=n - 1)
        table.set(x(1), x(2), [(alpha[k], x(k)) for k in range(4, n)] + [(theta, x(n))])
        for j in range(2, n - 1):
            table.set(x(j), x(2), [(alpha[k], x(j + k - 2)) for k in range(4, n + 3 - j)])
        table.set(y(1), x(2), [(alpha[k], y(k - 1)) for k in range(4, n)] + [(theta, y(n - 1))])
        for j in range(2, n - 2):
            table.set(y(j), x(2), [(alpha[k], y(j + k - 2)) for k in range(4, n + 2 - j)])


class FamilyG(BaseFamily):
    """G(β₄, …, β_n, γ) ∈ Leib_{n,n−1}."""

    def __init__(self):
        super().__init__(FamilyTag.G)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        beta = indexed(params, 4, n)
        gamma = params[-1]
        fill_core(table, n, x_from=3, y_to=n - 2, half_from=3, half_to=n - 1)
        table.set(x(1), x(2), [(beta[k], x(k)) for k in range(4, n + 1)])
        table.set(x(2), x(2), [(gamma, x(n))])
        for j in range(3, n - 1):
            table.set(x(j), x(2), [(beta[k], x(j + k - 2)) for k in range(4, n + 3 - j)])
        for j in range(1, n - 2):
            table.set(y(j), x(2), [(beta[k], y(j + k - 2)) for k in range(4, n + 2 - j)])


family_l = FamilyL()
family_g = FamilyG()
