"""
Семейства E ∈ Leib_{n,n+1} и F ∈ Leib_{n,n+2}.

Характеристическая последовательность (n|m−1,1), нильиндекс n+m.
"""
from fractions import Fraction
from typing import List

from config.family_catalog import FamilyTag, e_first_beta, f_first_beta
from core.families.base_family import BaseFamily, BracketTable
from core.families.leib_n_n_minus_1 import indexed
from core.models.scalar import Scalar
from core.models.superalgebra import x, y

HALF = Fraction(1, 2)


def fill_chain(table: BracketTable, n: int, y_to: int, half_to: int):
    """[x_i,x₁] = x_{i+1}, [y_j,x₁] = y_{j+1} (j ≤ y_to), [x_i,y₁] = ½y_{i+1} (i ≤ half_to), [y_j,y₁] = x_j."""
    for i in range(1, n):
        table.set(x(i), x(1), [(1, x(i + 1))])
    for j in range(1, y_to + 1):
        table.set(y(j), x(1), [(1, y(j + 1))])
    for i in range(1, half_to + 1):
        table.set(x(i), y(1), [(HALF, y(i + 1))])
    for j in range(1, n + 1):
        table.set(y(j), y(1), [(1, x(j))])


class FamilyE(BaseFamily):
    """
    E(γ, β_p, …, β_n, β) ∈ Leib_{n,n+1}, p = ⌊(n+4)/2⌋.

    Один набор скобок для обеих меток; E_ODD и E_EVEN различаются
    только допустимой чётностью n.
    """

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        p = e_first_beta(n)
        gamma, last = params[0], params[-1]
        beta = indexed(params[1:-1], p, n)
        tail = n + 1
        fill_chain(table, n, y_to=n - 1, half_to=n - 1)
        table.set(y(tail), y(tail), [(gamma, x(n))])
        for i in range(1, (n - 1) // 2 + 1):
            table.set(x(i), y(tail), [(beta[k], y(k - 1 + i)) for k in range(p, n + 2 - i)])
        table.set(y(1), y(tail), [(-2 * beta[k], x(k - 1)) for k in range(p, n + 1)] + [(last, x(n))])
        for j in range(2, (n + 1) // 2 + 1):
            table.set(y(j), y(tail), [(-2 * beta[k], x(k - 2 + j)) for k in range(p, n + 3 - j)])


class FamilyF(BaseFamily):
    """F(β_p, …, β_{n+1}) ∈ Leib_{n,n+2}, p = ⌊(n+5)/2⌋."""

    def __init__(self):
        super().__init__(FamilyTag.F)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        p = f_first_beta(n)
        beta = indexed(params, p, n + 1)
        tail = n + 2
        fill_chain(table, n, y_to=n, half_to=n)
        for i in range(1, n // 2 + 1):
            table.set(x(i), y(tail), [(beta[k], y(k - 1 + i)) for k in range(p, n + 3 - i)])
        for j in range(1, n // 2 + 1):
            table.set(y(j), y(tail), [(-2 * beta[k], x(k - 2 + j)) for k in range(p, n + 3 - j)])


family_e_odd = FamilyE(FamilyTag.E_ODD)
family_e_even = FamilyE(FamilyTag.E_EVEN)
family_f = FamilyF()
