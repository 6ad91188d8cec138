"""
Семейства M и H из Leib_{n,n}.

Характеристическая последовательность (n−1,1|m), нильиндекс n+m.
"""
from typing import List

from config.family_catalog import FamilyTag
from core.exceptions import TranscriptionError
from core.families.base_family import BaseFamily, BracketTable
from core.families.leib_n_n_minus_1 import fill_core, indexed
from core.models.scalar import Scalar
from core.models.superalgebra import x, y


class FamilyM(BaseFamily):
    """
    M(α₄, …, α_n, θ, τ) ∈ Leib_{n,n}.

    Супертождество на (x₂,x₂,y₁) и (x₂,x₁,x₂) задаёт
    [x₂,x₂] = α₄x₄ + … + α_{n−1}x_{n−1} + θx_n, то есть [x₁,x₂].
    Необязательный γ₄ допускается только нулевым.
    """

    def __init__(self):
        super().__init__(FamilyTag.M)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        base = self.spec.arity(n)
        if len(params) > base and not params[base].is_zero():
            self.logger.error(f"M: γ₄ = {params[base]} ≠ 0")
            raise TranscriptionError("M: [x2,x2] = γ₄x₄ с γ₄ ≠ 0 нарушает супертождество на (x2, x2, y1)")
        alpha = indexed(params, 4, n)
        theta, tau = params[n - 3], params[n - 2]
        fill_core(table, n, x_from=2, y_to=n - 1, half_from=2, half_to=n)
        square = [(alpha[k], x(k)) for k in range(4, n)] + [(theta, x(n))]
        table.set(x(1), x(2), square)
        table.set(x(2), x(2), square)
        for j in range(3, n - 1):
            table.set(x(j), x(2), [(alpha[k], x(j + k - 2)) for k in range(4, n + 3 - j)])
        table.set(y(1), x(2), [(alpha[k], y(k - 1)) for k in range(4, n)] + [(theta, y(n - 1)), (tau, y(n))])
        table.set(y(2), x(2), [(alpha[k], y(k)) for k in range(4, n)] + [(theta, y(n))])
        for j in range(3, n - 1):
            table.set(y(j), x(2), [(alpha[k], y(j + k - 2)) for k in range(4, n + 3 - j)])


class FamilyH(BaseFamily):
    """
    H(β₄, …, β_n, δ, γ) ∈ Leib_{n,n}.

    Цепочка [y_j,x₁] = y_{j+1} идёт до j = n−1, [x_i,y₁] = ½y_i до i = n.
    При этих диапазонах коэффициент γ при x_n в [x₂,x₂] обязан быть нулём.
    """

    def __init__(self):
        super().__init__(FamilyTag.H)

    def fill(self, table: BracketTable, n: int, m: int, params: List[Scalar]) -> None:
        beta = indexed(params, 4, n)
        delta, gamma = params[n - 3], params[n - 2]
        if not gamma.is_zero():
            self.logger.error(f"H: γ = {gamma} ≠ 0")
            raise TranscriptionError("H: [x2,x2] = γx_n с γ ≠ 0 нарушает супертождество на (x2, x2, y1)")
        fill_core(table, n, x_from=3, y_to=n - 1, half_from=3, half_to=n)
        table.set(x(1), x(2), [(beta[k], x(k)) for k in range(4, n + 1)])
        for j in range(3, n - 1):
            table.set(x(j), x(2), [(beta[k], x(j + k - 2)) for k in range(4, n + 3 - j)])
        table.set(y(1), x(2), [(beta[k], y(k - 1)) for k in range(4, n + 1)] + [(delta, y(n))])
        for j in range(2, n - 1):
            table.set(y(j), x(2), [(beta[k], y(j + k - 2)) for k in range(4, n + 3 - j)])


family_m = FamilyM()
family_h = FamilyH()
