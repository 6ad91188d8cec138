"""
Операторы нормализации параметров V⁰, V¹, V² и W.

Векторы индексируются с единицы, как в записи семейств:
позиция j получает 1, хвост домножается на корни из единицы S_{m,t}.
"""
import logging
from typing import List, Sequence, Tuple

from core.exceptions import FamilyError, ShapeError
from core.models.scalar import ONE, ZERO, Number, Scalar, jth_root_of_sign, root_of_unity

logger = logging.getLogger(__name__)

ParamVector = Tuple[Scalar, ...]


def s_power(m: int, t: int, exponent: int) -> Scalar:
    """S_{m,t}^exponent = ζ_t^{m·exponent}."""
    return root_of_unity(t, m * exponent)


def op_v(kind: int, j: int, k: int, vector: Sequence[Number], m: int = 0, delta: int = 1) -> ParamVector:
    """
    Операторы V⁰_{j,k}, V¹_{j,k}, V²_{j,k}.

    Args:
        kind: 0, 1 или 2
        j: Позиция единицы (1 ≤ j ≤ k+1; j = k+1 даёт нулевой вектор)
        k: Длина вектора
        vector: Исходные α₁…α_k
        m: Индекс корня S_{m,t}
        delta: Знак δ для V⁰

    Returns:
        Вектор длины k
    """
    if kind not in (0, 1, 2):
        raise FamilyError(f"Неизвестный оператор V^{kind}")
    if len(vector) != k:
        raise ShapeError(f"V_{{{j},{k}}} ожидает вектор длины {k}, получено {len(vector)}")
    if not 1 <= j <= k + 1:
        raise FamilyError(f"V_{{j,{k}}}: j = {j} вне диапазона 1…{k + 1}")
    if m < 0:
        raise FamilyError(f"Индекс корня m должен быть ≥ 0, получено {m}")
    if j == k + 1:
        return (ZERO,) * k
    values = [Scalar.coerce(v) for v in vector]
    result: List[Scalar] = [ZERO] * (j - 1) + [ONE]
    for i in range(j + 1, k + 1):
        alpha = values[i - 1]
        if kind == 0:
            factor = jth_root_of_sign(delta, j, i) * s_power(m, j, i)
        elif kind == 1:
            factor = s_power(m, j, i)
        else:
            factor = s_power(m, 2 * j + 1, 2 * i + 1)
        result.append(factor * alpha)
    return tuple(result)


def leading_position(vector: Sequence[Scalar]) -> int:
    """Позиция первого ненулевого элемента (с единицы), 0 для нулевого вектора."""
    for position, value in enumerate(vector, start=1):
        if value:
            return position
    return 0


def op_w(s: int, k: int, vector: Sequence[Number], m: int = 0) -> ParamVector:
    """
    Оператор W_{s,k} на векторе (0,…,0,1,α_{j+1},…,α_k,γ).

    Args:
        s: Сдвиг второй единицы (1 ≤ s ≤ k+2−j)
        k: Число координат до хвостового γ
        vector: Вектор длины k+1
        m: Индекс корня S_{m,s}

    Returns:
        Вектор длины k+1
    """
    if len(vector) != k + 1:
        raise ShapeError(f"W_{{s,{k}}} ожидает вектор длины {k + 1}, получено {len(vector)}")
    values = [Scalar.coerce(v) for v in vector]
    j = leading_position(values)
    if j == 0 or j > k or values[j - 1] != ONE:
        raise ShapeError(f"W_{{s,{k}}}: вектор должен начинаться с 1 на позиции j ≤ {k}")
    result: List[Scalar] = [ZERO] * (k + 1)
    result[j - 1] = ONE
    if s == k + 2 - j:
        return tuple(result)
    if s == k + 1 - j:
        result[k] = ONE
        return tuple(result)
    if not 1 <= s <= k - j:
        raise FamilyError(f"W_{{s,{k}}}: s = {s} вне диапазона 1…{k + 2 - j}")
    result[s + j - 1] = ONE
    for i in range(s + j + 1, k + 1):
        result[i - 1] = s_power(m, s, i - j) * values[i - 1]
    result[k] = s_power(m, s, k + 6 - 2 * j) * values[k]
    return tuple(result)
