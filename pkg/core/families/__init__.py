"""
Классифицированные семейства супералгебр Лейбница.

Содержит конструкторы всех семейств каталога и операторы нормализации
параметров, по которым строится список попарно неизоморфных алгебр.
"""
from typing import Dict, Sequence

from config.family_catalog import FamilyTag
from core.families.base_family import BaseFamily
from core.families.leib_n_n import family_h, family_m
from core.families.leib_n_n_minus_1 import family_g, family_l
from core.families.leib_n_n_plus import family_e_even, family_e_odd, family_f
from core.families.small_families import leib_1m, leib_22_a, leib_22_b, leib_2m_a, leib_2m_b, leib_n1
from core.families.theorem_families import null_filiform_family, thm21_mixed_family
from core.models.scalar import Number
from core.models.superalgebra import SuperAlgebra

FAMILIES: Dict[FamilyTag, BaseFamily] = {
    family.tag: family
    for family in (
        null_filiform_family, thm21_mixed_family,
        leib_1m, leib_n1, leib_22_a, leib_22_b, leib_2m_a, leib_2m_b,
        family_l, family_g, family_m, family_h, family_e_odd, family_e_even, family_f,
    )
}


def get_family(tag) -> BaseFamily:
    if isinstance(tag, str):
        tag = FamilyTag(tag.upper())
    return FAMILIES[tag]


def build_family(tag, n: int, m: int, params: Sequence[Number] = ()) -> SuperAlgebra:
    """Супералгебра семейства tag с размерностями (n|m) и параметрами params."""
    return get_family(tag).build(n, m, params)
