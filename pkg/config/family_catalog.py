"""
Каталог классифицированных семейств супералгебр Лейбница.

Для каждого семейства задаёт допустимые размерности (n, m),
имена параметров и краткое описание таблицы.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple
from enum import Enum


class FamilyTag(Enum):
    """Метки семейств."""
    NULL_FILIFORM = "NULL_FILIFORM"  # [x_i,x_1]=x_{i+1}, m = 0
    THM21_MIXED = "THM21_MIXED"      # однопорождённая, нильиндекс n+m+1
    LEIB_1M = "LEIB_1M"              # n = 1
    LEIB_N1 = "LEIB_N1"              # m = 1, α ∈ {0, 1}
    LEIB_22_A = "LEIB_22_A"          # (2|2), таблица с ½
    LEIB_22_B = "LEIB_22_B"          # (2|2), без [x1,y1]
    LEIB_2M_A = "LEIB_2M_A"          # n = 2, m нечётно ≥ 3
    LEIB_2M_B = "LEIB_2M_B"          # n = 2, m нечётно
    L = "L"                          # Leib_{n,n−1}
    G = "G"                          # Leib_{n,n−1}
    M = "M"                          # Leib_{n,n}
    H = "H"                          # Leib_{n,n}
    E_ODD = "E_ODD"                  # Leib_{n,n+1}, n = 2q−1
    E_EVEN = "E_EVEN"                # Leib_{n,n+1}, n = 2q
    F = "F"                          # Leib_{n,n+2}


def e_first_beta(n: int) -> int:
    """Первый индекс β в семействе E: ⌊(n+4)/2⌋."""
    return (n + 4) // 2


def f_first_beta(n: int) -> int:
    """Первый индекс β в семействе F: ⌊(n+5)/2⌋."""
    return (n + 5) // 2


def _indexed(symbol: str, first: int, last: int) -> List[str]:
    return [f"{symbol}{k}" for k in range(first, last + 1)]


@dataclass
class FamilySpec:
    """
    Описание одного семейства.

    Attributes:
        tag: Метка семейства
        title: Запись семейства с параметрами
        description: Краткое описание
        m_offsets: Допустимые значения m − n (None, если без ограничения)
        fixed_n: Единственное допустимое n
        fixed_m: Единственное допустимое m
        min_n: Нижняя граница n
        min_m: Нижняя граница m
        n_parity: Требуемая чётность n (0 или 1)
        m_parity: Требуемая чётность m (0 или 1)
        param_names: Имена обязательных параметров по n
        optional_params: Имена необязательных хвостовых параметров
    """
    tag: FamilyTag
    title: str
    description: str
    m_offsets: Optional[Tuple[int, ...]] = None
    fixed_n: Optional[int] = None
    fixed_m: Optional[int] = None
    min_n: int = 0
    min_m: int = 0
    n_parity: Optional[int] = None
    m_parity: Optional[int] = None
    param_names: Callable[[int], List[str]] = field(default=lambda n: [])
    optional_params: Tuple[str, ...] = ()

    def accepts_dims(self, n: int, m: int) -> bool:
        """Проверяет, допустимы ли размерности (n, m)."""
        if n < self.min_n or m < self.min_m:
            return False
        if self.fixed_n is not None and n != self.fixed_n:
            return False
        if self.fixed_m is not None and m != self.fixed_m:
            return False
        if self.m_offsets is not None and (m - n) not in self.m_offsets:
            return False
        if self.n_parity is not None and n % 2 != self.n_parity:
            return False
        if self.m_parity is not None and m % 2 != self.m_parity:
            return False
        return True

    def arity(self, n: int) -> int:
        """Число обязательных параметров."""
        return len(self.param_names(n))

    def accepts_arity(self, n: int, count: int) -> bool:
        base = self.arity(n)
        return base <= count <= base + len(self.optional_params)

    def dims_rule(self) -> str:
        """Текстовое описание ограничений на размерности."""
        rules = []
        if self.fixed_n is not None:
            rules.append(f"n = {self.fixed_n}")
        elif self.min_n:
            rules.append(f"n ≥ {self.min_n}")
        if self.fixed_m is not None:
            rules.append(f"m = {self.fixed_m}")
        elif self.min_m:
            rules.append(f"m ≥ {self.min_m}")
        if self.m_offsets is not None:
            rules.append(" или ".join(f"m = n{o:+d}" if o else "m = n" for o in self.m_offsets))
        if self.n_parity is not None:
            rules.append("n нечётно" if self.n_parity else "n чётно")
        if self.m_parity is not None:
            rules.append("m нечётно" if self.m_parity else "m чётно")
        return ", ".join(rules)


# Каталог всех семейств
FAMILY_CATALOG: Dict[FamilyTag, FamilySpec] = {
    FamilyTag.NULL_FILIFORM: FamilySpec(
        tag=FamilyTag.NULL_FILIFORM,
        title="NF_n",
        description="Нуль-филиформная алгебра Лейбница: [x_i,x_1]=x_{i+1}",
        fixed_m=0,
        min_n=1,
    ),
    FamilyTag.THM21_MIXED: FamilySpec(
        tag=FamilyTag.THM21_MIXED,
        title="T_{n,m}",
        description="Однопорождённая супералгебра: [e_i,e_1]=e_{i+1}, [e_i,e_2]=2e_{i+2}, e_1 нечётен",
        m_offsets=(0, 1),
        min_m=1,
    ),
    FamilyTag.LEIB_1M: FamilySpec(
        tag=FamilyTag.LEIB_1M,
        title="Leib_{1,m}",
        description="[y_i,x_1]=y_{i+1}",
        fixed_n=1,
        min_m=1,
    ),
    FamilyTag.LEIB_N1: FamilySpec(
        tag=FamilyTag.LEIB_N1,
        title="Leib_{n,1}(α)",
        description="[x_i,x_1]=x_{i+1}, [y_1,y_1]=αx_n",
        fixed_m=1,
        min_n=1,
        param_names=lambda n: ["α"],
    ),
    FamilyTag.LEIB_22_A: FamilySpec(
        tag=FamilyTag.LEIB_22_A,
        title="Leib_{2,2} (A)",
        description="[y1,x1]=y2, [x1,y1]=½y2, [x2,y1]=y2, [y1,x2]=2y2, [y1,y1]=x2",
        fixed_n=2,
        fixed_m=2,
    ),
    FamilyTag.LEIB_22_B: FamilySpec(
        tag=FamilyTag.LEIB_22_B,
        title="Leib_{2,2} (B)",
        description="[y1,x1]=y2, [x2,y1]=y2, [y1,x2]=2y2, [y1,y1]=x2",
        fixed_n=2,
        fixed_m=2,
    ),
    FamilyTag.LEIB_2M_A: FamilySpec(
        tag=FamilyTag.LEIB_2M_A,
        title="Leib_{2,m} (A)",
        description="[x1,x1]=x2, [y_i,x1]=y_{i+1}, [x1,y_i]=−y_{i+1}, [y_i,y_{m+1−i}]=(−1)^{i+1}x2",
        fixed_n=2,
        min_m=3,
        m_parity=1,
    ),
    FamilyTag.LEIB_2M_B: FamilySpec(
        tag=FamilyTag.LEIB_2M_B,
        title="Leib_{2,m} (B)",
        description="[y_i,x1]=−y_{i+1}, [x1,y_i]=y_{i+1}, [y_{m+1−i},y_i]=(−1)^{i+1}x2",
        fixed_n=2,
        min_m=1,
        m_parity=1,
    ),
    FamilyTag.L: FamilySpec(
        tag=FamilyTag.L,
        title="L(α4, …, αn, θ)",
        description="Leib_{n,n−1}, характеристическая последовательность (n−1,1|m)",
        m_offsets=(-1,),
        min_n=3,
        param_names=lambda n: _indexed("α", 4, n) + ["θ"],
    ),
    FamilyTag.G: FamilySpec(
        tag=FamilyTag.G,
        title="G(β4, …, βn, γ)",
        description="Leib_{n,n−1}, характеристическая последовательность (n−1,1|m)",
        m_offsets=(-1,),
        min_n=3,
        param_names=lambda n: _indexed("β", 4, n) + ["γ"],
    ),
    FamilyTag.M: FamilySpec(
        tag=FamilyTag.M,
        title="M(α4, …, αn, θ, τ)",
        description="Leib_{n,n}, характеристическая последовательность (n−1,1|m)",
        m_offsets=(0,),
        min_n=3,
        param_names=lambda n: _indexed("α", 4, n) + ["θ", "τ"],
        optional_params=("γ4",),
    ),
    FamilyTag.H: FamilySpec(
        tag=FamilyTag.H,
        title="H(β4, …, βn, δ, γ)",
        description="Leib_{n,n}, характеристическая последовательность (n−1,1|m)",
        m_offsets=(0,),
        min_n=3,
        param_names=lambda n: _indexed("β", 4, n) + ["δ", "γ"],
    ),
    FamilyTag.E_ODD: FamilySpec(
        tag=FamilyTag.E_ODD,
        title="E(γ, β_p, …, βn, β), n = 2q−1",
        description="Leib_{n,n+1}, характеристическая последовательность (n|m−1,1)",
        m_offsets=(1,),
        min_n=3,
        n_parity=1,
        param_names=lambda n: ["γ"] + _indexed("β", e_first_beta(n), n) + ["β"],
    ),
    FamilyTag.E_EVEN: FamilySpec(
        tag=FamilyTag.E_EVEN,
        title="E(γ, β_p, …, βn, β), n = 2q",
        description="Leib_{n,n+1}, характеристическая последовательность (n|m−1,1)",
        m_offsets=(1,),
        min_n=2,
        n_parity=0,
        param_names=lambda n: ["γ"] + _indexed("β", e_first_beta(n), n) + ["β"],
    ),
    FamilyTag.F: FamilySpec(
        tag=FamilyTag.F,
        title="F(β_p, …, β_{n+1})",
        description="Leib_{n,n+2}, характеристическая последовательность (n|m−1,1)",
        m_offsets=(2,),
        min_n=2,
        param_names=lambda n: _indexed("β", f_first_beta(n), n + 1),
    ),
}


class FamilyCatalog:
    """
    Менеджер каталога семейств.

    Ищет семейства по метке и по размерностям.
    """

    def __init__(self):
        """Инициализация каталога."""
        self.families = FAMILY_CATALOG

    def get(self, tag) -> FamilySpec:
        """
        Описание семейства по метке или её строковому имени.

        Args:
            tag: FamilyTag или строка вида "L", "e_odd"

        Returns:
            FamilySpec
        """
        if isinstance(tag, str):
            tag = FamilyTag(tag.upper())
        return self.families[tag]

    def families_for_dims(self, n: int, m: int) -> List[FamilySpec]:
        """Все семейства, допускающие размерности (n, m)."""
        return [spec for spec in self.families.values() if spec.accepts_dims(n, m)]

    def get_summary(self) -> Dict[str, str]:
        """Краткое описание всех семейств."""
        return {
            spec.tag.value: f"{spec.title}: {spec.dims_rule() or 'любые размерности'}"
            for spec in self.families.values()
        }


family_catalog = FamilyCatalog()
