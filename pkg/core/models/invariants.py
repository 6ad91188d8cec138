"""
Модели инвариантов супералгебры: центральный ряд, характеристическая
последовательность и отпечаток, собирающий их в одну строку.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.models.matrix import GradedSubspace, Partition
from core.models.superalgebra import SuperAlgebra

NOT_NILPOTENT = "NOT_NILPOTENT"

Dims = Tuple[int, int]


def format_dims(dims: Dims) -> str:
    return f"({dims[0]}|{dims[1]})"


@dataclass(frozen=True)
class CentralSeries:
    """
    Нижний центральный ряд L¹ ⊇ L² ⊇ …

    Attributes:
        terms: terms[k] = L^{k+1}; последний член либо нулевой, либо повторяет предыдущий
    """
    terms: Tuple[GradedSubspace, ...]

    @property
    def dims(self) -> List[Dims]:
        return [t.dims for t in self.terms]

    @property
    def is_nilpotent(self) -> bool:
        return self.terms[-1].is_zero()

    @property
    def nilindex(self) -> Optional[int]:
        """Минимальное s с L^s = 0; None, если ряд стабилизировался ненулевым."""
        if not self.is_nilpotent:
            return None
        return len(self.terms)

    def nonzero_dims(self) -> List[Dims]:
        return [t.dims for t in self.terms if not t.is_zero()]

    def __str__(self) -> str:
        chain = " ⊇ ".join(f"L^{k} {format_dims(d)}" for k, d in enumerate(self.dims, start=1))
        if self.is_nilpotent:
            return f"{chain}; nilindex {self.nilindex}"
        return f"{chain}; not nilpotent"


@dataclass(frozen=True, order=True)
class CharSeq:
    """
    Характеристическая последовательность (C₀ | C₁).

    Attributes:
        even_part: Жорданов тип R_x на L₀
        odd_part: Жорданов тип R_x на L₁
    """
    even_part: Partition
    odd_part: Partition

    def __str__(self) -> str:
        return f"({self.even_part}|{self.odd_part})"

    def to_dict(self) -> Dict[str, List[int]]:
        return {"even": list(self.even_part.parts), "odd": list(self.odd_part.parts)}


@dataclass(frozen=True)
class NaturalGradation:
    """
    Присоединённая градуированная алгебра gr(A) = ⊕ A^i / A^{i+1}.

    Attributes:
        algebra: Таблица gr(A) в базисе представителей, упорядоченном по степени
        degrees: Степень каждого базисного вектора x̄_k
    """
    algebra: SuperAlgebra
    degrees: Tuple[int, ...]

    def component_dims(self) -> List[int]:
        """dim gr_i для i = 1…max."""
        top = max(self.degrees, default=0)
        return [self.degrees.count(i) for i in range(1, top + 1)]

    def respects_grading(self) -> bool:
        """[gr_i, gr_j] ⊆ gr_{i+j}."""
        for ((a, b), vector) in self.algebra.table.items():
            target = self.degrees[a[1] - 1] + self.degrees[b[1] - 1]
            for k, c in enumerate(vector):
                if c and self.degrees[k] != target:
                    return False
        return True


@dataclass(frozen=True)
class Fingerprint:
    """
    Набор инвариантов относительно изоморфизма.

    Attributes:
        series_dims: Размерности ненулевых членов центрального ряда
        nilindex: Нильиндекс или NOT_NILPOTENT
        charseq: Характеристическая последовательность (None, если не определена)
        annihilator_dims: Размерности R(L)
        lie: Является ли алгебра супералгеброй Ли
        generator_dims: Размерности L/L²
    """
    series_dims: Tuple[Dims, ...]
    nilindex: object
    charseq: Optional[CharSeq]
    annihilator_dims: Dims
    lie: bool
    generator_dims: Dims

    def to_text(self) -> str:
        """Каноническая однострочная запись."""
        series = ",".join(format_dims(d) for d in self.series_dims) or "-"
        charseq = str(self.charseq) if self.charseq is not None else "undefined"
        return (
            f"series={series};nilindex={self.nilindex};charseq={charseq};"
            f"annihilator={format_dims(self.annihilator_dims)};lie={'true' if self.lie else 'false'};"
            f"generators={format_dims(self.generator_dims)}"
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "series": [list(d) for d in self.series_dims],
            "nilindex": self.nilindex,
            "charseq": self.charseq.to_dict() if self.charseq is not None else None,
            "annihilator": list(self.annihilator_dims),
            "lie": self.lie,
            "generators": list(self.generator_dims),
            "text": self.to_text(),
        }

    def __str__(self) -> str:
        return self.to_text()
