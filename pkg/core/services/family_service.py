"""
Сервис семейств: список попарно неизоморфных представителей
и корпус экземпляров семейств для проверок.
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config.family_catalog import FamilyTag, f_first_beta, family_catalog
from core.exceptions import FamilyDimsError, FamilyError, TranscriptionError
from core.families import build_family, get_family
from core.families.normal_forms import op_v, op_w, s_power
from core.models.scalar import ONE, ZERO, Number, Scalar
from core.models.superalgebra import SuperAlgebra

logger = logging.getLogger(__name__)

PARAMETER_GRID: Tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))


@dataclass
class CanonicalEntry:
    """
    Элемент списка попарно неизоморфных супералгебр.

    Attributes:
        tag: Семейство
        n: Размерность чётной части
        m: Размерность нечётной части
        params: Нормализованные параметры
        form: Шаблон записи, из которого получен элемент
        algebra: Построенная супералгебра (None, если не реализуема)
        unrealizable: Причина, по которой элемент не построен
    """
    tag: FamilyTag
    n: int
    m: int
    params: Tuple[Scalar, ...]
    form: str
    algebra: Optional[SuperAlgebra] = None
    unrealizable: Optional[str] = None

    @property
    def description(self) -> str:
        values = ", ".join(str(p) for p in self.params)
        return f"{self.tag.value}({values})  [{self.form}]"

    def to_dict(self) -> Dict[str, object]:
        return {
            "tag": self.tag.value,
            "dims": [self.n, self.m],
            "params": [str(p) for p in self.params],
            "form": self.form,
            "unrealizable": self.unrealizable,
        }


@dataclass
class CorpusMember:
    """Экземпляр семейства с конкретными параметрами."""
    tag: FamilyTag
    n: int
    m: int
    params: Tuple[Scalar, ...]
    algebra: SuperAlgebra = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.tag.value}({self.n}|{self.m})[{', '.join(str(p) for p in self.params)}]"


class FamilyService:
    """
    Сервис семейств.

    Отвечает за:
    - Построение списка попарно неизоморфных представителей по (n, m)
    - Подстановку образцов параметров в операторы V⁰, V¹, V², W
    - Корпус экземпляров семейств на сетке параметров
    """

    def __init__(self):
        """Инициализация сервиса."""
        self.catalog = family_catalog
        logger.info("FamilyService инициализирован")

    # --- список представителей ---

    @staticmethod
    def _sampler(sample_params: Sequence[Number]):
        values = [Scalar.coerce(v) for v in sample_params]
        if not values:
            raise FamilyError("Нужен хотя бы один образец параметра")
        position = itertools.count()

        def take(count: int) -> Tuple[Scalar, ...]:
            return tuple(values[next(position) % len(values)] for _ in range(count))

        return take

    def _entry(self, tag: FamilyTag, n: int, m: int, params: Sequence[Scalar], form: str) -> CanonicalEntry:
        params = tuple(params)
        try:
            algebra = build_family(tag, n, m, params)
        except TranscriptionError as e:
            logger.debug(f"{form}: не реализуема: {e}")
            return CanonicalEntry(tag, n, m, params, form, unrealizable=str(e))
        return CanonicalEntry(tag, n, m, params, form, algebra=algebra)

    def _w_series(self, tag: FamilyTag, n: int, m: int, head: Tuple[Scalar, ...], values: Tuple[Scalar, ...],
                  root: int, label: str, gamma: Optional[Scalar] = None) -> List[CanonicalEntry]:
        """
        Элементы вида X(head, W_{s,k}(V¹_{j,·}(values)[, γ])) для всех допустимых j, s.

        Без γ последняя координата V¹ играет роль хвостового слота W.
        """
        entries = []
        size = len(values)
        k = size if gamma is not None else size - 1
        for j in range(1, k + 1):
            normalized = op_v(1, j, size, values, root)
            if gamma is not None:
                normalized = normalized + (gamma,)
            for s in range(1, k + 3 - j):
                params = head + op_w(s, k, normalized, root)
                entries.append(self._entry(tag, n, m, params, f"{label}(W_{{{s},{k}}}(V¹_{{{j},{size}}}))"))
        return entries

    def _lg_entries(self, n: int, m: int, take, root: int) -> List[CanonicalEntry]:
        a = n - 3
        entries = []
        alpha = take(a)
        theta, = take(1)
        for j in range(1, a + 1):
            params = op_v(1, j, a, alpha, root) + (s_power(root, j, n - 3) * theta,)
            entries.append(self._entry(FamilyTag.L, n, m, params, f"L(V¹_{{{j},{a}}}(α), S^{n - 3}θ)"))
        entries.append(self._entry(FamilyTag.L, n, m, (ZERO,) * a + (ONE,), "L(0,…,0,1)"))
        entries.append(self._entry(FamilyTag.L, n, m, (ZERO,) * (a + 1), "L(0,…,0)"))
        entries.append(self._entry(FamilyTag.G, n, m, (ZERO,) * a + (ONE,), "G(0,…,0,1)"))
        entries.append(self._entry(FamilyTag.G, n, m, (ZERO,) * (a + 1), "G(0,…,0)"))
        beta = take(a)
        gamma, = take(1)
        entries.extend(self._w_series(FamilyTag.G, n, m, (), beta, root, "G", gamma=gamma))
        return entries

    def _mh_entries(self, n: int, m: int, take, root: int) -> List[CanonicalEntry]:
        k = n - 2
        entries = []
        alpha = take(n - 3)
        theta, tau = take(2)
        for j in range(1, k + 1):
            params = op_v(1, j, k, alpha + (theta,), root) + (s_power(root, j, n - 3) * tau,)
            entries.append(self._entry(FamilyTag.M, n, m, params, f"M(V¹_{{{j},{k}}}(α, θ), S^{n - 3}τ)"))
        entries.append(self._entry(FamilyTag.M, n, m, (ZERO,) * k + (ONE,), "M(0,…,0,1)"))
        entries.append(self._entry(FamilyTag.M, n, m, (ZERO,) * (k + 1), "M(0,…,0)"))
        entries.append(self._entry(FamilyTag.H, n, m, (ZERO,) * k + (ONE,), "H(0,…,0,1)"))
        entries.append(self._entry(FamilyTag.H, n, m, (ZERO,) * (k + 1), "H(0,…,0)"))
        beta = take(n - 3)
        delta, gamma = take(2)
        entries.extend(self._w_series(FamilyTag.H, n, m, (), beta + (delta,), root, "H", gamma=gamma))
        return entries

    def _e_odd_entries(self, n: int, m: int, take, root: int) -> List[CanonicalEntry]:
        q = (n + 1) // 2
        tag = FamilyTag.E_ODD
        entries = []
        betas = take(q - 2)
        first, last = take(2)
        half = Scalar.rational(Fraction(1, 2))
        for delta in (1, -1):
            for j in range(1, q):
                params = (ONE, first * delta) + op_v(0, j, q - 2, betas, root, delta) + (ZERO,)
                form = f"E(1, δβ_{q + 1}, V⁰_{{{j},{q - 2}}}, 0), δ={delta:+d}"
                if first == half or first == -half:
                    entries.append(CanonicalEntry(tag, n, m, params, form,
                                                  unrealizable=f"β_{q + 1} = ±1/2 относится к следующей серии"))
                else:
                    entries.append(self._entry(tag, n, m, params, form))
        for value in (half, -half):
            for delta in (1, -1):
                for j in range(1, q + 1):
                    params = (ONE, value) + op_v(0, j, q - 1, betas + (last,), root, delta)
                    entries.append(self._entry(tag, n, m, params,
                                               f"E(1, {value}, V⁰_{{{j},{q - 1}}}), δ={delta:+d}"))
        for delta in (1, -1):
            for j in range(1, q):
                params = (ZERO, ONE) + op_v(0, j, q - 2, betas, root, delta) + (ZERO,)
                entries.append(self._entry(tag, n, m, params, f"E(0, 1, V⁰_{{{j},{q - 2}}}, 0), δ={delta:+d}"))
        entries.extend(self._w_series(tag, n, m, (ZERO, ZERO), betas + (last,), root, "E(0, 0, …)"))
        entries.append(self._entry(tag, n, m, (ZERO,) * (q + 1), "E(0,…,0)"))
        return entries

    def _e_even_entries(self, n: int, m: int, take, root: int) -> List[CanonicalEntry]:
        q = n // 2
        tag = FamilyTag.E_EVEN
        entries = []
        betas = take(q - 1)
        last, = take(1)
        for j in range(1, q + 1):
            params = (ONE,) + op_v(2, j, q - 1, betas, root) + (ZERO,)
            entries.append(self._entry(tag, n, m, params, f"E(1, V²_{{{j},{q - 1}}}, 0)"))
        entries.extend(self._w_series(tag, n, m, (ZERO,), betas + (last,), root, "E(0, …)"))
        entries.append(self._entry(tag, n, m, (ZERO,) * (q + 1), "E(0,…,0)"))
        return entries

    def _f_entries(self, n: int, m: int, take, root: int) -> List[CanonicalEntry]:
        a = n + 2 - f_first_beta(n)
        entries = self._w_series(FamilyTag.F, n, m, (), take(a), root, "F")
        entries.append(self._entry(FamilyTag.F, n, m, (ZERO,) * a, "F(0,…,0)"))
        return entries

    def _small_entries(self, n: int, m: int) -> List[CanonicalEntry]:
        entries = []
        if family_catalog.get(FamilyTag.LEIB_1M).accepts_dims(n, m):
            entries.append(self._entry(FamilyTag.LEIB_1M, n, m, (), "Leib_{1,m}"))
        if family_catalog.get(FamilyTag.LEIB_N1).accepts_dims(n, m):
            for alpha in (ZERO, ONE):
                entries.append(self._entry(FamilyTag.LEIB_N1, n, m, (alpha,), f"Leib_{{n,1}}(α={alpha})"))
        for tag in (FamilyTag.LEIB_22_A, FamilyTag.LEIB_22_B, FamilyTag.LEIB_2M_A, FamilyTag.LEIB_2M_B):
            if family_catalog.get(tag).accepts_dims(n, m):
                entries.append(self._entry(tag, n, m, (), family_catalog.get(tag).title))
        return entries

    def canonical_list(self, n: int, m: int, sample_params: Sequence[Number] = (1,),
                       root_index: int = 0) -> List[CanonicalEntry]:
        """
        Список попарно неизоморфных супералгебр нильиндекса n+m при (n, m).

        Args:
            n: Размерность чётной части
            m: Размерность нечётной части
            sample_params: Образцы значений свободных параметров (по циклу)
            root_index: Индекс корня m в S_{m,t}

        Returns:
            Элементы списка; нереализуемые помечены причиной
        """
        take = self._sampler(sample_params)
        entries = self._small_entries(n, m)
        if n >= 3 and m == n - 1:
            entries.extend(self._lg_entries(n, m, take, root_index))
        if n >= 3 and m == n:
            entries.extend(self._mh_entries(n, m, take, root_index))
        if m == n + 1 and n >= 3 and n % 2 == 1:
            entries.extend(self._e_odd_entries(n, m, take, root_index))
        if m == n + 1 and n >= 2 and n % 2 == 0:
            entries.extend(self._e_even_entries(n, m, take, root_index))
        if m == n + 2 and n >= 2:
            entries.extend(self._f_entries(n, m, take, root_index))
        if not entries:
            logger.error(f"Для ({n}|{m}) нет классифицированных семейств")
            raise FamilyDimsError(f"Размерности ({n}|{m}) не покрыты ни одним семейством списка")
        unique: Dict[Tuple, CanonicalEntry] = {}
        for entry in entries:
            unique.setdefault((entry.tag, entry.params), entry)
        logger.info(f"Список ({n}|{m}): {len(unique)} элементов")
        return list(unique.values())

    # --- корпус ---

    def parameter_grid(self, tag: FamilyTag, n: int, values: Sequence[Number] = PARAMETER_GRID,
                       max_full_arity: int = 4, samples: int = 200, seed: int = 0) -> Iterator[Tuple[Scalar, ...]]:
        """
        Наборы параметров: полная сетка при арности ≤ max_full_arity, иначе samples случайных.

        Параметр γ семейства H фиксируется нулём.
        """
        spec = family_catalog.get(tag)
        names = spec.param_names(n)
        grid = [Scalar.coerce(v) for v in values]
        choices = [[ZERO] if (tag == FamilyTag.H and name == "γ") else grid for name in names]
        if len(names) <= max_full_arity:
            yield from itertools.product(*choices)
            return
        rng = random.Random(seed)
        for _ in range(samples):
            yield tuple(rng.choice(options) for options in choices)

    def family_corpus(self, max_n: int = 6, values: Sequence[Number] = PARAMETER_GRID,
                      max_full_arity: int = 4, samples: int = 200, seed: int = 0) -> Iterator[CorpusMember]:
        """
        Экземпляры всех семейств каталога.

        L/G/M/H при 3 ≤ n ≤ max_n, E/F при 2 ≤ n ≤ max_n − 1,
        малые семейства и однопорождённые модели при малых размерностях.
        """
        shapes: List[Tuple[FamilyTag, int, int]] = []
        for n in range(1, max_n):
            shapes.append((FamilyTag.NULL_FILIFORM, n, 0))
        for n, m in ((0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3)):
            shapes.append((FamilyTag.THM21_MIXED, n, m))
        for m in range(1, 5):
            shapes.append((FamilyTag.LEIB_1M, 1, m))
        for n in range(1, 5):
            shapes.append((FamilyTag.LEIB_N1, n, 1))
        shapes += [(FamilyTag.LEIB_22_A, 2, 2), (FamilyTag.LEIB_22_B, 2, 2)]
        shapes += [(FamilyTag.LEIB_2M_A, 2, m) for m in (3, 5)]
        shapes += [(FamilyTag.LEIB_2M_B, 2, m) for m in (1, 3, 5)]
        for n in range(3, max_n + 1):
            shapes += [(FamilyTag.L, n, n - 1), (FamilyTag.G, n, n - 1), (FamilyTag.M, n, n), (FamilyTag.H, n, n)]
        for n in range(2, max_n):
            shapes.append((FamilyTag.E_ODD if n % 2 else FamilyTag.E_EVEN, n, n + 1))
            shapes.append((FamilyTag.F, n, n + 2))
        for tag, n, m in shapes:
            family = get_family(tag)
            grid = ([(ZERO,), (ONE,)] if tag == FamilyTag.LEIB_N1
                    else self.parameter_grid(tag, n, values, max_full_arity, samples, seed))
            for params in grid:
                yield CorpusMember(tag, n, m, tuple(params), family.build(n, m, params))


family_service = FamilyService()
