"""
Сервис перебора таблиц структурных констант.

Обходит дерево присваиваний коэффициентов в глубину, отсекая ветви
по супертождеству, как только все входящие в невязку константы
определены. Работа делится по префиксам фиксированной глубины.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from config.settings import settings
from core.exceptions import NotApplicable, SearchBudgetExceeded, SearchSpecError
from core.models.invariants import NOT_NILPOTENT
from core.models.scalar import ZERO, Number, Scalar
from core.models.superalgebra import (
    EVEN, ODD, Basis, Pair, SuperAlgebra, Triple, sign, superidentity_violations,
)
from core.services.invariant_service import invariant_service
from core.services.verification_service import verification_service
from utils.lsa_format import serialize_lsa

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Variable = Tuple[Pair, int]
Prefix = Tuple[int, ...]


def format_cursor(prefix: Prefix) -> str:
    return ".".join(str(i) for i in prefix)


def parse_cursor(text: str) -> Prefix:
    try:
        return tuple(int(part) for part in text.split(".")) if text else ()
    except ValueError:
        raise SearchSpecError(f"Курсор должен иметь вид 0.1.2, получено {text!r}")


@dataclass(frozen=True)
class SearchSpec:
    """
    Параметры перебора.

    Attributes:
        n, m: Размерности чётной и нечётной частей
        coefficients: Конечный набор значений констант (содержит 0)
        triangular: Свободны только константы с целевым индексом больше обоих сомножителей
        jobs: Число процессов
        resume: Префикс, с которого продолжить обход
        max_prefixes: Остановиться после стольких префиксов
        force: Игнорировать бюджет
        split_depth: Глубина префиксов
        trials, seed: Параметры характеристической последовательности для переписи
    """
    n: int
    m: int
    coefficients: Tuple[Scalar, ...]
    triangular: bool = False
    jobs: int = 1
    resume: Optional[Prefix] = None
    max_prefixes: Optional[int] = None
    force: bool = False
    split_depth: int = field(default_factory=lambda: settings.split_depth)
    trials: int = field(default_factory=lambda: settings.trials)
    seed: int = field(default_factory=lambda: settings.seed)

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise SearchSpecError(f"Размерности должны быть неотрицательны: ({self.n}|{self.m})")
        coefficients = tuple(Scalar.coerce(c) for c in self.coefficients)
        if not coefficients:
            raise SearchSpecError("Набор коэффициентов пуст")
        if ZERO not in coefficients:
            raise SearchSpecError("Набор коэффициентов должен содержать 0")
        if len(set(coefficients)) != len(coefficients):
            raise SearchSpecError("Коэффициенты в наборе повторяются")
        object.__setattr__(self, "coefficients", coefficients)
        if self.jobs < 1:
            raise SearchSpecError(f"jobs должно быть ≥ 1, получено {self.jobs}")
        if self.max_prefixes is not None and self.max_prefixes < 1:
            raise SearchSpecError(f"max_prefixes должно быть ≥ 1, получено {self.max_prefixes}")

    @classmethod
    def create(cls, n: int, m: int, coefficients: Sequence[Number], **options) -> "SearchSpec":
        return cls(n, m, tuple(Scalar.coerce(c) for c in coefficients), **options)


def _global_index(b: Basis, n: int) -> int:
    return b[1] - 1 if b[0] == EVEN else n + b[1] - 1


def _component_size(parity: int, n: int, m: int) -> int:
    return n if parity == EVEN else m


class PrunedSearch:
    """
    Обход дерева присваиваний для одной спецификации.

    Переменные упорядочены блоками ee, eo, oe, oo, внутри блока
    лексикографически по (строка, столбец, целевой индекс). Каждая тройка
    базисных векторов проверяется на той переменной, после которой все
    константы её невязки определены.
    """

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        n, m = spec.n, spec.m
        self.n, self.m = n, m
        self.basis: List[Basis] = [(EVEN, i) for i in range(1, n + 1)] + [(ODD, j) for j in range(1, m + 1)]
        self.values: Dict[Pair, List[Scalar]] = {
            (a, b): [ZERO] * _component_size(a[0] ^ b[0], n, m) for a in self.basis for b in self.basis
        }
        self.variables: List[Variable] = []
        for pa, pb in ((EVEN, EVEN), (EVEN, ODD), (ODD, EVEN), (ODD, ODD)):
            for a in (b for b in self.basis if b[0] == pa):
                for b in (c for c in self.basis if c[0] == pb):
                    for t in range(len(self.values[(a, b)])):
                        if self._is_free(a, b, t):
                            self.variables.append(((a, b), t))
        self.checks: List[List[Triple]] = [[] for _ in self.variables]
        self._schedule_checks()
        self.nodes = 0

    def _is_free(self, a: Basis, b: Basis, t: int) -> bool:
        if not self.spec.triangular:
            return True
        target = _global_index((a[0] ^ b[0], t + 1), self.n)
        return target > _global_index(a, self.n) and target > _global_index(b, self.n)

    def _of_parity(self, parity: int) -> List[Basis]:
        return [b for b in self.basis if b[0] == parity]

    def _schedule_checks(self):
        position: Dict[Pair, List[int]] = {}
        for index, (pair, _) in enumerate(self.variables):
            position.setdefault(pair, []).append(index)
        for a, b, c in product(self.basis, repeat=3):
            pairs = {(b, c), (a, b), (a, c)}
            pairs.update((a, t) for t in self._of_parity(b[0] ^ c[0]))
            pairs.update((t, c) for t in self._of_parity(a[0] ^ b[0]))
            pairs.update((t, b) for t in self._of_parity(a[0] ^ c[0]))
            deps = [i for pair in pairs for i in position.get(pair, ())]
            if deps:
                self.checks[max(deps)].append((a, b, c))

    @property
    def space_size(self) -> int:
        return len(self.spec.coefficients) ** len(self.variables)

    @property
    def formula(self) -> str:
        return f"{len(self.spec.coefficients)}^{len(self.variables)}"

    def _compose(self, outer: Basis, pair: Pair, right: bool) -> List[Scalar]:
        """Σ_t c[pair][t]·[outer, t] при right=False или Σ_t c[pair][t]·[t, outer] при right=True."""
        inner = self.values[pair]
        parity = pair[0][0] ^ pair[1][0]
        size = _component_size(parity ^ outer[0], self.n, self.m)
        acc = [ZERO] * size
        for t, c in enumerate(inner):
            if not c:
                continue
            row = self.values[((parity, t + 1), outer) if right else (outer, (parity, t + 1))]
            for k, v in enumerate(row):
                if v:
                    acc[k] = acc[k] + c * v
        return acc

    def residual_vanishes(self, triple: Triple) -> bool:
        a, b, c = triple
        left = self._compose(a, (b, c), right=False)
        first = self._compose(c, (a, b), right=True)
        second = self._compose(b, (a, c), right=True)
        s = sign(b[0], c[0])
        return all(not (l - f + s * g) for l, f, g in zip(left, first, second))

    def _assign(self, index: int, value: Scalar) -> bool:
        pair, t = self.variables[index]
        self.values[pair][t] = value
        self.nodes += 1
        return all(self.residual_vanishes(triple) for triple in self.checks[index])

    def _release(self, index: int):
        pair, t = self.variables[index]
        self.values[pair][t] = ZERO

    def current(self) -> SuperAlgebra:
        table = {pair: tuple(vector) for pair, vector in self.values.items() if any(vector)}
        return SuperAlgebra(self.n, self.m, table)

    def run(self, prefix: Prefix, visit: Callable[[SuperAlgebra], None]):
        """Обходит поддерево под префиксом и вызывает visit на каждой допустимой таблице."""
        coefficients = self.spec.coefficients
        depth = 0
        try:
            for depth, choice in enumerate(prefix, start=1):
                if not self._assign(depth - 1, coefficients[choice]):
                    return
            self._descend(len(prefix), visit)
        finally:
            for index in range(depth):
                self._release(index)

    def _descend(self, index: int, visit: Callable[[SuperAlgebra], None]):
        if index == len(self.variables):
            visit(self.current())
            return
        for value in self.spec.coefficients:
            if self._assign(index, value):
                self._descend(index + 1, visit)
        self._release(index)


@dataclass
class CensusAggregate:
    """Частичная перепись одного поддерева; сливается в порядке префиксов."""
    nodes_visited: int = 0
    valid: int = 0
    nilpotent: int = 0
    non_nilpotent: int = 0
    histogram: Counter = field(default_factory=Counter)
    maximal_fingerprints: Counter = field(default_factory=Counter)
    prop31: Counter = field(default_factory=Counter)
    witnesses: List[Dict[str, object]] = field(default_factory=list)

    def merge(self, other: "CensusAggregate"):
        self.nodes_visited += other.nodes_visited
        self.valid += other.valid
        self.nilpotent += other.nilpotent
        self.non_nilpotent += other.non_nilpotent
        self.histogram.update(other.histogram)
        self.maximal_fingerprints.update(other.maximal_fingerprints)
        self.prop31.update(other.prop31)
        self.witnesses.extend(other.witnesses)


@dataclass
class CensusReport:
    """
    Итог переписи.

    Сумма гистограммы равна числу нильпотентных алгебр.
    """
    spec: SearchSpec
    search_space: int
    formula: str
    aggregate: CensusAggregate
    prefixes_done: int
    next_cursor: Optional[str]

    @property
    def histogram(self) -> List[Dict[str, object]]:
        rows = sorted(self.aggregate.histogram.items(), key=lambda item: (item[0][0], item[0][1]))
        return [{"nilindex": nilindex, "charseq": charseq, "count": count} for (nilindex, charseq), count in rows]

    @property
    def maximal_fingerprints(self) -> List[Dict[str, object]]:
        rows = sorted(self.aggregate.maximal_fingerprints.items())
        return [{"fingerprint": text, "count": count} for text, count in rows]

    def witnesses_of(self, kind: str) -> List[Dict[str, object]]:
        return [w for w in self.aggregate.witnesses if w["kind"] == kind]

    def to_dict(self) -> Dict[str, object]:
        return {
            "schema_version": SCHEMA_VERSION,
            "dims": [self.spec.n, self.spec.m],
            "coefficients": [str(c) for c in self.spec.coefficients],
            "triangular": self.spec.triangular,
            "search_space": self.search_space,
            "formula": self.formula,
            "nodes_visited": self.aggregate.nodes_visited,
            "valid": self.aggregate.valid,
            "nilpotent": self.aggregate.nilpotent,
            "non_nilpotent": self.aggregate.non_nilpotent,
            "histogram": self.histogram,
            "maximal_fingerprints": self.maximal_fingerprints,
            "prop31": dict(sorted(self.aggregate.prop31.items())),
            "witnesses": self.aggregate.witnesses,
            "prefixes_done": self.prefixes_done,
            "next_cursor": self.next_cursor,
        }

    def summary_lines(self) -> List[str]:
        lines = [
            f"Census ({self.spec.n}|{self.spec.m}) over {{{', '.join(str(c) for c in self.spec.coefficients)}}}"
            f"{' triangular' if self.spec.triangular else ''}: search space {self.formula} = {self.search_space}",
            f"nodes visited {self.aggregate.nodes_visited}; valid {self.aggregate.valid}; "
            f"nilpotent {self.aggregate.nilpotent}; not nilpotent {self.aggregate.non_nilpotent}",
        ]
        for row in self.histogram:
            lines.append(f"  nilindex {row['nilindex']}, charseq {row['charseq']}: {row['count']}")
        for row in self.maximal_fingerprints:
            lines.append(f"  maximal: {row['fingerprint']} ×{row['count']}")
        lines.append(f"witnesses: {len(self.aggregate.witnesses)}")
        if self.next_cursor is not None:
            lines.append(f"next cursor: {self.next_cursor}")
        return lines


def _witness(kind: str, algebra: SuperAlgebra, detail: str) -> Dict[str, object]:
    return {"kind": kind, "detail": detail, "table": serialize_lsa(algebra)}


def _census_visit(spec: SearchSpec, aggregate: CensusAggregate, algebra: SuperAlgebra):
    n, m = spec.n, spec.m
    aggregate.valid += 1
    if superidentity_violations(algebra):
        aggregate.witnesses.append(_witness("revalidation", algebra, "superidentity fails on re-check"))
    fp = invariant_service.fingerprint(algebra, spec.trials, spec.seed)
    charseq = str(fp.charseq) if fp.charseq is not None else "undefined"
    if fp.nilindex == NOT_NILPOTENT:
        aggregate.non_nilpotent += 1
        return
    aggregate.nilpotent += 1
    aggregate.histogram[(fp.nilindex, charseq)] += 1
    if fp.nilindex >= n + m:
        aggregate.maximal_fingerprints[fp.to_text()] += 1
    single = sum(fp.generator_dims) == 1
    if (fp.nilindex == n + m + 1) != single:
        aggregate.witnesses.append(_witness(
            "single_generated", algebra, f"nilindex {fp.nilindex}, generators {fp.generator_dims}"
        ))
    if fp.nilindex == n + m and not verification_service.satisfies_bound(fp, n, m):
        aggregate.witnesses.append(_witness("nilindex_bound", algebra, f"charseq {charseq}"))
    if m == 0:
        try:
            holds = verification_service.check_prop31(algebra)
        except NotApplicable as e:
            logger.debug(f"Утверждение о dim A³ неприменимо: {e.reason}")
            aggregate.prop31[f"not_applicable:{e.reason}"] += 1
            return
        aggregate.prop31["applicable"] += 1
        if not holds:
            aggregate.witnesses.append(_witness("prop31", algebra, "dim A^3 > n - 4"))


def _census_prefix(spec: SearchSpec, prefix: Prefix) -> CensusAggregate:
    search = PrunedSearch(spec)
    aggregate = CensusAggregate()
    search.run(prefix, partial(_census_visit, spec, aggregate))
    aggregate.nodes_visited = search.nodes
    return aggregate


def _enumerate_prefix(spec: SearchSpec, prefix: Prefix) -> List[SuperAlgebra]:
    found: List[SuperAlgebra] = []
    PrunedSearch(spec).run(prefix, found.append)
    return found


class SearchService:
    """
    Сервис перебора.

    Отвечает за:
    - Оценку пространства перебора и отказ при превышении бюджета
    - Поток допустимых таблиц в детерминированном порядке
    - Перепись: гистограмму (нильиндекс, характеристическая последовательность)
    - Деление работы по префиксам и продолжение с курсора
    """

    def __init__(self, budget: Optional[int] = None):
        self.budget = settings.search_budget if budget is None else budget
        logger.info(f"SearchService инициализирован: budget={self.budget}")

    def plan(self, spec: SearchSpec) -> Tuple[PrunedSearch, List[Prefix]]:
        """Проверяет бюджет и возвращает префиксы, которые нужно обойти."""
        search = PrunedSearch(spec)
        if search.space_size > self.budget and not spec.force:
            logger.error(f"Пространство {search.formula} превышает бюджет {self.budget}")
            raise SearchBudgetExceeded(search.space_size, search.formula, self.budget)
        depth = min(spec.split_depth, len(search.variables))
        prefixes = list(product(range(len(spec.coefficients)), repeat=depth))
        if spec.resume is not None:
            resume = tuple(spec.resume)
            if len(resume) != depth or any(not 0 <= c < len(spec.coefficients) for c in resume):
                raise SearchSpecError(
                    f"Курсор {format_cursor(resume)} не подходит: нужна глубина {depth}, "
                    f"значения от 0 до {len(spec.coefficients) - 1}"
                )
            prefixes = [p for p in prefixes if p >= resume]
        return search, prefixes

    def _run(self, spec: SearchSpec, prefixes: List[Prefix], worker) -> Iterator:
        if spec.jobs == 1 or len(prefixes) <= 1:
            for prefix in prefixes:
                yield worker(spec, prefix)
            return
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            yield from pool.map(partial(worker, spec), prefixes)

    def enumerate(self, spec: SearchSpec) -> Iterator[SuperAlgebra]:
        """
        Поток всех таблиц, прошедших супертождество.

        Порядок определяется порядком переменных и набора коэффициентов
        и не зависит от числа процессов.
        """
        _, prefixes = self.plan(spec)
        if spec.max_prefixes is not None:
            prefixes = prefixes[:spec.max_prefixes]
        for chunk in self._run(spec, prefixes, _enumerate_prefix):
            yield from chunk

    def census(self, spec: SearchSpec) -> CensusReport:
        """
        Перепись допустимых таблиц.

        Raises:
            SearchBudgetExceeded: Пространство больше бюджета и нет force
        """
        search, prefixes = self.plan(spec)
        next_cursor = None
        if spec.max_prefixes is not None and len(prefixes) > spec.max_prefixes:
            next_cursor = format_cursor(prefixes[spec.max_prefixes])
            prefixes = prefixes[:spec.max_prefixes]
        logger.info(
            f"Перепись ({spec.n}|{spec.m}): {search.formula} таблиц, {len(prefixes)} префиксов, jobs={spec.jobs}"
        )
        total = CensusAggregate()
        for done, part in enumerate(self._run(spec, prefixes, _census_prefix), start=1):
            total.merge(part)
            if done % 20 == 0:
                logger.info(f"Префиксов обработано: {done}/{len(prefixes)}, допустимых таблиц: {total.valid}")
        return CensusReport(
            spec=spec,
            search_space=search.space_size,
            formula=search.formula,
            aggregate=total,
            prefixes_done=len(prefixes),
            next_cursor=next_cursor,
        )

    def brute_force(self, spec: SearchSpec) -> Iterator[SuperAlgebra]:
        """Все таблицы без отсечения, отфильтрованные полной проверкой супертождества."""
        search = PrunedSearch(spec)
        for choice in product(spec.coefficients, repeat=len(search.variables)):
            for (pair, t), value in zip(search.variables, choice):
                search.values[pair][t] = value
            algebra = search.current()
            if not superidentity_violations(algebra):
                yield algebra


search_service = SearchService()
