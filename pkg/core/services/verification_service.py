"""
Сервис проверки утверждений классификации на переписях и корпусе семейств.

Переписи на конечной сетке коэффициентов дают свидетельства, а не
доказательства: каждый раздел отчёта называет сетку явно.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Tuple

from config.family_catalog import FamilyTag
from core.exceptions import FamilyDimsError, NotApplicable
from core.families.theorem_families import null_filiform, thm21_mixed
from core.models.invariants import NOT_NILPOTENT, Fingerprint
from core.models.matrix import Matrix
from core.models.scalar import Scalar
from core.models.superalgebra import (
    SuperAlgebra, change_basis, element_in, even_part, is_lie, multiply, right_annihilator,
    sign, subspace_elements, superidentity_violations,
)
from core.services.invariant_service import invariant_service

if TYPE_CHECKING:
    from core.services.family_service import CorpusMember
    from core.services.search_service import CensusReport

logger = logging.getLogger(__name__)

THEOREM_FAMILIES = (FamilyTag.NULL_FILIFORM, FamilyTag.THM21_MIXED)
EVEN_CHAIN_FAMILIES = (FamilyTag.L, FamilyTag.G, FamilyTag.M, FamilyTag.H)
ODD_CHAIN_FAMILIES = (FamilyTag.E_ODD, FamilyTag.E_EVEN, FamilyTag.F)


@dataclass
class VerificationSection:
    """
    Раздел отчёта проверки.

    Attributes:
        name: Машинное имя раздела
        grid: Описание сетки, на которой получено свидетельство
        checked: Сколько объектов проверено
        counterexamples: Сериализованные контрпримеры
        skipped: Причины пропуска и их число
    """
    name: str
    grid: str
    checked: int = 0
    counterexamples: List[Dict[str, object]] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, label: str, detail: str):
        self.counterexamples.append({"label": label, "detail": detail})

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "grid": self.grid,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": dict(sorted(self.skipped.items())),
            "counterexamples": self.counterexamples,
        }

    def summary(self) -> str:
        status = "OK" if self.passed else f"FAILED ({len(self.counterexamples)} counterexamples)"
        skipped = sum(self.skipped.values())
        tail = f", skipped {skipped}" if skipped else ""
        return f"{self.name} [{self.grid}]: {status}; checked {self.checked}{tail}"


def _grid(report: "CensusReport") -> str:
    coefficients = ", ".join(str(c) for c in report.spec.coefficients)
    return f"census ({report.spec.n}|{report.spec.m}) over {{{coefficients}}}"


class VerificationService:
    """
    Сервис проверки утверждений.

    Отвечает за:
    - Максимальный нильиндекс n+m+1 и однопорождённость
    - Границу нильиндекса: n₁ ≥ n−1 или m₁ = m при нильиндексе n+m
    - Оценку dim A³ ≤ n−4 для естественно градуированных не-Ли алгебр
    - Прогон корпуса семейств
    """

    def __init__(self):
        """Инициализация сервиса."""
        self.invariants = invariant_service
        logger.info("VerificationService инициализирован")

    # --- отдельные утверждения ---

    @staticmethod
    def satisfies_bound(fp: Fingerprint, n: int, m: int) -> bool:
        """n₁ ≥ n−1 или m₁ = m; без характеристической последовательности гипотеза пуста."""
        if fp.charseq is None:
            return True
        n1 = fp.charseq.even_part.parts[0] if fp.charseq.even_part.parts else 0
        m1 = fp.charseq.odd_part.parts[0] if fp.charseq.odd_part.parts else 0
        return n1 >= n - 1 or m1 == m

    def check_prop31(self, algebra: SuperAlgebra) -> bool:
        """
        dim A³ ≤ n−4 для нильпотентной алгебры Лейбница A (m = 0).

        Raises:
            NotApplicable: m ≠ 0, A не нильпотентна, однопорождена, n₁ > n−2
                или естественная градуировка является алгеброй Ли
        """
        n = algebra.n
        if algebra.m != 0:
            raise NotApplicable("odd_part")
        series = self.invariants.central_series(algebra)
        if not series.is_nilpotent:
            raise NotApplicable("not_nilpotent")
        if sum(self.invariants.generator_dims(algebra, series)) == 1:
            raise NotApplicable("single_generated")
        if n == 0:
            raise NotApplicable("zero_dimensional")
        charseq = self.invariants.characteristic_sequence(algebra)
        if charseq.even_part.parts[0] > n - 2:
            raise NotApplicable("n1_above_n_minus_2")
        if is_lie(self.invariants.natural_gradation(algebra).algebra):
            raise NotApplicable("lie_gradation")
        cube = series.terms[2].dim if len(series.terms) > 2 else 0
        return cube <= n - 4

    def annihilator_is_ideal(self, algebra: SuperAlgebra) -> bool:
        """[R(L), L] ⊆ R(L), [L, R(L)] ⊆ R(L) и [a,b] + (−1)^{αβ}[b,a] ∈ R(L)."""
        annihilator = right_annihilator(algebra)
        for z in subspace_elements(algebra, annihilator):
            for b in algebra.basis:
                element = algebra.element(b)
                if not element_in(annihilator, multiply(algebra, z, element)):
                    return False
                if not element_in(annihilator, multiply(algebra, element, z)):
                    return False
        for a in algebra.basis:
            for b in algebra.basis:
                square = algebra.bracket(a, b) + algebra.bracket(b, a).scale(sign(a[0], b[0]))
                if not element_in(annihilator, square):
                    return False
        return True

    @staticmethod
    def random_basis_change(rng: random.Random, n: int, m: int) -> Tuple[Matrix, Matrix]:
        """Случайные обратимые целочисленные P₀ (n×n) и P₁ (m×m) с элементами от −2 до 2."""
        def invertible(size: int) -> Matrix:
            while True:
                matrix = Matrix.from_rows(
                    [[Scalar.rational(rng.randint(-2, 2)) for _ in range(size)] for _ in range(size)], cols=size
                )
                if matrix.rank == size:
                    return matrix

        return invertible(n), invertible(m)

    def verify_isomorphism_invariance(self, members: Sequence["CorpusMember"], changes: int = 50,
                                      seed: int = 0) -> VerificationSection:
        """Отпечаток не меняется при случайных градуированных заменах базиса."""
        section = VerificationSection(
            "isomorphism_invariance", f"{len(members)} corpus members × {changes} basis changes, seed {seed}"
        )
        rng = random.Random(seed)
        for member in members:
            expected = self.invariants.fingerprint(member.algebra).to_text()
            for _ in range(changes):
                p_even, p_odd = self.random_basis_change(rng, member.n, member.m)
                copy = change_basis(member.algebra, p_even, p_odd)
                section.checked += 1
                actual = self.invariants.fingerprint(copy).to_text()
                if actual != expected:
                    section.fail(member.label, f"{actual} != {expected}")
        return section

    @staticmethod
    def model_fingerprint(n: int, m: int, trials: Optional[int] = None,
                          seed: Optional[int] = None) -> Optional[Fingerprint]:
        """Отпечаток однопорождённой модели при (n, m) или None, если такой нет."""
        try:
            model = null_filiform(n) if m == 0 else thm21_mixed(n, m)
        except FamilyDimsError:
            return None
        return invariant_service.fingerprint(model, trials, seed)

    # --- разделы по переписи ---

    def verify_maximal_nilindex(self, report: "CensusReport") -> VerificationSection:
        """
        Нильиндекс n+m+1 ⟺ однопорождённость; при m ∉ {0, n, n+1} его никто
        не достигает; достигшие совпадают по отпечатку с моделью.
        """
        n, m = report.spec.n, report.spec.m
        section = VerificationSection("maximal_nilindex", _grid(report), checked=report.aggregate.nilpotent)
        for witness in report.witnesses_of("single_generated"):
            section.fail(witness["table"], f"single-generated iff maximal nilindex: {witness['detail']}")
        attainers = [
            row for row in report.maximal_fingerprints if f";nilindex={n + m + 1};" in row["fingerprint"]
        ]
        if m not in (0, n, n + 1):
            for row in attainers:
                section.fail(row["fingerprint"], f"nilindex {n + m + 1} attained with m ∉ {{0, n, n+1}}")
            return section
        model = self.model_fingerprint(n, m, report.spec.trials, report.spec.seed)
        expected = model.to_text() if model is not None else None
        for row in attainers:
            if row["fingerprint"] != expected:
                section.fail(row["fingerprint"], f"does not match model {expected}")
        return section

    def verify_nilindex_bound(self, report: "CensusReport") -> VerificationSection:
        n, m = report.spec.n, report.spec.m
        checked = sum(row["count"] for row in report.histogram if row["nilindex"] == n + m)
        section = VerificationSection("nilindex_bound", _grid(report), checked=checked)
        for witness in report.witnesses_of("nilindex_bound"):
            section.fail(witness["table"], f"nilindex {n + m} with {witness['detail']}")
        return section

    def verify_prop31(self, report: "CensusReport") -> VerificationSection:
        prop31 = report.aggregate.prop31
        section = VerificationSection("cube_bound", _grid(report), checked=prop31.get("applicable", 0))
        for key, count in prop31.items():
            if key.startswith("not_applicable:"):
                section.skipped[key.split(":", 1)[1]] += count
        for witness in report.witnesses_of("prop31"):
            section.fail(witness["table"], witness["detail"])
        return section

    def verify_revalidation(self, report: "CensusReport") -> VerificationSection:
        section = VerificationSection("revalidation", _grid(report), checked=report.aggregate.valid)
        for witness in report.witnesses_of("revalidation"):
            section.fail(witness["table"], witness["detail"])
        return section

    def census_sections(self, report: "CensusReport") -> List[VerificationSection]:
        return [
            self.verify_revalidation(report),
            self.verify_maximal_nilindex(report),
            self.verify_nilindex_bound(report),
            self.verify_prop31(report),
        ]

    # --- корпус семейств ---

    def _expected_charseq(self, member: "CorpusMember") -> Optional[str]:
        n, m = member.n, member.m
        if member.tag in EVEN_CHAIN_FAMILIES:
            return f"({n - 1},1|{m})"
        if member.tag in ODD_CHAIN_FAMILIES:
            return f"({n}|{m - 1},1)"
        return None

    def sweep_corpus(self, corpus: Iterable["CorpusMember"], grid: str,
                     basis_change=None) -> List[VerificationSection]:
        """
        Проверяет каждый экземпляр: супертождество, нильиндекс, характеристическую
        последовательность, R(L) как идеал, границу нильиндекса и dim A³ чётной части.

        Args:
            corpus: Экземпляры семейств
            grid: Описание сетки параметров для отчёта
            basis_change: Необязательная функция algebra → (P₀, P₁); тогда
                проверяется также копия в новом базисе
        """
        sections = {
            name: VerificationSection(name, grid)
            for name in ("superidentity", "nilindex", "charseq", "annihilator_ideal",
                         "nilindex_bound", "cube_bound", "single_generated")
        }
        for member in corpus:
            algebra = member.algebra
            copies = [algebra]
            if basis_change is not None:
                copies.append(change_basis(algebra, *basis_change(algebra)))
            for copy in copies:
                self._sweep_one(sections, member, copy)
        logger.info(f"Корпус проверен: {sections['superidentity'].checked} алгебр")
        return list(sections.values())

    def _sweep_one(self, sections: Dict[str, VerificationSection], member: "CorpusMember", algebra: SuperAlgebra):
        n, m = member.n, member.m
        label = member.label
        sections["superidentity"].checked += 1
        if superidentity_violations(algebra):
            sections["superidentity"].fail(label, "superidentity violated")
            return
        fp = self.invariants.fingerprint(algebra)
        single = sum(fp.generator_dims) == 1
        # Leib_{1,1}(1) однопорождена, как и модели теорем
        expected = n + m + 1 if member.tag in THEOREM_FAMILIES or single else n + m
        sections["nilindex"].checked += 1
        if fp.nilindex != expected:
            sections["nilindex"].fail(label, f"nilindex {fp.nilindex}, expected {expected}")
        charseq = self._expected_charseq(member)
        if charseq is not None:
            sections["charseq"].checked += 1
            if str(fp.charseq) != charseq:
                sections["charseq"].fail(label, f"charseq {fp.charseq}, expected {charseq}")
        sections["annihilator_ideal"].checked += 1
        if not self.annihilator_is_ideal(algebra):
            sections["annihilator_ideal"].fail(label, "R(L) is not an ideal")
        if fp.nilindex == n + m:
            sections["nilindex_bound"].checked += 1
            if not self.satisfies_bound(fp, n, m):
                sections["nilindex_bound"].fail(label, f"charseq {fp.charseq}")
        if fp.nilindex != NOT_NILPOTENT:
            sections["single_generated"].checked += 1
            if (fp.nilindex == n + m + 1) != single or (member.tag in THEOREM_FAMILIES and not single):
                sections["single_generated"].fail(label, f"nilindex {fp.nilindex}, generators {fp.generator_dims}")
        try:
            holds = self.check_prop31(even_part(algebra))
        except NotApplicable as e:
            logger.debug(f"{label}: оценка dim A³ неприменима ({e.reason})")
            sections["cube_bound"].skipped[e.reason] += 1
            return
        sections["cube_bound"].checked += 1
        if not holds:
            sections["cube_bound"].fail(label, "dim A^3 > n - 4 for the even part")


verification_service = VerificationService()
