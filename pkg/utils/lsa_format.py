"""
Текстовый формат .lsa: заголовок `dims n m` и строки скобок.

    # комментарий
    dims 2 2
    [x1, y1] = 1/2 y2
    [y1, y1] = x2

Каждая строка разбирается PEG-грамматикой отдельно, поэтому позиция
синтаксической ошибки всегда указывается в строке исходного файла.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from parsimonious.exceptions import ParseError
from parsimonious.grammar import Grammar
from parsimonious.nodes import NodeVisitor

from core.exceptions import (
    LsaDuplicateBracket, LsaSyntaxError, LsaUnknownBasis, ScalarError, ScalarSyntaxError, SuperAlgebraError,
)
from core.models.scalar import ONE, Scalar, root_of_unity
from core.models.superalgebra import (
    EVEN, ODD, Basis, Pair, SuperAlgebra, basis_name, format_terms, make_superalgebra, pair_name,
)

logger = logging.getLogger(__name__)

GRAMMAR = Grammar(r"""
line          = ws statement? ws comment?
filled        = ws statement ws comment?
statement     = header / bracket
header        = "dims" ws1 int ws1 int
bracket       = "[" ws basis ws comma ws basis ws close ws equals ws rhs
comma         = ","
close         = "]"
equals        = "="
rhs           = sum / zero
zero          = "0"
sum           = signed_term more_terms*
more_terms    = ws sign ws term
signed_term   = sign_ws? term
term          = scaled / basis
scaled        = coefficient ws star? basis
star          = "*" ws
coefficient   = paren_scalar / scalar_term
paren_scalar  = "(" ws scalar ws ")"
scalar_literal = ws scalar ws
scalar        = signed_scalar more_scalars*
more_scalars  = ws sign ws scalar_term
signed_scalar = sign_ws? scalar_term
scalar_term   = factor more_factors*
more_factors  = ws "*" ws factor
factor        = root / number
root          = "z(" int ")" power?
power         = "^" int
number        = ~r"[0-9]+(/[0-9]+)?"
basis         = ~r"[xy]" int
sign_ws       = sign ws
sign          = ~r"[+-]"
int           = ~r"[0-9]+"
ws            = ~r"[ \t]*"
ws1           = ~r"[ \t]+"
comment       = ~r"#.*"
""")


def _optional(value):
    """Значение необязательного узла или None."""
    return value[0] if isinstance(value, list) and value else None


def _repeated(value) -> list:
    return value if isinstance(value, list) else []


class LsaVisitor(NodeVisitor):
    """Собирает из дерева разбора строки заголовок, скобку или скаляр."""

    unwrapped_exceptions = (SuperAlgebraError,)

    def visit_line(self, node, children):
        return _optional(children[1])

    def visit_filled(self, node, children):
        return children[1]

    def visit_statement(self, node, children):
        return children[0]

    def visit_header(self, node, children):
        return "dims", children[2], children[4]

    def visit_bracket(self, node, children):
        return "bracket", children[2], children[6], children[12]

    def visit_rhs(self, node, children):
        return children[0]

    def visit_zero(self, node, children):
        return []

    def visit_sum(self, node, children):
        first, rest = children
        return [first] + _repeated(rest)

    def visit_more_terms(self, node, children):
        _, sign, _, (coef, b) = children
        return coef * sign, b

    def visit_signed_term(self, node, children):
        sign, (coef, b) = children
        return coef * (_optional(sign) or 1), b

    def visit_term(self, node, children):
        value = children[0]
        if isinstance(value[0], Scalar):
            return value
        return ONE, value

    def visit_scaled(self, node, children):
        return children[0], children[3]

    def visit_coefficient(self, node, children):
        return children[0]

    def visit_paren_scalar(self, node, children):
        return children[2]

    def visit_scalar_literal(self, node, children):
        return children[1]

    def visit_scalar(self, node, children):
        first, rest = children
        total = first
        for term in _repeated(rest):
            total = total + term
        return total

    def visit_more_scalars(self, node, children):
        return children[3] * children[1]

    def visit_signed_scalar(self, node, children):
        sign, term = children
        return term * (_optional(sign) or 1)

    def visit_scalar_term(self, node, children):
        first, rest = children
        total = first
        for factor in _repeated(rest):
            total = total * factor
        return total

    def visit_more_factors(self, node, children):
        return children[3]

    def visit_factor(self, node, children):
        return children[0]

    def visit_root(self, node, children):
        order = children[1]
        if order < 1:
            raise ScalarSyntaxError(f"Порядок корня z({order}) должен быть ≥ 1")
        power = _optional(children[3])
        return root_of_unity(order, 1 if power is None else power)

    def visit_power(self, node, children):
        return children[1]

    def visit_number(self, node, children):
        try:
            return Scalar.rational(Fraction(node.text))
        except ZeroDivisionError:
            raise ScalarSyntaxError(f"Нулевой знаменатель в {node.text}")

    def visit_basis(self, node, children):
        parity = EVEN if node.text[0] == "x" else ODD
        return parity, children[1]

    def visit_sign_ws(self, node, children):
        return children[0]

    def visit_sign(self, node, children):
        return -1 if node.text == "-" else 1

    def visit_int(self, node, children):
        return int(node.text)

    def generic_visit(self, node, children):
        return children or node


_visitor = LsaVisitor()


def parse_scalar(text: str) -> Scalar:
    """
    Скалярный литерал: `p`, `p/q`, `z(N)^k`, произведения через `*`, суммы через `+`/`-`.

    Raises:
        ScalarSyntaxError: Литерал не разобран
    """
    try:
        tree = GRAMMAR["scalar_literal"].parse(text)
    except ParseError as e:
        raise ScalarSyntaxError(f"Не разобран скаляр {text!r} (столбец {e.column()})")
    try:
        return _visitor.visit(tree)
    except ScalarError:
        raise
    except SuperAlgebraError as e:
        raise ScalarSyntaxError(str(e))


@dataclass
class LsaDocument:
    """
    Разобранный .lsa-документ.

    Attributes:
        n, m: Размерности из заголовка
        brackets: Скобка → слагаемые (коэффициент, базис)
        lines: Скобка → номер строки
        comments: Тексты комментариев по порядку
    """
    n: int
    m: int
    brackets: Dict[Pair, List[Tuple[Scalar, Basis]]] = field(default_factory=dict)
    lines: Dict[Pair, int] = field(default_factory=dict)
    comments: List[str] = field(default_factory=list)

    def to_algebra(self) -> SuperAlgebra:
        table: Dict[Pair, Dict[Basis, Scalar]] = {}
        for pair, terms in self.brackets.items():
            value: Dict[Basis, Scalar] = {}
            for coef, b in terms:
                value[b] = value[b] + coef if b in value else coef
            table[pair] = value
        return make_superalgebra(self.n, self.m, table, self.lines)


def _check_basis(b: Basis, n: int, m: int, number: int):
    bound = n if b[0] == EVEN else m
    if not 1 <= b[1] <= bound:
        raise LsaUnknownBasis(f"строка {number}: {basis_name(b)} вне базиса ({n}|{m})")


def parse_lsa_document(text: str) -> LsaDocument:
    """
    Разбор .lsa-текста без сборки алгебры.

    Raises:
        LsaSyntaxError: Строка не соответствует грамматике или нет заголовка
        LsaUnknownBasis: Индекс базиса вне размерностей
        LsaDuplicateBracket: Скобка задана дважды
    """
    document: Optional[LsaDocument] = None
    comments: List[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        rule = "filled" if raw.split("#", 1)[0].strip() else "line"
        try:
            tree = GRAMMAR[rule].parse(raw)
        except ParseError as e:
            raise LsaSyntaxError(f"не разобрано {raw[e.pos:e.pos + 20]!r}", number, e.column())
        if "#" in raw:
            comments.append(raw[raw.index("#") + 1:].strip())
        statement = _visitor.visit(tree)
        if statement is None:
            continue
        if statement[0] == "dims":
            if document is not None:
                raise LsaSyntaxError("повторный заголовок dims", number, 1)
            document = LsaDocument(statement[1], statement[2])
            continue
        if document is None:
            raise LsaSyntaxError("скобка до заголовка dims", number, 1)
        _, a, b, terms = statement
        for basis in (a, b, *(t for _, t in terms)):
            _check_basis(basis, document.n, document.m, number)
        pair = (a, b)
        if pair in document.brackets:
            raise LsaDuplicateBracket(
                f"строка {number}: {pair_name(pair)} уже задана в строке {document.lines[pair]}"
            )
        document.brackets[pair] = terms
        document.lines[pair] = number
    if document is None:
        raise LsaSyntaxError("нет заголовка dims n m", 1, 1)
    document.comments = comments
    return document


def parse_lsa(text: str) -> SuperAlgebra:
    """Супералгебра из .lsa-текста; ошибки градуировки несут номер строки."""
    return parse_lsa_document(text).to_algebra()


def serialize_lsa(algebra: SuperAlgebra) -> str:
    """Каноническая запись: порядок скобок ee, eo, oe, oo, внутри лексикографически."""
    lines = [f"dims {algebra.n} {algebra.m}"]
    for (a, b), value in algebra.sorted_products():
        body = format_terms((coef, basis_name(basis)) for basis, coef in value.terms())
        lines.append(f"[{basis_name(a)}, {basis_name(b)}] = {body}")
    return "\n".join(lines) + "\n"
