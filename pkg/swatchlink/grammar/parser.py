"""
Parser of the swatch pattern language.

Grammar (whitespace is ignored everywhere):

    pattern     := meridional ("*l" meridional)*
    meridional  := atom atom*
    atom        := NAME | "(" pattern ")"

Juxtaposition is the meridional sum and binds tighter than the longitudinal
`*l` (also accepted as `*_l`). NAME is matched against the catalog names,
longest name first, so `k_tp` reads as `k_t` followed by `p`.

Example:
    ```python
    from swatchlink.grammar.parser import parse

    parse("(kp)*l(pk)")
    # Longitudinal((Meridional((k, p)), Meridional((p, k))))
    ```
"""

from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from swatchlink.exceptions import (
    PatternSyntaxError,
    ProfileMismatchError,
    UnknownPrimitiveError,
)

from .expr import Longitudinal, Meridional, Primitive, SwatchExpr, flatten

if TYPE_CHECKING:
    from .catalog import TileCatalog

# (kind, value, position)
Token = Tuple[str, str, int]

_LONGITUDINAL_OPERATORS = ("*_l", "*l")


def _name_at(text: str, position: int, names: Sequence[str]) -> Optional[str]:
    for name in names:
        if text.startswith(name, position):
            return name
    return None


def _unknown_name(text: str, position: int, names: Sequence[str]) -> str:
    end = position + 1
    while (
        end < len(text)
        and (text[end].isalnum() or text[end] == "_")
        and _name_at(text, end, names) is None
    ):
        end += 1
    return text[position:end]


def tokenize(text: str, names: Sequence[str]) -> List[Token]:
    names = sorted(names, key=len, reverse=True)
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue
        if char in "()":
            tokens.append((char, char, position))
            position += 1
            continue
        if char == "*":
            operator = next(
                (op for op in _LONGITUDINAL_OPERATORS if text.startswith(op, position)),
                None,
            )
            if operator is None:
                raise PatternSyntaxError("expected '*l'", position)
            tokens.append(("*l", operator, position))
            position += len(operator)
            continue
        name = _name_at(text, position, names)
        if name is None:
            if char.isalnum() or char == "_":
                raise UnknownPrimitiveError(_unknown_name(text, position, names), position)
            raise PatternSyntaxError(f"unexpected character {char!r}", position)
        tokens.append(("name", name, position))
        position += len(name)
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token], length: int):
        self.tokens = tokens
        self.index = 0
        self.length = length

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self) -> int:
        token = self.peek()
        return token[2] if token is not None else self.length

    def pattern(self) -> SwatchExpr:
        children = [self.meridional()]
        while self.peek() is not None and self.peek()[0] == "*l":
            self.index += 1
            children.append(self.meridional())
        return children[0] if len(children) == 1 else Longitudinal(tuple(children))

    def meridional(self) -> SwatchExpr:
        children = []
        while self.peek() is not None and self.peek()[0] in ("name", "("):
            children.append(self.atom())
        if not children:
            raise PatternSyntaxError("expected a tile name or '('", self.position())
        return children[0] if len(children) == 1 else Meridional(tuple(children))

    def atom(self) -> SwatchExpr:
        kind, value, position = self.tokens[self.index]
        self.index += 1
        if kind == "name":
            return Primitive(value, position)
        inner = self.pattern()
        token = self.peek()
        if token is None or token[0] != ")":
            raise PatternSyntaxError("expected ')'", self.position())
        self.index += 1
        return inner


def parse_expression(text: str, names: Sequence[str]) -> SwatchExpr:
    """Parse without checking seam profiles"""
    tokens = tokenize(text, names)
    parser = _Parser(tokens, len(text))
    expr = parser.pattern()
    if parser.peek() is not None:
        kind, value, position = parser.peek()
        raise PatternSyntaxError(f"unexpected {value!r}", position)
    return flatten(expr)


Interface = Tuple[Tuple[int, ...], Tuple[int, ...]]


def interface_of(expr: SwatchExpr, catalog: "TileCatalog") -> Interface:
    """
    Directions of the strands crossing the v-seam and the h-seam, bottom to
    top and left to right. Raises ProfileMismatchError on the first sum whose
    children do not fit.
    """
    if isinstance(expr, Primitive):
        profile = catalog.profile(expr.name)
        return (
            tuple(p.direction for p in profile.v),
            tuple(p.direction for p in profile.h),
        )
    parts = [interface_of(child, catalog) for child in expr.children]
    if isinstance(expr, Meridional):
        for left, right in zip(parts, parts[1:]):
            if left[0] != right[0]:
                raise ProfileMismatchError(left[0], right[0], "v")
        return parts[0][0], tuple(d for part in parts for d in part[1])
    for lower, upper in zip(parts, parts[1:]):
        if lower[1] != upper[1]:
            raise ProfileMismatchError(lower[1], upper[1], "h")
    return tuple(d for part in parts for d in part[0]), parts[0][1]


def parse(text: str, catalog: Optional["TileCatalog"] = None) -> SwatchExpr:
    """
    Parse a pattern and check that every sum glues matching seams.

    Raises:
        PatternSyntaxError: malformed text, with the offending position
        UnknownPrimitiveError: a name that is not in the catalog
        ProfileMismatchError: a sum of tiles whose seams do not fit
    """
    if catalog is None:
        from .catalog import default_catalog

        catalog = default_catalog()
    expr = parse_expression(text, catalog.names)
    interface_of(expr, catalog)
    return expr
