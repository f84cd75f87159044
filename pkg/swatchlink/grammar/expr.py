"""
Syntax tree of swatch patterns.

`kp` is the meridional sum of k and p (stitches side by side), `k*l p` the
longitudinal sum (p stacked on top of k).
"""

from dataclasses import dataclass, field
from typing import Iterator, Tuple, Union


@dataclass(frozen=True)
class Primitive:
    name: str
    position: int = field(default=0, compare=False)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Meridional:
    children: Tuple["SwatchExpr", ...]

    def __str__(self):
        return "".join(_wrapped(child) for child in self.children)


@dataclass(frozen=True)
class Longitudinal:
    children: Tuple["SwatchExpr", ...]

    def __str__(self):
        return "*l".join(_wrapped(child) for child in self.children)


SwatchExpr = Union[Primitive, Meridional, Longitudinal]


def _wrapped(child: "SwatchExpr") -> str:
    if isinstance(child, Primitive):
        return child.name
    return f"({child})"


def primitives(expr: SwatchExpr) -> Iterator[Primitive]:
    """Leaves of the tree, left to right"""
    if isinstance(expr, Primitive):
        yield expr
        return
    for child in expr.children:
        yield from primitives(child)


def flatten(expr: SwatchExpr) -> SwatchExpr:
    """Merge nested sums of the same kind, which both operations allow"""
    if isinstance(expr, Primitive):
        return expr
    children = []
    for child in (flatten(c) for c in expr.children):
        if type(child) is type(expr):
            children.extend(child.children)
        else:
            children.append(child)
    if len(children) == 1:
        return children[0]
    return type(expr)(tuple(children))
