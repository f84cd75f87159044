"""
Reading and printing polynomial text.

The reader accepts the notation of published tables: factored products,
implicit multiplication (``2q^{-6}(1+q^2)``, ``t2t3``), LaTeX exponents and
``\\frac{a}{b}`` coefficients, subscripted variables (``t_1``) and a missing
closing parenthesis at the end of a line. Rational coefficients are allowed
while parsing as long as the expanded polynomial has integer coefficients.
"""

import re
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import parse_expr

from swatchlink.exceptions import PolynomialParseError

from .laurent import MultiLaurent

_NAMES = r"t\d+|q"
_NUMBERS_AND_OPERATORS = r"(\d+(?:\.\d+)?)|(\*\*|[-+*/^()])"
_OPERAND_END = {"name", "number", ")"}
_OPERAND_START = {"name", "number", "("}


def _strip_latex(text: str) -> str:
    text = text.replace("$", "").replace("\\left", "").replace("\\right", "")
    text = text.replace("\\cdot", "*").replace("\\times", "*")
    text = text.replace("\u2212", "-").replace("\u2013", "-")
    text = re.sub(r"\\frac\s*\{([^{}]*)\}\s*\{([^{}]*)\}", r"((\1)/(\2))", text)
    text = re.sub(r"t_\{?(\d+)\}?", r"t\1", text)
    # exponents written q^-{5} or q^{-5} or q^5
    text = re.sub(r"\^\s*-\s*\{([^{}]*)\}", r"^(-\1)", text)
    text = re.sub(r"\^\s*\{([^{}]*)\}", r"^(\1)", text)
    return text.replace("{", "(").replace("}", ")")


def _token_pattern(variables: Sequence[str] = ()) -> "re.Pattern":
    """
    Declared variable names, longest first. Single letters come after t1,
    t2, ... so that a declared ``t`` does not split ``t2``.
    """
    declared = sorted(set(variables), key=len, reverse=True)
    long_names = [re.escape(name) for name in declared if len(name) > 1]
    letters = [re.escape(name) for name in declared if len(name) == 1]
    names = "|".join(long_names + [_NAMES] + letters)
    return re.compile(rf"\s*(?:({names})|{_NUMBERS_AND_OPERATORS})")


def _tokenize(text: str, variables: Sequence[str] = ()) -> List[tuple]:
    pattern = _token_pattern(variables)
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = pattern.match(text, position)
        if not match:
            raise PolynomialParseError(
                f"unexpected character {text[position]!r} at position {position}"
            )
        name, number, op = match.groups()
        if name:
            tokens.append(("name", name))
        elif number:
            tokens.append(("number", number))
        else:
            tokens.append((op if op in "()" else "op", op))
        position = match.end()
    return tokens


def _to_python(text: str, variables: Sequence[str] = ()) -> Tuple[str, List[str]]:
    """Python source of the expression and the variable names it uses"""
    tokens = _tokenize(_strip_latex(text), variables)
    names = sorted({value for kind, value in tokens if kind == "name"}, key=_variable_key)
    pieces = []
    depth = 0
    previous = None
    for kind, value in tokens:
        if previous in _OPERAND_END and kind in _OPERAND_START:
            pieces.append("*")
        if kind == "(":
            depth += 1
        elif kind == ")":
            depth -= 1
            if depth < 0:
                raise PolynomialParseError("unbalanced closing parenthesis")
        if kind == "number" and "." in value:
            value = f"Rational('{value}')"
        pieces.append("**" if value == "^" else value)
        previous = kind
    pieces.append(")" * depth)
    return "".join(pieces), names


def parse_polynomial(
    text: str, variables: Optional[Sequence[str]] = None, scale: int = 1
) -> MultiLaurent:
    """
    Parse polynomial text into a MultiLaurent.

    Args:
        text (str): the polynomial, factored or expanded
        variables (Sequence[str], optional): variables of the result. When
            omitted, the variables found in the text are used in sorted order.
        scale (int): factor applied before the coefficients are checked, so
            that values printed with half-integer coefficients can be read
            as twice the polynomial

    Raises:
        PolynomialParseError: when the text is malformed or does not have
            integer coefficients
    """
    if not text or not text.strip():
        raise PolynomialParseError("empty polynomial text")
    source, names = _to_python(text, variables or ())
    if variables is None:
        variables = tuple(names)
    variables = tuple(variables)
    unknown = set(names) - set(variables)
    if unknown:
        raise PolynomialParseError(f"unexpected variables {sorted(unknown)}")

    symbols = {name: sympy.Symbol(name) for name in variables}
    try:
        expr = parse_expr(
            source,
            local_dict={**symbols, "Rational": sympy.Rational},
            evaluate=True,
        )
    except Exception as e:  # sympy raises a zoo of error types
        raise PolynomialParseError(f"cannot parse {text!r}: {e}") from e

    expr = sympy.expand(expr * scale)
    terms = {}
    for monomial, coeff in expr.as_coefficients_dict().items():
        coeff = sympy.Rational(coeff)
        powers = monomial.as_powers_dict()
        exponents = []
        for name in variables:
            exponent = powers.get(symbols[name], 0)
            if not sympy.Integer(exponent) == exponent:
                raise PolynomialParseError(f"non-integral exponent in {text!r}")
            exponents.append(int(exponent))
        leftovers = set(powers) - set(symbols.values()) - {sympy.Integer(1)}
        if leftovers:
            raise PolynomialParseError(f"not a Laurent polynomial: {text!r}")
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + coeff
    for key, coeff in terms.items():
        if coeff.q != 1:
            raise PolynomialParseError(f"non-integral coefficient {coeff} in {text!r}")
    return MultiLaurent(variables, {key: int(c) for key, c in terms.items()})


def format_polynomial(poly: MultiLaurent) -> str:
    """Expanded text that parse_polynomial reads back to the same value"""
    return str(poly)


def _variable_key(name: str):
    if re.fullmatch(r"t\d+", name):
        return (0, int(name[1:]), name)
    return (1, 0, name)
