"""
Multivariate Laurent polynomials with integer coefficients.

Terms are stored as a mapping from exponent tuples to non-zero integers, in
the order of the variable names the polynomial was created with. Exact
division and gcd are delegated to sympy's sparse polynomial rings after
shifting both operands to ordinary polynomials.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from swatchlink.exceptions import InexactDivisionError, VariableMismatchError

Exponents = Tuple[int, ...]


class MultiLaurent:
    """An immutable element of Z[t1^±1, ..., tn^±1]"""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Exponents, int]] = None,
    ):
        self._variables = tuple(variables)
        clean: Dict[Exponents, int] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(self._variables):
                raise VariableMismatchError(
                    f"term {exponents} does not fit variables {self._variables}"
                )
            value = clean.get(exponents, 0) + int(coeff)
            if value:
                clean[exponents] = value
            else:
                clean.pop(exponents, None)
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiLaurent":
        return cls(variables)

    @classmethod
    def constant(cls, value: int, variables: Sequence[str]) -> "MultiLaurent":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "MultiLaurent":
        return cls.constant(1, variables)

    @classmethod
    def monomial(
        cls, exponents: Sequence[int], variables: Sequence[str], coeff: int = 1
    ) -> "MultiLaurent":
        return cls(variables, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str], power: int = 1):
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"{name} is not one of {variables}")
        exponents = [0] * len(variables)
        exponents[variables.index(name)] = power
        return cls(variables, {tuple(exponents): 1})

    # accessors

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_unit(self) -> bool:
        """True for ±t^a, the units of the Laurent ring"""
        return self.is_monomial and abs(next(iter(self._terms.values()))) == 1

    def min_exponents(self) -> Exponents:
        if not self._terms:
            return (0,) * len(self._variables)
        return tuple(min(column) for column in zip(*self._terms))

    def max_exponents(self) -> Exponents:
        if not self._terms:
            return (0,) * len(self._variables)
        return tuple(max(column) for column in zip(*self._terms))

    def leading_term(self) -> Tuple[Exponents, int]:
        """Lexicographically largest term, the first variable most significant"""
        exponents = max(self._terms)
        return exponents, self._terms[exponents]

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    # arithmetic

    def _coerce(self, other) -> "MultiLaurent":
        if isinstance(other, MultiLaurent):
            if other._variables != self._variables:
                raise VariableMismatchError(
                    f"{self._variables} and {other._variables} differ"
                )
            return other
        if isinstance(other, int):
            return MultiLaurent.constant(other, self._variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponents, coeff in other._terms.items():
            terms[exponents] = terms.get(exponents, 0) + coeff
        return MultiLaurent(self._variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                terms[exponents] = terms.get(exponents, 0) + c1 * c2
        return MultiLaurent(self._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            if not self.is_unit:
                raise InexactDivisionError(f"{self} is not invertible")
            return self.inverse() ** (-power)
        result = MultiLaurent.one(self._variables)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def inverse(self) -> "MultiLaurent":
        if not self.is_unit:
            raise InexactDivisionError(f"{self} is not a unit")
        exponents, coeff = next(iter(self._terms.items()))
        return MultiLaurent(self._variables, {tuple(-e for e in exponents): coeff})

    def shift(self, exponents: Sequence[int]) -> "MultiLaurent":
        """Multiply by the monomial t^exponents"""
        return MultiLaurent(
            self._variables,
            {tuple(a + b for a, b in zip(e, exponents)): c for e, c in self._terms.items()},
        )

    # comparisons

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(other, self._variables)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def canonical(self) -> "MultiLaurent":
        """
        Representative of the class up to units: minimal exponents are zero
        and the leading coefficient is positive. Zero is returned unchanged.
        """
        if self.is_zero:
            return self
        mins = self.min_exponents()
        shifted = self.shift([-m for m in mins])
        _, coeff = shifted.leading_term()
        return -shifted if coeff < 0 else shifted

    def equal_up_to_units(self, other: "MultiLaurent") -> bool:
        return self.canonical() == self._coerce(other).canonical()

    # evaluation and substitution

    def evaluate(self, point: Union[Mapping[str, int], Sequence[int]]):
        """
        Evaluate at an integer point. Returns an int when the value is
        integral and a Fraction otherwise.
        """
        if isinstance(point, Mapping):
            values = [point[name] for name in self._variables]
        else:
            values = list(point)
        if len(values) != len(self._variables):
            raise VariableMismatchError(f"expected {len(self._variables)} values")
        total = Fraction(0)
        for exponents, coeff in self._terms.items():
            term = Fraction(coeff)
            for value, exponent in zip(values, exponents):
                if exponent >= 0:
                    term *= Fraction(value) ** exponent
                else:
                    term /= Fraction(value) ** (-exponent)
            total += term
        return int(total) if total.denominator == 1 else total

    def specialize(self, name: str, value: int) -> "MultiLaurent":
        """Substitute an integer for one variable and drop it"""
        index = self._variables.index(name)
        variables = self._variables[:index] + self._variables[index + 1 :]
        terms: Dict[Exponents, int] = {}
        for exponents, coeff in self._terms.items():
            exponent = exponents[index]
            if exponent < 0 and abs(value) != 1:
                raise InexactDivisionError(
                    f"cannot specialize {name}={value} with negative powers"
                )
            factor = value ** abs(exponent)
            rest = exponents[:index] + exponents[index + 1 :]
            terms[rest] = terms.get(rest, 0) + coeff * factor
        return MultiLaurent(variables, terms)

    def substitute_all(self, value: int, names: Optional[Iterable[str]] = None):
        """Set every variable in `names` (default all) to the same integer"""
        result = self
        for name in list(names or self._variables):
            result = result.specialize(name, value)
        return result

    def rename(self, mapping: Mapping[str, str]) -> "MultiLaurent":
        return MultiLaurent(
            [mapping.get(name, name) for name in self._variables], self._terms
        )

    def embed(self, variables: Sequence[str]) -> "MultiLaurent":
        """Express the polynomial over another list of variables"""
        variables = tuple(variables)
        missing = [
            name
            for index, name in enumerate(self._variables)
            if name not in variables and any(e[index] for e in self._terms)
        ]
        if missing:
            raise VariableMismatchError(f"variables {missing} are not in {variables}")
        positions = [
            self._variables.index(name) if name in self._variables else None
            for name in variables
        ]
        terms = {
            tuple(0 if p is None else e[p] for p in positions): c
            for e, c in self._terms.items()
        }
        return MultiLaurent(variables, terms)

    def substitute_variable(self, name: str, replacement: Mapping[str, int]):
        """
        Replace variable `name` by a monomial of the other variables, given
        as a mapping name -> power. Used for t -> t^-1 style substitutions.
        """
        index = self._variables.index(name)
        terms: Dict[Exponents, int] = {}
        for exponents, coeff in self._terms.items():
            new = list(exponents)
            power = new[index]
            new[index] = 0
            for target, k in replacement.items():
                new[self._variables.index(target)] += power * k
            key = tuple(new)
            terms[key] = terms.get(key, 0) + coeff
        return MultiLaurent(self._variables, terms)

    # conversions

    def to_polynomial(self) -> Tuple[Exponents, Dict[Exponents, int]]:
        """Split into a monomial shift and a polynomial with no variable factor"""
        mins = self.min_exponents()
        poly = {
            tuple(a - m for a, m in zip(e, mins)): c for e, c in self._terms.items()
        }
        return mins, poly

    def to_sympy(self):
        import sympy

        symbols = sympy.symbols(self._variables) if self._variables else ()
        expr = sympy.Integer(0)
        for exponents, coeff in self._terms.items():
            term = sympy.Integer(coeff)
            for symbol, exponent in zip(symbols, exponents):
                term *= symbol**exponent
            expr += term
        return expr

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        for exponents in sorted(self._terms, reverse=True):
            coeff = self._terms[exponents]
            factors = []
            for name, exponent in zip(self._variables, exponents):
                if exponent == 1:
                    factors.append(name)
                elif exponent:
                    factors.append(f"{name}^{exponent}")
            monomial = "*".join(factors)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiLaurent({self._variables}, {str(self)!r})"


@lru_cache(maxsize=64)
def _polynomial_ring(variables: Tuple[str, ...]):
    return ring(",".join(variables), ZZ)[0]


def _check_variables(f: MultiLaurent, g: MultiLaurent):
    if f.variables != g.variables:
        raise VariableMismatchError(f"{f.variables} and {g.variables} differ")


def divide_exact(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    """
    Quotient f / g in the Laurent ring.

    Raises:
        ZeroDivisionError: if g is zero
        InexactDivisionError: if g does not divide f
    """
    _check_variables(f, g)
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return f
    variables = f.variables
    if g.is_monomial:
        exponents, coeff = next(iter(g.terms.items()))
        terms = {}
        for e, c in f.terms.items():
            if c % coeff:
                raise InexactDivisionError(f"{coeff} does not divide {f}")
            terms[tuple(a - b for a, b in zip(e, exponents))] = c // coeff
        return MultiLaurent(variables, terms)
    if not variables:
        raise InexactDivisionError("non-monomial constant divisor")

    f_shift, f_poly = f.to_polynomial()
    g_shift, g_poly = g.to_polynomial()
    ring_ = _polynomial_ring(variables)
    try:
        quotient = ring_.from_dict(f_poly).exquo(ring_.from_dict(g_poly))
    except ExactQuotientFailed as e:
        raise InexactDivisionError(f"{g} does not divide {f}") from e
    shift = tuple(a - b for a, b in zip(f_shift, g_shift))
    return MultiLaurent(
        variables,
        {
            tuple(a + s for a, s in zip(monom, shift)): int(coeff)
            for monom, coeff in quotient.items()
        },
    )


def divides(g: MultiLaurent, f: MultiLaurent) -> bool:
    try:
        divide_exact(f, g)
    except InexactDivisionError:
        return False
    return True


def gcd(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    """Greatest common divisor, returned in canonical form"""
    _check_variables(f, g)
    if f.is_zero:
        return g.canonical()
    if g.is_zero:
        return f.canonical()
    variables = f.variables
    if not variables:
        from math import gcd as int_gcd

        return MultiLaurent.constant(
            int_gcd(f.coefficient(()), g.coefficient(())), variables
        )
    ring_ = _polynomial_ring(variables)
    _, f_poly = f.to_polynomial()
    _, g_poly = g.to_polynomial()
    common = ring_.from_dict(f_poly).gcd(ring_.from_dict(g_poly))
    return MultiLaurent(
        variables, {monom: int(coeff) for monom, coeff in common.items()}
    ).canonical()


def variable_names(count: int, prefix: str = "t") -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))
