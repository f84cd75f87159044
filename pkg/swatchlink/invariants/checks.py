"""
Identities and conjectures checked on computed invariants.

Every check returns a report and never raises for a failed identity.
"""

from itertools import combinations
from typing import Dict, List, Optional, Sequence

from swatchlink.algebra.laurent import MultiLaurent, divide_exact, divides
from swatchlink.algebra.polytext import format_polynomial
from swatchlink.exceptions import InexactDivisionError
from swatchlink.pydantic import BaseModel
from swatchlink.topology.diagram import PlanarDiagram, sublink
from swatchlink.topology.surgery import delete_component

from .alexander import mva
from .bracket import Q
from .determinant import determinant_from_mva
from .jones import jones
from .linking import linking_number


class CheckReport(BaseModel):
    name: str
    holds: bool
    details: Dict[str, str] = {}


def _t(name: str, variables: Sequence[str]) -> MultiLaurent:
    return MultiLaurent.variable(name, variables)


def torres_check(
    diagram: PlanarDiagram, component: int, value: Optional[MultiLaurent] = None
) -> CheckReport:
    """
    Setting t_i = 1 in the MVA of an n-component link gives the MVA of the
    link without K_i times (1 - prod_j t_j^lk(K_i, K_j)). When only a knot
    is left the factor is (t^lk - 1) / (t - 1) against its Alexander
    polynomial. Both sides are compared up to units.
    """
    n = diagram.component_count
    if value is None:
        value = mva(diagram, cross_check=False)
    variables = value.variables
    name = variables[component]
    left = value.specialize(name, 1)
    rest = left.variables

    smaller = delete_component(diagram, component)
    renamed = mva(smaller, cross_check=False)
    renamed = MultiLaurent(rest, renamed.terms)

    others = [j for j in range(n) if j != component]
    monomial = MultiLaurent.one(rest)
    for j in others:
        power = linking_number(diagram, component, j)
        monomial = monomial * _t(variables[j], rest) ** power
    if n - 1 >= 2:
        factor = 1 - monomial
    else:
        t = _t(rest[0], rest)
        factor = divide_exact(monomial - 1, t - 1)
    right = factor * renamed

    holds = (left.is_zero and right.is_zero) or (
        not left.is_zero and not right.is_zero and left.equal_up_to_units(right)
    )
    return CheckReport(
        name=f"torres({component})",
        holds=holds,
        details={
            "left": format_polynomial(left.canonical()),
            "right": format_polynomial(right.canonical()),
        },
    )


def multiplicity(value: MultiLaurent, factor: MultiLaurent) -> int:
    """Largest k with factor^k dividing value"""
    if value.is_zero:
        return 0
    count = 0
    while divides(factor, value):
        value = divide_exact(value, factor)
        count += 1
    return count


def brunnian_mva_form(
    diagram: PlanarDiagram, value: Optional[MultiLaurent] = None
) -> CheckReport:
    """
    The MVA of a filled Brunnian swatch with k components is (1 - t1)^k
    times a unit monomial plus p(t2, ...) times powers of (1 - t_j) for
    every swatch variable t_j. This checks the divisibility and that the
    cofactor collapses to a unit once every swatch variable is 1.
    """
    if value is None:
        value = mva(diagram, cross_check=False)
    variables = value.variables
    k = len(variables) - 2
    t1 = _t(variables[0], variables)
    details = {"components": str(k)}
    if value.is_zero or k < 1:
        details["reason"] = "vanishing MVA" if value.is_zero else "no swatch components"
        return CheckReport(name="brunnian-form", holds=False, details=details)

    power = multiplicity(value, 1 - t1)
    details["t1-multiplicity"] = str(power)
    if power < k:
        return CheckReport(name="brunnian-form", holds=False, details=details)
    cofactor = divide_exact(value, (1 - t1) ** k)
    details["cofactor"] = format_polynomial(cofactor.canonical())
    collapsed = cofactor.substitute_all(1, variables[2:])
    details["at-swatch-ones"] = format_polynomial(collapsed)
    exponents = [
        str(multiplicity(cofactor - collapsed.embed(variables), 1 - _t(v, variables)))
        if not (cofactor - collapsed.embed(variables)).is_zero
        else "inf"
        for v in variables[2:]
    ]
    details["swatch-multiplicities"] = ",".join(exponents)
    return CheckReport(name="brunnian-form", holds=collapsed.is_unit, details=details)


def conjecture_mva_check(
    product: MultiLaurent,
    factors: Sequence[MultiLaurent],
    components: int,
) -> CheckReport:
    """
    MVA(a *m b) (t1 - 1)^n equals MVA(a) MVA(b) up to units, for swatches
    with n components each. The witness is MVA(a) MVA(b) / MVA(a *m b).
    """
    variables = product.variables
    t1 = _t(variables[0], variables)
    expected = MultiLaurent.one(variables)
    for factor in factors:
        expected = expected * factor
    divisor = (t1 - 1) ** (components * (len(factors) - 1))
    left = product * divisor
    details = {
        "product": format_polynomial(product.canonical()),
        "expected": format_polynomial(expected.canonical()),
    }
    holds = not product.is_zero and left.equal_up_to_units(expected)
    if not product.is_zero:
        try:
            details["witness"] = format_polynomial(
                divide_exact(expected, product).canonical()
            )
        except InexactDivisionError:
            details["witness"] = "inexact"
    return CheckReport(name="mva-product", holds=holds, details=details)


def determinant_identity(
    product: int, factors: Sequence[int], components: int
) -> CheckReport:
    """
    Table-convention determinants of a meridional product of N swatches
    with n components: 2^((n + 1)(N - 1)) det(product) = prod det(factor).
    For n = 1 and N = 2 this is the factor 2^N.
    """
    expected = 1
    for value in factors:
        expected *= value
    power = (components + 1) * (len(factors) - 1)
    return CheckReport(
        name="det-product",
        holds=2**power * product == expected,
        details={
            "left": f"2^{power} * {product}",
            "right": " * ".join(str(v) for v in factors),
        },
    )


def split_evidence(
    diagram: PlanarDiagram, value: Optional[MultiLaurent] = None
) -> CheckReport:
    """
    "nonsplit-evidence" when the MVA does not vanish, or when no
    bipartition A, B of the components satisfies the split-union identity
    V(A + B) = (q + 1/q) V(A) V(B). Otherwise "split-consistent", which is
    not a proof of splitness.
    """
    n = diagram.component_count
    if value is None:
        value = mva(diagram, cross_check=False)
    if n < 2:
        return CheckReport(
            name="split-evidence", holds=False, details={"verdict": "not-applicable"}
        )
    if not value.is_zero:
        return CheckReport(
            name="split-evidence",
            holds=True,
            details={"verdict": "nonsplit-evidence", "certificate": "mva"},
        )
    whole = jones(diagram)
    delta = MultiLaurent(Q, {(1,): 1, (-1,): 1})
    for size in range(1, n // 2 + 1):
        for part in combinations(range(n), size):
            if size * 2 == n and 0 not in part:
                continue
            rest = [i for i in range(n) if i not in part]
            split_value = delta * jones(sublink(diagram, part)) * jones(sublink(diagram, rest))
            if split_value == whole:
                return CheckReport(
                    name="split-evidence",
                    holds=False,
                    details={
                        "verdict": "split-consistent",
                        "bipartition": f"{list(part)}|{rest}",
                    },
                )
    return CheckReport(
        name="split-evidence",
        holds=True,
        details={"verdict": "nonsplit-evidence", "certificate": "jones"},
    )


def determinant_pair(value: MultiLaurent) -> Dict[str, int]:
    return {c: determinant_from_mva(value, c) for c in ("table", "paper")}


def failed(reports: List[CheckReport]) -> List[CheckReport]:
    return [r for r in reports if not r.holds]
