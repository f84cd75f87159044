"""
The properties every swatch has, checked on one tangle.

1. f(L) is ribbon. Only the necessary condition is checked: ribbon links
   are algebraically split, so all linking numbers within f(L) vanish.
2. Every component is in the homology class of a row, (0, 1).
3. Swatch components do not link each other.
4. f(L) + f(l) is not split, judged by `split_evidence`.
5. Every component is unknotted, as judged by the simplifier. A component
   that stays knotted is also tested for splitting off f(l).

Items 1 and 5 are reported as necessary conditions only.
"""

from typing import List, Optional

from swatchlink.helpers.logger import Logger
from swatchlink.pydantic import BaseModel
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.diagram import sublink
from swatchlink.topology.tangle import TorusTangle, homology_class

from .checks import CheckReport, split_evidence
from .linking import linking_matrix

NECESSARY_ONLY = "necessary condition only"


class PropertiesReport(BaseModel):
    name: str
    items: List[CheckReport] = []

    @property
    def passed(self) -> bool:
        return all(item.holds for item in self.items)

    def item(self, number: int) -> List[CheckReport]:
        prefix = f"item {number}"
        return [i for i in self.items if i.name.startswith(prefix)]


def swatch_properties_report(
    tangle: TorusTangle,
    budget=None,
    fabric_face: str = "front",
    logger: Optional[Logger] = None,
) -> PropertiesReport:
    """
    Check the swatch properties on a closed tangle. Failed items are
    reported, never raised.
    """
    from swatchlink.simplifier.budget import Verdict
    from swatchlink.simplifier.search import is_unlink

    diagram = dehn_fill(tangle, fabric_face)
    n = tangle.component_count
    swatch = list(range(2, n + 2))
    matrix = linking_matrix(diagram)
    items: List[CheckReport] = []

    pairs = [(i, j) for a, i in enumerate(swatch) for j in swatch[a + 1 :]]
    nonzero = [f"{i - 2},{j - 2}" for i, j in pairs if matrix.entry(i, j) != 0]
    items.append(
        CheckReport(
            name="item 1: ribbon",
            holds=not nonzero,
            details={"scope": NECESSARY_ONLY, "linked-pairs": ";".join(nonzero)},
        )
    )

    for index in range(n):
        found = homology_class(tangle, index)
        items.append(
            CheckReport(
                name=f"item 2: class of component {index}",
                holds=found == (0, 1),
                details={"class": str(found)},
            )
        )

    among = [[matrix.entry(i, j) for j in swatch] for i in swatch]
    items.append(
        CheckReport(
            name="item 3: unlinked components",
            holds=not nonzero,
            details={"matrix": str(among)},
        )
    )

    if n >= 1:
        evidence = split_evidence(sublink(diagram, [1] + swatch))
        items.append(
            CheckReport(
                name="item 4: not split",
                holds=evidence.holds,
                details=evidence.details,
            )
        )

    for index, component in enumerate(swatch):
        knot = sublink(diagram, [component])
        found = is_unlink(knot, budget, logger=logger)
        details = {"scope": NECESSARY_ONLY, "unknot": found.verdict.value}
        if found.certificate is not None:
            details["certificate"] = found.certificate.invariant
        if found.verdict != Verdict.YES:
            with_axis = split_evidence(sublink(diagram, [component, 1]))
            details["with-longitude-axis"] = with_axis.details["verdict"]
        items.append(
            CheckReport(
                name=f"item 5: component {index} unknotted",
                holds=found.verdict != Verdict.NO,
                details=details,
            )
        )

    if logger is not None:
        failed = [item.name for item in items if not item.holds]
        logger.log(f"Swatch properties of {tangle.name}: {len(failed)} failed")
    return PropertiesReport(name=tangle.name or "swatch", items=items)
