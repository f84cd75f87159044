"""
Wirtinger presentations of link diagrams and the first homology of the
complement.
"""

from typing import Dict, List, Tuple

from swatchlink.algebra.free_group import FreeWord, Presentation
from swatchlink.algebra.matrices import smith_invariants
from swatchlink.pydantic import BaseModel
from swatchlink.topology.diagram import PlanarDiagram, validate_diagram


def over_arcs(diagram: PlanarDiagram) -> Dict[int, int]:
    """
    Map every arc label to the index of the over-arc it belongs to. Arcs
    are joined where they pass over a crossing. Indices follow the order
    of the components and of the arcs inside them.
    """
    parent = {label: label for comp in diagram.components for label in comp}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for crossing in diagram.crossings:
        a, b = find(crossing.over_in), find(crossing.over_out)
        if a != b:
            parent[max(a, b)] = min(a, b)

    index: Dict[int, int] = {}
    result: Dict[int, int] = {}
    for comp in diagram.components:
        for label in comp:
            root = find(label)
            if root not in index:
                index[root] = len(index)
            result[label] = index[root]
    return result


def wirtinger(diagram: PlanarDiagram) -> Presentation:
    """
    One generator per over-arc (and per crossingless loop) and one relator
    per crossing. With x_i entering and x_j leaving under the over-arc x_k
    the relator is x_k^-1 x_i x_k x_j^-1 at a positive crossing and
    x_k x_i x_k^-1 x_j^-1 at a negative one.
    """
    validate_diagram(diagram).raise_for_violations()
    arcs = over_arcs(diagram)
    count = len(set(arcs.values()))

    generators: List[str] = [f"x{i + 1}" for i in range(count)]
    components: List[int] = [0] * count
    for label, generator in arcs.items():
        components[generator] = diagram.component_of[label]
    for index, comp in enumerate(diagram.components):
        if not comp:
            generators.append(f"x{len(generators) + 1}")
            components.append(index)

    relators = []
    for crossing in diagram.crossings:
        i = generators[arcs[crossing.arcs[0]]]
        j = generators[arcs[crossing.arcs[2]]]
        k = generators[arcs[crossing.over_in]]
        conjugate = -1 if crossing.sign > 0 else 1
        relators.append(
            FreeWord(((k, conjugate), (i, 1), (k, -conjugate), (j, -1)))
        )
    return Presentation(
        tuple(generators),
        tuple(relators),
        tuple(components),
        diagram.component_count,
    )


class HomologyGroup(BaseModel):
    """A finitely generated abelian group Z^rank + sum of Z/t"""

    rank: int
    torsion: List[int] = []
    meridians: List[str] = []

    def __str__(self):
        pieces = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(pieces) if pieces else "0"


def relation_matrix(presentation: Presentation) -> List[List[int]]:
    """Exponent sums of every generator in every relator"""
    return [
        [relator.exponent_sum(g) for g in presentation.generators]
        for relator in presentation.relators
    ]


def first_homology(presentation: Presentation) -> HomologyGroup:
    """
    Abelianization of the presented group, read off the Smith normal form
    of the relation matrix. `meridians` names one generator per component,
    the free generators of H_1 of a link complement.
    """
    invariants = smith_invariants(
        relation_matrix(presentation), len(presentation.generators)
    )
    rank = sum(1 for value in invariants if value == 0)
    torsion = sorted(value for value in invariants if value > 1)

    meridians: List[str] = []
    seen = set()
    for generator, component in zip(
        presentation.generators, presentation.generator_components
    ):
        if component not in seen:
            seen.add(component)
            meridians.append(generator)
    return HomologyGroup(rank=rank, torsion=torsion, meridians=meridians)


def generator_classes(presentation: Presentation) -> List[Tuple[str, ...]]:
    """Generators grouped by component, all of which coincide in H_1"""
    groups: Dict[int, List[str]] = {}
    for generator, component in zip(
        presentation.generators, presentation.generator_components
    ):
        groups.setdefault(component, []).append(generator)
    return [tuple(groups[c]) for c in sorted(groups)]
