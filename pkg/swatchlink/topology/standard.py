"""
Small named links used as fixtures by the fuzzing checks and the tests.
"""

import numpy as np

from .diagram import Crossing, PlanarDiagram, mirror
from .projection import diagram_from_curves


def unknot() -> PlanarDiagram:
    return PlanarDiagram((), ((),))


def unlink(components: int) -> PlanarDiagram:
    return PlanarDiagram((), ((),) * components)


def hopf(sign: int = 1) -> PlanarDiagram:
    """Hopf link, with linking number equal to `sign`"""
    positive = PlanarDiagram(
        (Crossing((3, 2, 4, 1), 1), Crossing((2, 3, 1, 4), 1)),
        ((1, 2), (3, 4)),
    )
    if sign > 0:
        return positive
    return PlanarDiagram(
        (Crossing((4, 1, 3, 2), -1), Crossing((2, 3, 1, 4), -1)),
        ((1, 2), (3, 4)),
    )


def left_trefoil() -> PlanarDiagram:
    return PlanarDiagram(
        (
            Crossing((1, 4, 2, 5), -1),
            Crossing((3, 6, 4, 1), -1),
            Crossing((5, 2, 6, 3), -1),
        ),
        ((1, 2, 3, 4, 5, 6),),
    )


def right_trefoil() -> PlanarDiagram:
    return mirror(left_trefoil())


def figure_eight() -> PlanarDiagram:
    return PlanarDiagram(
        (
            Crossing((4, 2, 5, 1), 1),
            Crossing((8, 6, 1, 5), 1),
            Crossing((6, 3, 7, 4), -1),
            Crossing((2, 7, 3, 8), -1),
        ),
        ((1, 2, 3, 4, 5, 6, 7, 8),),
    )


def borromean(samples: int = 48) -> PlanarDiagram:
    """Borromean rings from three mutually perpendicular ellipses"""
    t = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    ellipses = [
        np.stack([2 * np.cos(t), np.sin(t), 0 * t], axis=1),
        np.stack([0 * t, 2 * np.cos(t), np.sin(t)], axis=1),
        np.stack([np.sin(t), 0 * t, 2 * np.cos(t)], axis=1),
    ]
    # tip the picture so that no ellipse is seen edge-on
    angle_x, angle_y = 0.61, 0.43
    rx = np.array(
        [[1, 0, 0], [0, np.cos(angle_x), -np.sin(angle_x)], [0, np.sin(angle_x), np.cos(angle_x)]]
    )
    ry = np.array(
        [[np.cos(angle_y), 0, np.sin(angle_y)], [0, 1, 0], [-np.sin(angle_y), 0, np.cos(angle_y)]]
    )
    rotation = ry @ rx
    return diagram_from_curves([e @ rotation.T for e in ellipses])


STANDARD_DIAGRAMS = {
    "unknot": unknot,
    "hopf": hopf,
    "left_trefoil": left_trefoil,
    "right_trefoil": right_trefoil,
    "figure_eight": figure_eight,
    "borromean": borromean,
}
