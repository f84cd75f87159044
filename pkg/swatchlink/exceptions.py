"""Swatchlink's custom exceptions.

This module contains the implementation of Custom Exceptions.

"""

from typing import List, Optional


class SwatchlinkError(Exception):
    """
    Base class of every error raised by swatchlink.

    Args:
        Exception (Exception): SwatchlinkError
    """

    kind = "error"


class InvalidDiagramError(SwatchlinkError):
    """
    Raised when a planar diagram does not describe an oriented link.

    Args:
        Exception (Exception): InvalidDiagramError
    """

    kind = "invalid-diagram"

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid diagram")


class UnknownCrossingError(SwatchlinkError):
    """
    Raised when a crossing index is not part of the diagram.

    Args:
        Exception (Exception): UnknownCrossingError
    """

    kind = "unknown-crossing"


class MoveNotApplicableError(SwatchlinkError):
    """
    Raised when a Reidemeister move does not fit the diagram at the given
    location.

    Args:
        Exception (Exception): MoveNotApplicableError
    """

    kind = "move-not-applicable"

    def __init__(self, move, reason: str):
        self.move = move
        self.reason = reason
        super().__init__(f"{move}: {reason}")


class IncompatibleBandError(SwatchlinkError):
    """
    Raised when a band cannot be attached along the given arcs.

    Args:
        Exception (Exception): IncompatibleBandError
    """

    kind = "incompatible-band"


class ComponentIndexError(SwatchlinkError):
    """
    Raised when a component index is out of range.

    Args:
        Exception (Exception): ComponentIndexError
    """

    kind = "component-index"


class OpenComponentError(SwatchlinkError):
    """
    Raised when a tangle has a component that does not close up.

    Args:
        Exception (Exception): OpenComponentError
    """

    kind = "open-component"


class InvalidTangleError(SwatchlinkError):
    """
    Raised when tile pieces do not glue into closed components.

    Args:
        Exception (Exception): InvalidTangleError
    """

    kind = "invalid-tangle"


class DegenerateProjectionError(SwatchlinkError):
    """
    Raised when no generic projection of a set of space curves was found.

    Args:
        Exception (Exception): DegenerateProjectionError
    """

    kind = "degenerate-projection"


class ProfileMismatchError(SwatchlinkError):
    """
    Raised when two swatches are composed along seams that do not match.

    Args:
        Exception (Exception): ProfileMismatchError
    """

    kind = "profile-mismatch"

    def __init__(self, left, right, seam: str):
        self.left = left
        self.right = right
        self.seam = seam
        super().__init__(f"{seam}-seam profiles differ: {left} != {right}")


class UnknownPrimitiveError(SwatchlinkError):
    """
    Raised when a pattern names a tile that is not in the catalog.

    Args:
        Exception (Exception): UnknownPrimitiveError
    """

    kind = "unknown-primitive"

    def __init__(self, name: str, position: Optional[int] = None):
        self.name = name
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"unknown primitive {name}{where}")


class PatternSyntaxError(SwatchlinkError):
    """
    Raised when a pattern expression cannot be parsed.

    Args:
        Exception (Exception): PatternSyntaxError
    """

    kind = "pattern-syntax"

    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")


class ForbiddenMoveError(SwatchlinkError):
    """
    Raised when a knitting move would cross a pending loop or skip over
    strands without a clear layer gap.

    Args:
        Exception (Exception): ForbiddenMoveError
    """

    kind = "forbidden-move"


class KnittingPositionError(SwatchlinkError):
    """
    Raised when a band is attached from a state that is not in knitting
    position.

    Args:
        Exception (Exception): KnittingPositionError
    """

    kind = "knitting-position"

    def __init__(self, report):
        self.report = report
        failed = [check for check, ok in report.items() if not ok]
        super().__init__("state is not in knitting position: " + ", ".join(failed))


class VariableMismatchError(SwatchlinkError):
    """
    Raised when Laurent polynomials over different variables are combined.

    Args:
        Exception (Exception): VariableMismatchError
    """

    kind = "variable-mismatch"


class InexactDivisionError(SwatchlinkError):
    """
    Raised when a Laurent polynomial division leaves a remainder.

    Args:
        Exception (Exception): InexactDivisionError
    """

    kind = "inexact-division"


class UnmappedGeneratorError(SwatchlinkError):
    """
    Raised when abelianization meets a generator without a variable.

    Args:
        Exception (Exception): UnmappedGeneratorError
    """

    kind = "unmapped-generator"


class InvalidPresentationError(SwatchlinkError):
    """
    Raised when a relator uses a generator that is not declared.

    Args:
        Exception (Exception): InvalidPresentationError
    """

    kind = "invalid-presentation"


class PolynomialParseError(SwatchlinkError):
    """
    Raised when polynomial text cannot be read.

    Args:
        Exception (Exception): PolynomialParseError
    """

    kind = "polynomial-parse"


class FormatNotApplicableError(SwatchlinkError):
    """
    Raised when an export format does not apply to a diagram, for example a
    DT code of a link.

    Args:
        Exception (Exception): FormatNotApplicableError
    """

    kind = "format-not-applicable"


class CodeParseError(SwatchlinkError):
    """
    Raised when an imported diagram code is malformed.

    Args:
        Exception (Exception): CodeParseError
    """

    kind = "code-parse"


class UnknownColumnError(SwatchlinkError):
    """
    Raised when a table column is requested that the table does not have.

    Args:
        Exception (Exception): UnknownColumnError
    """

    kind = "unknown-column"

    def __init__(self, column: str, table: Optional[str] = None):
        self.column = column
        self.table = table
        where = f" in table {table}" if table else ""
        super().__init__(f"unknown column {column!r}{where}")


class InvalidWorkspacePathError(SwatchlinkError):
    """
    Raised when the environment variable of workspace exist but path is invalid

    Args:
        Exception (Exception): InvalidWorkspacePathError
    """

    kind = "invalid-workspace"


class UnSupportedLogicUnit(SwatchlinkError):
    """
    Raised when unsupported logic unit is added in the pipeline
    Args:
        Exception (Exception): UnSupportedLogicUnit
    """

    kind = "unsupported-logic-unit"


class PipelineConcatenationError(SwatchlinkError):
    """
    Raised when two pipelines cannot be joined
    Args:
        Exception (Exception): PipelineConcatenationError
    """

    kind = "pipeline-concatenation"
