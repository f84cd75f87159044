from typing import Any, Dict, Optional, Union

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.grammar.catalog import TileCatalog, default_catalog
from swatchlink.grammar.composition import build
from swatchlink.grammar.parser import parse
from swatchlink.invariants.alexander import mva
from swatchlink.invariants.jones import jones
from swatchlink.schemas.run_config import RunConfig
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.diagram import PlanarDiagram
from swatchlink.topology.tangle import TorusTangle


class PipelineContext:
    """
    Pass Context to the pipeline which is accessible to each step via kwargs.

    Besides the settings and the catalog, the context caches the swatches a
    run builds and the invariants of their fillings, since several steps
    look at the same patterns.
    """

    def __init__(
        self,
        config: Optional[Union[RunConfig, dict]] = None,
        catalog: Optional[TileCatalog] = None,
        initial_values: dict = None,
    ) -> None:
        if config is None:
            config = RunConfig()
        elif isinstance(config, dict):
            config = RunConfig(**config)

        self.config = config
        self.catalog = catalog or default_catalog(config.catalog_path)

        self.intermediate_values = initial_values or {}

        self._initial_values = initial_values
        self._tangles: Dict[str, TorusTangle] = {}
        self._diagrams: Dict[str, PlanarDiagram] = {}
        self._mva: Dict[str, MultiLaurent] = {}
        self._jones: Dict[str, MultiLaurent] = {}

    def reset_intermediate_values(self):
        self.intermediate_values = self._initial_values or {}

    def add(self, key: str, value: Any):
        self.intermediate_values[key] = value

    def add_many(self, values: dict):
        self.intermediate_values.update(values)

    def get(self, key: str, default: Any = ""):
        return self.intermediate_values.get(key, default)

    def tangle(self, pattern: str) -> TorusTangle:
        if pattern not in self._tangles:
            self._tangles[pattern] = build(parse(pattern, self.catalog), self.catalog)
        return self._tangles[pattern]

    def diagram(self, pattern: str) -> PlanarDiagram:
        if pattern not in self._diagrams:
            self._diagrams[pattern] = dehn_fill(
                self.tangle(pattern), self.config.fabric_face
            )
        return self._diagrams[pattern]

    def mva(self, pattern: str) -> MultiLaurent:
        if pattern not in self._mva:
            self._mva[pattern] = mva(self.diagram(pattern))
        return self._mva[pattern]

    def jones(self, pattern: str) -> MultiLaurent:
        if pattern not in self._jones:
            self._jones[pattern] = jones(self.diagram(pattern))
        return self._jones[pattern]
