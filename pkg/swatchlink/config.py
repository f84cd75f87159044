import json
import os
from typing import Optional, Union

from .helpers.path import find_closest
from .schemas.run_config import RunConfig

CONFIG_FILENAME = "swatchlink.json"


def load_config_from_json(
    override_config: Optional[Union[RunConfig, dict]] = None,
):
    """
    Load the configuration from the swatchlink.json file.

    Values from the file are overridden by SWATCHLINK_CATALOG and then by
    `override_config`, where None values are ignored so that unset CLI
    flags keep the file settings.

    Args:
        override_config (Optional[Union[RunConfig, dict]], optional): The
        configuration to override the one in the file. Defaults to None.

    Returns:
        dict: The configuration.
    """

    config = {}

    if override_config is None:
        override_config = {}

    if isinstance(override_config, RunConfig):
        override_config = override_config.dict()

    try:
        with open(find_closest(CONFIG_FILENAME), "r") as f:
            config = json.load(f)
    except FileNotFoundError:
        # Ignore the error if the file does not exist, will use the default config
        pass

    catalog = os.environ.get("SWATCHLINK_CATALOG")
    if catalog:
        config["catalog_path"] = catalog

    config.update({key: value for key, value in override_config.items() if value is not None})

    return config
