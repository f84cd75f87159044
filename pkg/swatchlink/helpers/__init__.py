from .logger import Logger
from .path import create_directory, find_closest, find_project_root

__all__ = ["Logger", "create_directory", "find_closest", "find_project_root"]
