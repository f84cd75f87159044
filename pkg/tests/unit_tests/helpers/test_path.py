import os

import pytest

from swatchlink.exceptions import InvalidWorkspacePathError
from swatchlink.helpers.env import load_dotenv
from swatchlink.helpers.path import create_directory, find_closest, find_project_root


class TestPath:
    def test_workspace_variable_wins(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SWATCHLINK_WORKSPACE", str(tmp_path))
        assert find_project_root() == str(tmp_path)
        assert find_closest("swatchlink.json") == os.path.join(
            str(tmp_path), "swatchlink.json"
        )

    def test_invalid_workspace(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SWATCHLINK_WORKSPACE", str(tmp_path / "missing"))
        with pytest.raises(InvalidWorkspacePathError):
            find_project_root()

    def test_walks_up_to_marker(self, tmp_path, monkeypatch):
        monkeypatch.delenv("SWATCHLINK_WORKSPACE", raising=False)
        (tmp_path / "swatchlink.json").write_text("{}")
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        monkeypatch.chdir(nested)
        assert find_project_root() == str(tmp_path)

    def test_create_directory(self, tmp_path):
        target = tmp_path / "exports" / "pd"
        create_directory(str(target))
        assert target.is_dir()
        create_directory(str(target))

    def test_load_dotenv(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SWATCHLINK_WORKSPACE", str(tmp_path))
        monkeypatch.delenv("SWATCHLINK_SEED_CHECK", raising=False)
        (tmp_path / ".env").write_text("SWATCHLINK_SEED_CHECK=7\n")
        load_dotenv()
        assert os.environ["SWATCHLINK_SEED_CHECK"] == "7"
        monkeypatch.delenv("SWATCHLINK_SEED_CHECK")
