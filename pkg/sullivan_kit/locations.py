from pathlib import Path

from xdg_base_dirs import xdg_config_home


def _toolkit_directory(root: Path) -> Path:
    directory = root / "sullivan-kit"
    directory.mkdir(exist_ok=True, parents=True)
    return directory


def config_directory() -> Path:
    """Return (possibly creating) the toolkit config directory."""
    return _toolkit_directory(xdg_config_home())


def config_file() -> Path:
    return config_directory() / "config.toml"
