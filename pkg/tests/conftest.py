import pytest

from sullivan_kit.catalog import spaces
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.sullivan.models import SullivanAlgebra


@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    """Keep the user's config file and SULLIVAN_KIT_* variables out of the tests."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    for name in (
        "SULLIVAN_KIT_BASIS_LIMIT",
        "SULLIVAN_KIT_WORKERS",
        "SULLIVAN_KIT_SEED",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def config() -> ToolkitConfig:
    return ToolkitConfig(random_seed=7, search_workers=1, output_format="human")


@pytest.fixture
def w6() -> SullivanAlgebra:
    return spaces.w6()


@pytest.fixture
def two_stage_not_pure() -> SullivanAlgebra:
    return SullivanAlgebra.build(
        [("a", 2), ("z", 3), ("x", 4), ("x'", 7)],
        {"x": "a*z", "x'": "a^4"},
        name="two-stage",
    )
