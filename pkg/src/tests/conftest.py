import pytest


@pytest.fixture(autouse=True, scope="session")
def isolated_log(tmp_path_factory):
    """Le journal des tests ne touche jamais logs/ du dépôt."""
    mp = pytest.MonkeyPatch()
    log_file = tmp_path_factory.mktemp("logs") / "experiment_data.json"
    mp.setenv("LASHLAB_LOG_FILE", str(log_file))
    yield log_file
    mp.undo()
