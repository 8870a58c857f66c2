import subprocess
import sys

import pytest

from gphazard.validation import DEMO_SEED, demo_models


@pytest.fixture(scope="session")
def demo():
    """The six documented demonstration models at the documented seed."""
    return demo_models(DEMO_SEED)


@pytest.fixture(scope="session")
def validate_proc():
    """One full run of the validate command, shared by the tests that need it."""
    return subprocess.run(
        [sys.executable, "-m", "gphazard.cli", "validate"], capture_output=True, text=True
    )
