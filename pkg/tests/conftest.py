import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qkostant.rootsys import root_system  # noqa: E402


@pytest.fixture(params=["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"])
def small_rs(request):
    return root_system(request.param)
