import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SEED = 20260814


@pytest.fixture
def rng():
    return random.Random(SEED)
