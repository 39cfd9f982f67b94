"""Flag-transitive Steiner 3-designs: constructions, group actions and sieves."""

import os
from pathlib import Path

_here = Path(__file__).resolve().parent
if "STEINER3_DATA_DIR" not in os.environ and (_here / "data" / "a7_gl42.gens").exists():
    os.environ["STEINER3_DATA_DIR"] = str(_here / "data")

from ._steiner3 import *  # noqa: E402,F401,F403
from ._steiner3 import __doc__  # noqa: E402,F401
