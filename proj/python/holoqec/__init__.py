"""Semi-global fault-tolerance toolkit.

Columnar circuit representation with boundary-only addressing, stabilizer and
dense simulation engines, the measurement-free correction gadgets, noise
experiments and the control-count scaling formulas.
"""

from ._holoqec import *  # noqa: F401,F403

__version__ = "0.1.0"
