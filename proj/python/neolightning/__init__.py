"""Python bindings for the NeoLightning gesture-to-sound engine.

The heavy lifting happens in the compiled ``_core`` extension; this package
re-exports it and adds a couple of conveniences.
"""

from . import _core
from ._core import *  # noqa: F401,F403

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = _core.__version__


def hand_from_points(side, seq, confidence, points):
    """Build a LandmarkFrame from an iterable of 21 (x, y, z) triples."""
    frame = _core.LandmarkFrame()
    frame.side = side
    frame.seq = seq
    frame.confidence = confidence
    frame.points = [tuple(map(float, p)) for p in points]
    return frame
