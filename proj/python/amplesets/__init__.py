"""Sign-vector families, shattering invariants and the ampleness predicate battery."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401


def six_cycle():
    """The 6-cycle on the 3-cube: every sign vector except the two constant ones."""
    from ._core import generate

    return generate("SIX_CYCLE", 3)
