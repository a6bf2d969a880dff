"""Multi-twisted codes over small finite fields."""

from ._core import *  # noqa: F401,F403
from ._core import MtcError, __doc__  # noqa: F401

__version__ = "0.1.0"
