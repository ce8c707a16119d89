"""Wake-up receiver address decoder toolkit (compiled core)."""

from ._wurkit import *  # noqa: F401,F403
from ._wurkit import ConfigError, InfeasibleError, ParseError  # noqa: F401
