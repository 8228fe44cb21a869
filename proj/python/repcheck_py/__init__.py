"""Python face of the repcheck library; everything lives in the extension."""

from ._repcheck import *  # noqa: F401,F403
from ._repcheck import generator_version  # noqa: F401
