from ._gex2 import *  # noqa: F401,F403
from ._gex2 import __doc__  # noqa: F401
