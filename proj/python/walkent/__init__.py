"""Walk entropies of graphs and line graphs.

Thin wrapper over the C++ extension; see the README for the CLI and the
full operation list.
"""

from walkent._walkent import *  # noqa: F401,F403
from walkent._walkent import __doc__  # noqa: F401

__version__ = "0.1.0"
