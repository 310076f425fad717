"""Self-verifying quantum benchmark kernels on a noisy state-vector simulator.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from qrk._core import *  # noqa: F401,F403
from qrk._core import __version__  # noqa: F401
