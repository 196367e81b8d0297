"""Logical-cycle resource estimation for distributed Pauli-based computation.

Exact rational cost algebra over the Bell-consumption time T_Bell, the Q-Fly
circulant topology, subroutine and algorithm cost models (QAOA, DQI), the
active-volume surface-code baseline, and a pipeline-scheduling validator.
All values are exact `fractions.Fraction`s until explicitly rounded.
"""

from ._qfre import *  # noqa: F401,F403
from ._qfre import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
