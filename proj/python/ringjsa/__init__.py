"""Spectral purity of ring-resonator photon pairs pumped by shaped pulses.

Thin wrapper over the C++ core. Frequencies are angular detunings in rad/s and
times are in seconds; use ghz_to_rad / ps_to_s at the boundary.
"""

from ._ringjsa import *  # noqa: F401,F403
from ._ringjsa import __version__  # noqa: F401
