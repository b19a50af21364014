"""Ray-space geometry: Pancharatnam phases, Bargmann invariants and Wigner lifts."""

from raywig._core import *  # noqa: F401,F403

__version__ = "0.1.0"
