"""Exact construction and verification of five right-symmetric and
right-alternative algebras: structure constants over exact coefficient
rings, identity checks, centers, units, simplicity, and the scalar
extraction displays behind the verify_lemma* entry points."""

from rsalg._core import *  # noqa: F401,F403
from rsalg._core import __version__  # noqa: F401
