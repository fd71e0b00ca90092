"""Finite cycle sets: validation, monomial calculus, germs, Zappa-Szep composition and census.

Indices are 0-based throughout.
"""

from ._cyset import *  # noqa: F401,F403
from ._cyset import CysetError, CycleSet, MonomialElement  # noqa: F401
