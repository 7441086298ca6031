"""Far From Most String Problem: instances, heuristic evaluation and solvers.

Thin wrapper around the compiled extension; see the project README for the
full tour.
"""

from ._ffmsp import *  # noqa: F401,F403
