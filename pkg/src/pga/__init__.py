"""pga: a small computational permutation-group toolkit.

Permutation arithmetic, Schreier-Sims stabilizer chains, normal-subgroup
structure, orbits on ordered pairs and 2-closures, fixity and
elusiveness, plus a harness that verifies a catalog of structural facts
over a corpus of concrete transitive groups.
"""

__version__ = "0.1.0"

from .config import Caps, DEFAULT_CAPS
from .group import PermGroup, StabilizerChain
from .perm import Permutation

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "PermGroup",
    "Permutation",
    "StabilizerChain",
    "__version__",
]
