"""Exact certificates for reducedness of null cones of group representations.

Subpackages:

- :mod:`coreduce.rootsys` — root systems, weights, coordinate changes.
- :mod:`coreduce.repthy` — characters, symmetric powers, covariant counting.
- :mod:`coreduce.monoid` — Hilbert bases of relation monoids, sum feasibility.
- :mod:`coreduce.slices` — toral slices and relation certificates.
- :mod:`coreduce.nullcone` — null-cone components, screens, support bounds.
- :mod:`coreduce.classify` — verdicts with machine-checkable certificates.
- :mod:`coreduce.cli` — the ``coreduce`` command-line tool.
"""

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError

__all__ = ["DEFAULT_LIMITS", "Limits", "ResourceLimitError"]
__version__ = "1.0.0"
