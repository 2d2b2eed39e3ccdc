"""Resource limits shared across the combinatorial engines."""

from __future__ import annotations

import os
from dataclasses import dataclass


class ResourceLimitError(RuntimeError):
    """A configured state/size cap was hit (pathological input, not wrongness)."""


DEFAULT_DP_STATE_LIMIT = 50_000_000
DEFAULT_MAX_GENERATORS = 100_000
DEFAULT_MAX_CANDIDATES = 2_000_000


@dataclass(frozen=True)
class Limits:
    dp_state_limit: int = DEFAULT_DP_STATE_LIMIT
    max_generators: int = DEFAULT_MAX_GENERATORS
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    @staticmethod
    def from_env() -> "Limits":
        return Limits(
            dp_state_limit=int(os.environ.get("COREDUCE_LIMIT_STATES", DEFAULT_DP_STATE_LIMIT)),
        )


DEFAULT_LIMITS = Limits()
