import os
from dataclasses import dataclass, field


def _env_budget(default=10**7):
    raw = os.environ.get("HALLQ_BUDGET")
    if not raw:
        return default
    return int(float(raw))


@dataclass
class Config:
    element_budget: int = 2**20     # max field size
    enum_budget: int = field(default_factory=_env_budget)  # morphisms per count
    shift_bound: int = 8
    dim_bound: int = 8              # catalogue listing / exhaustive checks
    deg_bound: int = 8
    oracle_dim_bound: int = 6       # submodule oracle: total dim of L


DEFAULT = Config()
