"""Size guards shared by every module.

Defaults can be overridden per process through environment variables
(``POLYEKR_MAX_FIELD_ORDER`` etc.) or per call by passing a ``Guards``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


class GuardError(ValueError):
    """A requested computation exceeds a configured size limit."""


@dataclass(frozen=True)
class Guards:
    max_field_order: int = 2**16
    max_enumeration: int = 2**20  # q^d for listing monic polynomials
    max_vertices: int = 4096
    clique_cap: int = 10**5
    max_subsets: int = 10**7  # binomial(|F|, k) for k-wise checks
    timeout: float | None = None  # seconds; None means no limit

    @classmethod
    def from_env(cls, environ=None) -> "Guards":
        environ = os.environ if environ is None else environ
        overrides = {}
        for f in fields(cls):
            raw = environ.get("POLYEKR_" + f.name.upper())
            if raw is None or raw == "":
                continue
            value = float(raw) if f.name == "timeout" else int(raw)
            if value <= 0:
                raise ValueError(f"POLYEKR_{f.name.upper()} must be positive, got {raw!r}")
            overrides[f.name] = value
        return replace(cls(), **overrides)


def current_guards(guards: Guards | None = None) -> Guards:
    return guards if guards is not None else Guards.from_env()
