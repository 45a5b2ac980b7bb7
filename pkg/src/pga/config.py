"""Resource caps shared by the scanning and search code."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Limits that turn runaway computations into explicit "skipped" outcomes.

    enumeration_cap   largest group order that full element scans accept
    lattice_cap       largest number of normal subgroups tracked per group
    closure_degree_cap  largest degree accepted by the 2-closure backtracker
    max_degree        largest degree accepted when loading or generating groups
    """

    enumeration_cap: int = 1_000_000
    lattice_cap: int = 512
    closure_degree_cap: int = 32
    max_degree: int = 64

    def with_overrides(self, **kwargs) -> "Caps":
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates) if updates else self

    def as_dict(self) -> dict:
        return {
            "enumeration_cap": self.enumeration_cap,
            "lattice_cap": self.lattice_cap,
            "closure_degree_cap": self.closure_degree_cap,
            "max_degree": self.max_degree,
        }


DEFAULT_CAPS = Caps()

_CAP_KEYS = frozenset(Caps().as_dict())


def parse_caps_overrides(text: str, base: Caps = DEFAULT_CAPS) -> Caps:
    """Parse a "key=value,key=value" cap override string (e.g. from PGA_CAPS)."""
    overrides = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or key not in _CAP_KEYS:
            raise ValueError(f"bad cap override {chunk!r}")
        try:
            n = int(value.strip())
        except ValueError:
            raise ValueError(f"bad cap value in {chunk!r}") from None
        if n < 1:
            raise ValueError(f"cap must be at least 1: {chunk!r}")
        overrides[key] = n
    return base.with_overrides(**overrides)
