"""Central tolerance defaults and the CLI run configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace

ENV_VAR = "FINALG_DEFAULT_TOL"


@dataclass(frozen=True)
class Tolerances:
    # poly_roots: |p(r)| <= root_residual * (1 + max|coeff|)
    root_residual: float = 1e-9
    # Durand-Kerner stops when max step < root_step * (1 + max|r|)
    root_step: float = 1e-12
    root_max_iter: int = 1000
    # relative coefficient backward error under which a root cluster is
    # treated as one multiple root
    multiplicity: float = 1e-12
    cluster_radius: float = 1e-6
    # |det L_a| > invertibility * (1 + ||L_a||_max)**n
    invertibility: float = 1e-10
    # solve_linear: pivot modulus below singular_pivot * max|a| is singular
    singular_pivot: float = 1e-12
    inverse_check: float = 1e-7
    op_l2: float = 1e-10
    op_l2_max_iter: int = 10000
    resolvent_error: float = 1e-10
    resolvent_max_terms: int = 10**6
    axiom_margin: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"tolerance {f.name} must be positive")

    @classmethod
    def from_string(cls, text: str, base: "Tolerances | None" = None) -> "Tolerances":
        """Parse an override string.

        A bare number replaces every real-valued tolerance; otherwise the
        string is a comma-separated list of ``name=value`` pairs.
        """
        base = base or cls()
        text = text.strip()
        if not text:
            return base
        real_names = [f.name for f in fields(cls) if f.type in ("float", float)]
        try:
            value = float(text)
        except ValueError:
            pass
        else:
            return replace(base, **{name: value for name in real_names})
        updates = {}
        known = {f.name: f for f in fields(cls)}
        for item in text.split(","):
            name, sep, raw = item.partition("=")
            name = name.strip()
            if not sep or name not in known:
                raise ValueError(f"bad tolerance override {item!r}")
            kind = int if known[name].type in ("int", int) else float
            updates[name] = kind(float(raw)) if kind is int else float(raw)
        return replace(base, **updates)

    @classmethod
    def from_env(cls, environ=None) -> "Tolerances":
        environ = os.environ if environ is None else environ
        return cls.from_string(environ.get(ENV_VAR, ""))


DEFAULTS = Tolerances()


@dataclass(frozen=True)
class RunConfig:
    tolerances: Tolerances = field(default_factory=Tolerances)
    trials: int = 500
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
