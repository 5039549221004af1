from dataclasses import asdict, dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    """Numerical tolerances shared by the whole pipeline.

    rank_tol is relative to the largest singular value; spec_tol is relative to
    the largest coefficient of the input; the remaining tolerances are absolute
    on unit-norm data.
    """

    rank_tol: float = 1e-9
    quad_tol: float = 1e-10
    dec_tol: float = 1e-8
    grid_max: int = 2**20
    root_tol: float = 1e-10
    boundary_delta: float = 1e-10
    spec_tol: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive")
        n = self.grid_max
        if int(n) != n or n < 16 or n & (n - 1):
            raise ValueError("grid_max must be a power of two >= 16")

    def updated(self, **overrides):
        """Copy with the non-None overrides applied; unknown keys raise."""
        known = {f.name for f in fields(self)}
        bad = set(overrides) - known
        if bad:
            raise ValueError(f"unknown config keys: {sorted(bad)}")
        clean = {k: v for k, v in overrides.items() if v is not None}
        if "grid_max" in clean:
            clean["grid_max"] = int(clean["grid_max"])
        return replace(self, **clean)

    def as_dict(self):
        return asdict(self)


DEFAULT = Config()
