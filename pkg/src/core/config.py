import os
from dataclasses import dataclass, replace

from src.core.errors import ConfigurationError


def _int_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}", variable=name) from None


@dataclass(frozen=True)
class Settings:
    state_guard: int = 10**7
    expansion_guard: int = 10**6
    decimal_digits: int = 15
    seed: int = 42
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls):
        """Read settings from SIMPLEX_* environment variables, falling back to defaults."""
        settings = cls(
            state_guard=_int_env("SIMPLEX_STATE_GUARD", cls.state_guard),
            expansion_guard=_int_env("SIMPLEX_EXPANSION_GUARD", cls.expansion_guard),
            decimal_digits=_int_env("SIMPLEX_DECIMAL_DIGITS", cls.decimal_digits),
            seed=_int_env("SIMPLEX_SEED", cls.seed),
            log_level=os.getenv("SIMPLEX_LOG_LEVEL", cls.log_level).upper(),
        )
        settings.check()
        return settings

    def check(self):
        if self.state_guard < 1 or self.expansion_guard < 1:
            raise ConfigurationError("guards must be positive")
        if self.decimal_digits < 1:
            raise ConfigurationError("decimal digits must be positive")
        return self

    def override(self, **changes):
        changes = {key: value for key, value in changes.items() if value is not None}
        return replace(self, **changes).check()


DEFAULT_SETTINGS = Settings()
