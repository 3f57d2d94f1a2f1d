"""Campaign depths and defaults, optionally read from a TOML file.

The tool reads no environment variables: values come from init kwargs (the
CLI flags) and, when `--config-path` is given, a TOML document such as::

    jobs = 4

    [theorem4]
    max_n = 9

    [conj2]
    max_m = 4
    max_n = 10
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, ClassVar, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic_settings.sources import TomlConfigSettingsSource

from .config import ConfigError

type CampaignName = Literal[
    "theorem4", "conj1", "conj2", "lemmas", "basis", "unbounded"
]


class CampaignSettings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    extended: ClassVar[dict[str, int]] = {}

    def with_overrides(self, **overrides: int | None) -> Self:
        values = {key: value for key, value in overrides.items() if value is not None}
        if not values:
            return self
        try:
            return type(self).model_validate({**self.model_dump(), **values})
        except ValidationError as exc:
            raise ConfigError(_describe(exc)) from exc

    def as_extended(self) -> Self:
        return self.with_overrides(**self.extended)


class Theorem4Settings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_n": 10}

    max_n: int = Field(default=8, ge=3, le=10)


class ConjectureOneSettings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_n": 5}

    # Targets have length 2 * max_n and must stay under the oracle guard.
    max_n: int = Field(default=4, ge=2, le=7)


class ConjectureTwoSettings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_m": 5, "max_n": 11}

    max_m: int = Field(default=3, ge=2)
    max_n: int = Field(default=9, ge=4, le=14)

    @model_validator(mode="after")
    def _target_fits(self) -> Self:
        if 2 * self.max_m > self.max_n:
            raise ValueError(
                f"conj2 needs 2 * max_m <= max_n, got max_m={self.max_m}, "
                f"max_n={self.max_n}"
            )
        return self


class LemmaSettings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_n": 9}

    max_n: int = Field(default=8, ge=3, le=9)


class BasisSettings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_n": 9}

    max_n: int = Field(default=8, ge=1, le=10)


class UnboundedSettings(CampaignSettings):
    extended: ClassVar[dict[str, int]] = {"max_n": 7}

    max_n: int = Field(default=6, ge=2, le=7)
    oracle_max_n: int = Field(default=4, ge=2, le=7)


class MuposetSettings(BaseSettings):
    model_config = SettingsConfigDict(extra="forbid")

    jobs: int | None = Field(default=None, ge=1)
    theorem4: Theorem4Settings = Field(default_factory=Theorem4Settings)
    conj1: ConjectureOneSettings = Field(default_factory=ConjectureOneSettings)
    conj2: ConjectureTwoSettings = Field(default_factory=ConjectureTwoSettings)
    lemmas: LemmaSettings = Field(default_factory=LemmaSettings)
    basis: BasisSettings = Field(default_factory=BasisSettings)
    unbounded: UnboundedSettings = Field(default_factory=UnboundedSettings)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        return (init_settings, TomlConfigSettingsSource(settings_cls))

    def campaign(self, name: CampaignName, *, extended: bool = False) -> Any:
        current: CampaignSettings = getattr(self, name)
        return current.as_extended() if extended else current


def _describe(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        where = ".".join(str(part) for part in error["loc"]) or "value"
        parts.append(f"{where}: {error['msg']}")
    return "; ".join(parts)


def load_settings(path: str | Path | None = None) -> MuposetSettings:
    if path is None:
        return MuposetSettings()
    cfg_path = Path(path).expanduser()
    if cfg_path.exists() and not cfg_path.is_file():
        raise ConfigError(f"Config path {cfg_path} exists but is not a file.")
    if not cfg_path.exists():
        raise ConfigError(f"Missing config file {cfg_path}.")
    return _load_settings_from_path(cfg_path)


def _load_settings_from_path(cfg_path: Path) -> MuposetSettings:
    cfg = dict(MuposetSettings.model_config)
    cfg["toml_file"] = cfg_path
    Bound = type(
        "MuposetSettingsBound",
        (MuposetSettings,),
        {"model_config": SettingsConfigDict(**cfg)},
    )
    try:
        return Bound()
    except ValidationError as exc:
        raise ConfigError(f"Invalid config in {cfg_path}: {_describe(exc)}") from exc
    except ValueError as exc:
        # tomllib.TOMLDecodeError is a ValueError
        raise ConfigError(f"Malformed TOML in {cfg_path}: {exc}") from exc
