"""Scenario configuration: dataclass, INI-style file parsing, validation."""
import configparser
import dataclasses
import os
from dataclasses import dataclass, field
from typing import Optional

from ..radio import ChannelParams
from ..trust import TrustWeights, WeightError

VARIANTS = ("setd2d", "sed2d", "d2d")
OUT_DIR_ENV = "SETD2D_OUT_DIR"


class ConfigError(ValueError):
    """Configuration problem; the message names the offending field."""


@dataclass(frozen=True)
class AttackSettings:
    """Attack behavior applied to every malicious node."""

    kind: str = "onoff_consecutive"
    rate: float = 1.0
    phase: str = "final"
    period: int = 10
    seed: int = 0
    victims: tuple[int, ...] = ()


@dataclass(frozen=True)
class Scenario:
    n_nodes: int = 100
    cell_side: float = 100.0
    frames: int = 50
    file_kbits: float = 1000.0
    malicious_fraction: float = 0.0
    social_malice_bias: float = 4.0
    variant: str = "setd2d"
    suite: str = "toy"
    seed: int = 0
    layout_seed: Optional[int] = None
    channel_seed: Optional[int] = None
    social_seed: Optional[int] = None
    attack_seed: Optional[int] = None
    weights: TrustWeights = field(default_factory=TrustWeights)
    radio: ChannelParams = field(default_factory=ChannelParams)
    attacks: AttackSettings = field(default_factory=AttackSettings)

    def resolved_seed(self, name: str) -> int:
        explicit = getattr(self, f"{name}_seed")
        if explicit is not None:
            return explicit
        offset = {"layout": 1, "channel": 2, "social": 3, "attack": 4}[name]
        return self.seed * 1000 + offset

    def validate(self) -> None:
        if self.n_nodes < 2:
            raise ConfigError("scenario.n_nodes must be >= 2")
        if self.frames < 1:
            raise ConfigError("scenario.frames must be >= 1")
        if self.cell_side <= 0:
            raise ConfigError("scenario.cell_side must be positive")
        if self.file_kbits <= 0:
            raise ConfigError("scenario.file_kbits must be positive")
        if not 0.0 <= self.malicious_fraction <= 1.0:
            raise ConfigError("scenario.malicious_fraction must be in [0,1]")
        if self.variant not in VARIANTS:
            raise ConfigError(
                f"scenario.variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.suite not in ("toy", "standard"):
            raise ConfigError("scenario.suite must be 'toy' or 'standard'")
        try:
            self.weights.validate()
        except WeightError as exc:
            raise ConfigError(f"weights: {exc}") from exc
        if self.radio.mode not in ("banded", "shadowed"):
            raise ConfigError("radio.mode must be 'banded' or 'shadowed'")
        if self.radio.max_d2d_range <= 0:
            raise ConfigError("radio.max_d2d_range must be positive")
        if self.attacks.kind not in ("honest", "onoff_consecutive",
                                     "onoff_irregular", "onoff_periodic",
                                     "receiver_selective"):
            raise ConfigError(f"attacks.kind unknown: {self.attacks.kind!r}")
        if not 0.0 <= self.attacks.rate <= 1.0:
            raise ConfigError("attacks.rate must be in [0,1]")


def _apply_section(section, target_cls, current, prefix, int_fields=()):
    """Overlay one config section onto a frozen dataclass instance."""
    values = {}
    names = {f.name: f for f in dataclasses.fields(target_cls)}
    for key, raw in section.items():
        if key not in names:
            raise ConfigError(f"{prefix}.{key}: unknown option")
        ftype = names[key].type
        try:
            if key in int_fields or ftype in ("int", int):
                values[key] = int(raw)
            elif ftype in ("float", float):
                values[key] = float(raw)
            else:
                values[key] = raw
        except ValueError as exc:
            raise ConfigError(f"{prefix}.{key}: {exc}") from exc
    return dataclasses.replace(current, **values)


def load_scenario(path: str) -> Scenario:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"config file not found: {path}")
    scenario = Scenario()
    known = {"scenario", "weights", "radio", "attacks"}
    unknown = set(parser.sections()) - known
    if unknown:
        raise ConfigError(f"unknown sections: {sorted(unknown)}")

    if parser.has_section("weights"):
        weights = _apply_section(parser["weights"], TrustWeights,
                                 scenario.weights, "weights",
                                 int_fields=("l_lon", "l_rec"))
    else:
        weights = scenario.weights
    if parser.has_section("radio"):
        radio = _apply_section(parser["radio"], ChannelParams,
                               scenario.radio, "radio")
    else:
        radio = scenario.radio
    if parser.has_section("attacks"):
        sect = dict(parser["attacks"])
        victims = ()
        if "victims" in sect:
            try:
                victims = tuple(int(v) for v in sect.pop("victims").split(","))
            except ValueError as exc:
                raise ConfigError(f"attacks.victims: {exc}") from exc
        attacks = _apply_section(sect, AttackSettings, AttackSettings(),
                                 "attacks", int_fields=("period", "seed"))
        attacks = dataclasses.replace(attacks, victims=victims)
    else:
        attacks = scenario.attacks

    if parser.has_section("scenario"):
        sect = dict(parser["scenario"])
        scalars = {}
        names = {f.name for f in dataclasses.fields(Scenario)}
        for key, raw in sect.items():
            if key not in names or key in ("weights", "radio", "attacks"):
                raise ConfigError(f"scenario.{key}: unknown option")
            if key in ("n_nodes", "frames", "seed", "layout_seed",
                       "channel_seed", "social_seed", "attack_seed"):
                try:
                    scalars[key] = int(raw)
                except ValueError as exc:
                    raise ConfigError(f"scenario.{key}: {exc}") from exc
            elif key in ("cell_side", "file_kbits", "malicious_fraction",
                         "social_malice_bias"):
                try:
                    scalars[key] = float(raw)
                except ValueError as exc:
                    raise ConfigError(f"scenario.{key}: {exc}") from exc
            else:
                scalars[key] = raw
        scenario = dataclasses.replace(scenario, **scalars)

    scenario = dataclasses.replace(scenario, weights=weights, radio=radio,
                                   attacks=attacks)
    scenario.validate()
    return scenario


def default_out_dir() -> str:
    return os.environ.get(OUT_DIR_ENV, "out")
