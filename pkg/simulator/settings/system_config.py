"""
System and campaign configuration for the IRS secrecy simulator.
Defines the validated parameter models and their simulation-setup defaults.
"""

import logging
from enum import Enum
from typing import Any, Dict, FrozenSet, Optional, Tuple

from pydantic import BaseModel, Extra, Field, validator

from simulator.network.units import dbi_to_linear, dbm_to_watt

# Configure logging
logger = logging.getLogger(__name__)

Point = Tuple[float, float]


class RliMode(str, Enum):
    DETERMINISTIC = "deterministic"
    SAMPLED = "sampled"


class LogBase(str, Enum):
    NATS = "nats"
    BITS = "bits"


class GeometryMode(str, Enum):
    FIXED = "fixed"
    RANDOM_DISC = "random_disc"


class Scheme(str, Enum):
    PROPOSED = "proposed"
    ONEWAY_JAM = "oneway_jam"
    FD_RELAY = "fd_relay"
    HD_RELAY = "hd_relay"


class Estimator(str, Enum):
    MEAN_POSITIVE_RATE = "mean_positive_rate"
    JENSEN_BOUND = "jensen_bound"


ALL_SCHEMES: Tuple[Scheme, ...] = (
    Scheme.PROPOSED,
    Scheme.ONEWAY_JAM,
    Scheme.FD_RELAY,
    Scheme.HD_RELAY,
)


def _parse_point(value: Any) -> Any:
    if isinstance(value, str):
        parts = [part.strip() for part in value.strip("()[] ").split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected a point written as 'x,y', got {value!r}")
        return tuple(float(part) for part in parts)
    return value


class SystemParams(BaseModel):
    """Scalar knobs of the link model."""
    power_dbm: float = 30.0
    elements: int = Field(32, ge=1)
    pairs: int = Field(10, ge=1)
    quad_order: int = Field(20, ge=1)
    noise_dbm: float = -70.0
    rli_dbm: float = -40.0
    pathloss_exp: float = Field(3.0, gt=0.0)
    gain_user_dbi: float = 15.0
    gain_eve_dbi: float = 15.0
    # Relay antenna gain; unset means the relay reuses the user gain
    relay_gain_dbi: Optional[float] = None
    element_area_m2: float = Field(0.1, gt=0.0)
    rli_mode: RliMode = RliMode.DETERMINISTIC
    log_base: LogBase = LogBase.NATS

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    @property
    def power_w(self) -> float:
        return dbm_to_watt(self.power_dbm)

    @property
    def noise_w(self) -> float:
        return dbm_to_watt(self.noise_dbm)

    @property
    def rli_w(self) -> float:
        return dbm_to_watt(self.rli_dbm)

    @property
    def gain_user(self) -> float:
        return dbi_to_linear(self.gain_user_dbi)

    @property
    def gain_eve(self) -> float:
        return dbi_to_linear(self.gain_eve_dbi)

    @property
    def gain_relay(self) -> float:
        if self.relay_gain_dbi is None:
            return self.gain_user
        return dbi_to_linear(self.relay_gain_dbi)


class DeploymentConfig(BaseModel):
    """Node placement: IRS and Eve positions plus the two user discs (meters)."""
    irs_pos: Point = (15.0, 0.0)
    eve_pos: Point = (15.0, 20.0)
    disc_a_center: Point = (0.0, 0.0)
    disc_b_center: Point = (30.0, 0.0)
    disc_radius_m: float = Field(5.0, ge=0.0)

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    _points = validator("irs_pos", "eve_pos", "disc_a_center", "disc_b_center",
                        pre=True, allow_reuse=True)(_parse_point)


class CampaignConfig(BaseModel):
    """Everything a Monte Carlo campaign needs, seed included."""
    params: SystemParams = SystemParams()
    deployment: DeploymentConfig = DeploymentConfig()
    geometry_mode: GeometryMode = GeometryMode.FIXED
    trials: int = Field(10000, ge=1)
    seed: int = Field(20240101, ge=0, lt=2 ** 64)
    schemes: FrozenSet[Scheme] = frozenset(ALL_SCHEMES)
    estimator: Estimator = Estimator.MEAN_POSITIVE_RATE
    workers: int = Field(1, ge=1)
    show_progress: bool = False

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    @validator("schemes", pre=True)
    def split_schemes(cls, value):
        if isinstance(value, str):
            value = [item.strip() for item in value.split(",") if item.strip()]
        if not value:
            raise ValueError("at least one scheme is required")
        return value

    def ordered_schemes(self) -> Tuple[Scheme, ...]:
        """Requested schemes in a fixed presentation order."""
        return tuple(scheme for scheme in ALL_SCHEMES if scheme in self.schemes)

    def with_params(self, **changes: Any) -> "CampaignConfig":
        """Copy with some SystemParams fields replaced."""
        params = SystemParams(**{**self.params.dict(), **changes})
        return self.copy(update={"params": params})

    def with_campaign(self, **changes: Any) -> "CampaignConfig":
        """Copy with some campaign-level fields replaced (validated)."""
        data: Dict[str, Any] = {**self.dict(), **changes}
        return CampaignConfig(**data)
