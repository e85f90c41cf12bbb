"""
Node geometry for the IRS secrecy simulator.
Holds user, IRS and Eve positions and the distances derived from them.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from simulator.errors import ContractError, DegenerateGeometryError, DimensionError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NetworkGeometry:
    """
    Positions of every node in meters.

    ``a_positions`` and ``b_positions`` are (N, 2) arrays, one row per pair.
    Distances are derived at construction and never change afterwards.
    ``fixed`` marks geometries whose distances are deterministic (users at the
    disc centers), which is what the closed-form bounds require.
    """
    irs_pos: np.ndarray
    eve_pos: np.ndarray
    a_positions: np.ndarray
    b_positions: np.ndarray
    fixed: bool = True
    d_a: np.ndarray = field(init=False, repr=False)
    d_b: np.ndarray = field(init=False, repr=False)
    d_e: float = field(init=False, repr=False)
    d_ae: np.ndarray = field(init=False, repr=False)
    d_be: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        """Derive distances and validate them."""
        irs = np.asarray(self.irs_pos, dtype=float).reshape(2)
        eve = np.asarray(self.eve_pos, dtype=float).reshape(2)
        a_pos = np.atleast_2d(np.asarray(self.a_positions, dtype=float))
        b_pos = np.atleast_2d(np.asarray(self.b_positions, dtype=float))
        if a_pos.shape != b_pos.shape or a_pos.shape[1] != 2:
            raise DimensionError("a_positions and b_positions must both have shape (N, 2)")

        object.__setattr__(self, "irs_pos", irs)
        object.__setattr__(self, "eve_pos", eve)
        object.__setattr__(self, "a_positions", a_pos)
        object.__setattr__(self, "b_positions", b_pos)
        object.__setattr__(self, "d_a", np.linalg.norm(a_pos - irs, axis=1))
        object.__setattr__(self, "d_b", np.linalg.norm(b_pos - irs, axis=1))
        object.__setattr__(self, "d_e", float(np.linalg.norm(eve - irs)))
        object.__setattr__(self, "d_ae", np.linalg.norm(a_pos - eve, axis=1))
        object.__setattr__(self, "d_be", np.linalg.norm(b_pos - eve, axis=1))

        for name in ("d_a", "d_b", "d_ae", "d_be"):
            if np.any(getattr(self, name) <= 0.0):
                raise DegenerateGeometryError(f"Zero distance in {name}: {getattr(self, name)}")
        if self.d_e <= 0.0:
            raise DegenerateGeometryError("IRS and Eve are co-located")

    @property
    def n_pairs(self) -> int:
        return int(self.a_positions.shape[0])

    @property
    def pair_positions(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        return [(self.a_positions[n], self.b_positions[n]) for n in range(self.n_pairs)]


def _uniform_disc(rng: np.random.Generator, center: np.ndarray, radius: float, count: int) -> np.ndarray:
    if radius == 0.0:
        return np.tile(center, (count, 1))
    r = radius * np.sqrt(rng.random(count))
    angle = 2.0 * np.pi * rng.random(count)
    return center + np.column_stack((r * np.cos(angle), r * np.sin(angle)))


def sample_user_positions(
    rng: np.random.Generator,
    n_pairs: int,
    disc_a_center: Sequence[float],
    disc_b_center: Sequence[float],
    radius: float,
    irs_pos: Sequence[float] = (15.0, 0.0),
    eve_pos: Sequence[float] = (15.0, 20.0),
) -> NetworkGeometry:
    """
    Place every pair's users uniformly (by area) inside their discs.

    Args:
        rng: Random stream
        n_pairs: Number of user pairs N
        disc_a_center: Center of the A-user disc
        disc_b_center: Center of the B-user disc
        radius: Disc radius in meters; 0 pins users at the centers
        irs_pos: IRS position
        eve_pos: Eavesdropper position

    Returns:
        NetworkGeometry
    """
    if radius < 0.0:
        raise ContractError(f"Disc radius must be non-negative, got {radius}")
    a_center = np.asarray(disc_a_center, dtype=float)
    b_center = np.asarray(disc_b_center, dtype=float)
    a_positions = _uniform_disc(rng, a_center, radius, n_pairs)
    b_positions = _uniform_disc(rng, b_center, radius, n_pairs)
    return NetworkGeometry(
        irs_pos=np.asarray(irs_pos, dtype=float),
        eve_pos=np.asarray(eve_pos, dtype=float),
        a_positions=a_positions,
        b_positions=b_positions,
        fixed=radius == 0.0,
    )


def fixed_geometry(n_pairs: int, deployment) -> NetworkGeometry:
    """
    Geometry with every user at its disc center.

    Args:
        n_pairs: Number of user pairs N
        deployment: DeploymentConfig with node positions

    Returns:
        NetworkGeometry with ``fixed`` set
    """
    a_center = np.asarray(deployment.disc_a_center, dtype=float)
    b_center = np.asarray(deployment.disc_b_center, dtype=float)
    return NetworkGeometry(
        irs_pos=np.asarray(deployment.irs_pos, dtype=float),
        eve_pos=np.asarray(deployment.eve_pos, dtype=float),
        a_positions=np.tile(a_center, (n_pairs, 1)),
        b_positions=np.tile(b_center, (n_pairs, 1)),
        fixed=True,
    )
