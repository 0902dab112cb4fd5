"""Cosmological information bounds and their consequences, computed at desk scale."""

from .bounds import (
    BlackHoleRecord,
    BoundMethod,
    InfoBound,
    bh_entropy,
    entropy_to_bits,
    holographic_bound,
    inflation_expansion_limit,
    literal_log2_inversion,
    lloyd_bound,
    specifiability_limit,
)
from .cosmology import (
    INFINITE,
    CosmologyParams,
    HorizonSet,
    cosmic_time,
    desitter_radius_from_density,
    event_horizon,
    horizon_area,
    horizons,
    hubble_rate,
    particle_horizon,
)
from .units import (
    CODATA2018,
    ConstantsSet,
    Dimension,
    Quantity,
    planck_energy_density,
    planck_length,
    planck_time,
)

__version__ = "0.1.0"
