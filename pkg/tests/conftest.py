import numpy as np
import pytest

from avd import CanonicalConfig, Segment


@pytest.fixture
def node_config() -> CanonicalConfig:
    """Configuration whose edge cubic is irreducible with a node at (-1, 2)."""
    return CanonicalConfig.from_trig(2.0, 4.0 / 3.0, 5.0 / 3.0, -4.0 / 5.0, 3.0 / 5.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


def random_config(rng: np.random.Generator, *, l_min: float = 0.3) -> CanonicalConfig:
    return CanonicalConfig.from_angle(
        float(rng.uniform(-2.5, 2.5)),
        float(rng.uniform(-2.5, 2.5)),
        float(rng.uniform(l_min, 2.5)),
        float(rng.uniform(-np.pi, np.pi)),
    )


def random_segment(rng: np.random.Generator, span: float = 4.0) -> Segment:
    while True:
        p = rng.uniform(-span, span, 2)
        q = rng.uniform(-span, span, 2)
        if np.hypot(*(p - q)) > 1e-3:
            return Segment.of(tuple(p), tuple(q))
