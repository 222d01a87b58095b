import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cubeiso.subsets import CubeFamily, UniformFamily

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def cube_families(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (1 << n)) - 1))
    return CubeFamily(n, bits)


@st.composite
def uniform_families(draw, min_n=1, max_n=8, min_k=1, max_k=4):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(min(min_k, n), min(max_k, n)))
    layer = [m for m in range(1 << n) if m.bit_count() == k]
    members = draw(st.lists(st.sampled_from(layer), unique=True)) if layer else []
    return UniformFamily(n, k, members)
