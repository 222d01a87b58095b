"""Vertex isoperimetry on the Boolean cube and Kruskal-Katona shadows."""
from .binomials import (
    BoundReport,
    binom_exact,
    binom_real,
    blov_bound,
    harper_exact_bound,
    harper_report,
    kk_exact_bound,
    kk_report,
    x_from_size,
)
from .compressions import (
    AuditFailure,
    CompressionTrace,
    ScheduleStall,
    compress_UV,
    harper_compression_schedule,
    kk_compression_schedule,
)
from .constructions import (
    ConstructionSpec,
    cover_ST,
    ekr_extremal_F,
    gen_ball_G1,
    gen_ball_G2,
    hamming_ball,
    katona_extremal_G,
    perturbed_clique_Jk,
    perturbed_segment_J,
    projected_ball,
    star,
)
from .io import format_family, parse_family, read_family, write_family
from .kernels import BACKEND
from .orders import (
    colex_rank,
    colex_unrank,
    initial_segment_colex,
    initial_segment_simplicial,
    simplicial_rank,
    simplicial_unrank,
)
from .subsets import (
    CubeFamily,
    Subset,
    UniformFamily,
    is_t_intersecting,
    lower_shadow,
    vertex_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AuditFailure",
    "BoundReport",
    "CompressionTrace",
    "ConstructionSpec",
    "CubeFamily",
    "ScheduleStall",
    "Subset",
    "UniformFamily",
    "binom_exact",
    "binom_real",
    "blov_bound",
    "colex_rank",
    "colex_unrank",
    "compress_UV",
    "cover_ST",
    "ekr_extremal_F",
    "format_family",
    "gen_ball_G1",
    "gen_ball_G2",
    "hamming_ball",
    "harper_compression_schedule",
    "harper_exact_bound",
    "harper_report",
    "initial_segment_colex",
    "initial_segment_simplicial",
    "is_t_intersecting",
    "katona_extremal_G",
    "kk_compression_schedule",
    "kk_exact_bound",
    "kk_report",
    "lower_shadow",
    "parse_family",
    "perturbed_clique_Jk",
    "perturbed_segment_J",
    "projected_ball",
    "read_family",
    "simplicial_rank",
    "simplicial_unrank",
    "star",
    "vertex_boundary",
    "write_family",
    "x_from_size",
]
