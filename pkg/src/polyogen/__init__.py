"""polyogen: exact counting and uniform random generation of convex
polyominoes, S-walks, and monotone lattice-path structures."""

from .counting import (
    CountClass,
    DomainError,
    binomial,
    binomial_pair_sum,
    count,
    count_perimeter,
    moment,
)
from .lattice import (
    MonotonePath,
    NoIntersection,
    PathPair,
    Point,
    crossover_at_first_intersection,
    enumerate_paths,
    intersecting_pair_count,
    intersection_count,
    nonintersecting_pair_count,
    path_count,
)
from .polyomino import (
    BoxNotTight,
    ConvexPolyomino,
    NotConnected,
    NotConvex,
    PolyominoFlags,
    boundary_walk,
    flags,
    from_boundary,
    render,
    validate,
)
from .swalk import (
    ClosedWalk,
    MalformedCode,
    NotAnSWalk,
    SelfIntersecting,
    SideOrder,
    SWalkCode,
    classify,
    decode,
    encode,
    self_intersects,
    to_polyomino,
)
from .bijection import (
    GrandMotzkinPath,
    InvalidEndpoints,
    NoncrossingPair,
    NotDirected,
    StepFunctionPair,
    directed_to_pair,
    from_grand_motzkin,
    motzkin_retangle,
    motzkin_untangle,
    pair_to_directed,
    retangle,
    to_grand_motzkin,
    untangle,
)
from .rng import SplitMix64, stream_seed
from .sampler import (
    EfficiencyStats,
    SampleReport,
    efficiency,
    sample_convex,
    sample_directed,
    sample_perimeter,
    sample_swalk,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
