"""Finding kings in tournaments: query-model finders, k-kings algorithms,
hard instances and the triangle reduction."""

from .errors import (
    ConfigError,
    InvalidInstanceError,
    InvalidKError,
    InvalidQueryError,
    InvalidSizeError,
    KingsError,
    ParseError,
    UnsupportedSizeError,
)
from .generators import (
    DeltaSample,
    HardInstance,
    all_kings_tournament,
    delta_sample,
    derive_seed,
    hard_instance,
    random_tournament,
    transitive_tournament,
)
from .oracles import AdversaryOracle, CountingOracle, QueryStats
from .search import (
    SearchResult,
    find_k_kings_matmul,
    find_k_kings_quadratic,
    find_king_deterministic,
    find_king_max_outdegree,
    find_king_randomized,
    find_up_to_three_kings,
)
from .tournament import Tournament, all_kings, is_king, parse, reaches_within_two, serialize

__version__ = "0.1.0"
