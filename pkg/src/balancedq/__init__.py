"""Balanced q-ary block codes over the symmetric alphabet {-q+1, -q+3, ..., q-1}.

Counting and redundancy of symbol-, charge-, polarity-, and jointly
balanced words, Gaussian approximations, and five fixed-length
encoder/decoder constructions with balanced side-info prefixes.
"""

from .alphabet import (
    Alphabet,
    charge_sum,
    format_word,
    from_zq,
    is_cb,
    is_cpb,
    is_pb,
    is_sb,
    parse_word,
    phi,
    polarity_sum,
    sub_alphabet,
    symbol_count,
    symbols,
    to_zq,
    validate_word,
)
from .asymptotics import (
    BivariateSpec,
    GaussianSpec,
    anr,
    approx_count,
    approx_ln_count,
    approx_redundancy,
    bivariate_spec,
    gaussian_count,
    gaussian_ln_count,
    gaussian_spec,
    joint_gaussian_count,
    joint_gaussian_ln_count,
    stirling_ln_factorial,
)
from .codebook import (
    CONSTRUCTIONS,
    CbSide,
    CpbSide,
    KnuthSide,
    PbSide,
    PrefixPlan,
    SbSide,
    balance_kind,
    decode_prefix,
    encode_prefix,
    pack,
    plan,
    rank,
    side_info_space,
    unpack,
    unrank,
)
from .codecs import (
    CodecParams,
    Codeword,
    balancing_sequence,
    cb_decode,
    cb_encode,
    cpb_decode,
    cpb_encode,
    decode,
    encode,
    knuth_decode,
    knuth_encode,
    pb_decode,
    pb_encode,
    sb_decode,
    sb_encode,
)
from .counting import (
    KINDS,
    JointCensus,
    brute_force_count,
    charge_count,
    count_cb,
    count_cpb,
    count_pb,
    count_sb,
    exact_count,
    exact_redundancy,
    joint_census,
    joint_count,
    polarity_count,
)
from .errors import (
    AlphabetError,
    BalancedqError,
    BalancingInvariantError,
    CapacityError,
    DecodeError,
    InfeasibleParamsError,
    InvalidIndexError,
    WordParseError,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "BalancedqError",
    "BalancingInvariantError",
    "BivariateSpec",
    "CapacityError",
    "CbSide",
    "CodecParams",
    "Codeword",
    "CONSTRUCTIONS",
    "CpbSide",
    "DecodeError",
    "GaussianSpec",
    "InfeasibleParamsError",
    "InvalidIndexError",
    "JointCensus",
    "KINDS",
    "KnuthSide",
    "PbSide",
    "PrefixPlan",
    "SbSide",
    "WordParseError",
    "anr",
    "approx_count",
    "approx_ln_count",
    "approx_redundancy",
    "balance_kind",
    "balancing_sequence",
    "bivariate_spec",
    "brute_force_count",
    "cb_decode",
    "cb_encode",
    "charge_count",
    "charge_sum",
    "count_cb",
    "count_cpb",
    "count_pb",
    "count_sb",
    "cpb_decode",
    "cpb_encode",
    "decode",
    "decode_prefix",
    "encode",
    "encode_prefix",
    "exact_count",
    "exact_redundancy",
    "format_word",
    "from_zq",
    "gaussian_count",
    "gaussian_ln_count",
    "gaussian_spec",
    "is_cb",
    "is_cpb",
    "is_pb",
    "is_sb",
    "joint_census",
    "joint_count",
    "joint_gaussian_count",
    "joint_gaussian_ln_count",
    "knuth_decode",
    "knuth_encode",
    "pack",
    "parse_word",
    "pb_decode",
    "pb_encode",
    "phi",
    "plan",
    "polarity_count",
    "polarity_sum",
    "rank",
    "sb_decode",
    "sb_encode",
    "side_info_space",
    "stirling_ln_factorial",
    "sub_alphabet",
    "symbol_count",
    "symbols",
    "to_zq",
    "unpack",
    "unrank",
    "validate_word",
]
