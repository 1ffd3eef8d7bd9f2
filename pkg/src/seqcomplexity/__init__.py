"""Linear, maximum order and expansion complexity of binary automatic sequences."""
from .bitseq import BitParseError, BitSequence, ingest
from .expansion import (
    BivariatePolyF2,
    PowerSeriesF2,
    eval_bivariate,
    expansion_complexity,
    series_from,
    witness_pattern,
    witness_tm,
)
from .formulas import pattern_moc_formula, pattern_shift_check, tm_moc_formula, tm_shift_check
from .linear import berlekamp_massey, lc_profile
from .moc import ComplexityProfile, MocResult, moc_automaton, moc_bruteforce, moc_profile
from .seqgen import (
    AlongSquares,
    File,
    Literal,
    Pattern,
    ThueMorse,
    generate,
    pattern_by_digit_count,
    pattern_sequence,
    thue_morse,
)

__version__ = "0.1.0"
