"""Multiplicity-free q-ary codes correcting multiple deletions, built by pairing
a constant-weight set code with a deletion-correcting permutation code."""

from .analysis import (
    BoundReport,
    SimulationReport,
    redundancy,
    redundancy_bound,
    simulate,
    singleton_report,
    size_lower_bound,
)
from .errors import (
    Ambiguous,
    DecodeError,
    DelcodeError,
    InputTooShort,
    NoSolution,
    NotFound,
    PermDecodeFailed,
    ScaleGuardExceeded,
    SetDecodeFailed,
    SymbolNotInSet,
    WeightTooLow,
)
from .model import (
    DeletionPattern,
    Permutation,
    SymbolSet,
    Word,
    apply_stable_deletions,
    apply_unstable_deletions,
    delete_positions,
    draw_deletion_pattern,
    sample_deletion_pattern,
)
from .modular import Modulus, ModPolynomial, locator_roots, next_prime_above, power_sums_to_elementary
from .multfree import (
    DecodeSteps,
    MultFreeCodeSpec,
    SetCode,
    build_code,
    code_size,
    decode,
    decode_steps,
    encode_index,
    induced_permutation,
    induced_set,
    load_spec,
    psi,
    save_spec,
    symbol_ranks,
)
from .permcode import (
    PermCodeBook,
    greedy_sd_code,
    greedy_ud_code,
    reference_size_bound,
    sd_decode,
    stable_deletion_ball,
    ud_decode,
    unstable_deletion_ball,
    verify_sd_property,
    verify_ud_property,
)
from .vtcode import (
    SyndromeVector,
    VTParams,
    best_class,
    bitword_to_subset,
    class_sizes,
    decode_asymmetric,
    enumerate_class,
    format_bitword,
    is_codeword,
    parse_bitword,
    read_bitwords,
    set_decode,
    subset_to_bitword,
    vt_syndrome,
    write_bitwords,
)

__version__ = "0.1.0"
