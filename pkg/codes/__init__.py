from .errors import (
    AlphabetError,
    CodeError,
    CodeFileError,
    DecodingError,
    EnumerationCapError,
    PreconditionError,
)
from .words import (
    AlphabetSpec,
    CodeBook,
    DecodeResult,
    DecodeStatus,
    WeightEnumerator,
    Word,
    asym_distance,
    code_profile,
    d_ell_distance,
    decode_asymmetric,
    evaluate_enumerator,
    hamming_distance,
    is_lm_code,
    is_t_code,
    min_asym_distance,
    one_sided_distance,
    weight_enumerator,
    weight_w,
)
from .channels import (
    BallDecoder,
    ChannelGraph,
    ChannelKind,
    Counting,
    ProductChannel,
    SimulationResult,
    ball_decode,
    corrects_t_errors,
    error_ball,
    make_channel,
    make_product,
    simulate_channel,
)
from .groups import (
    AbelianGroupDescriptor,
    Pairing,
    best_cr_group,
    canonical_pairing,
    cr_code,
    group_elements,
    vt_code,
)
from .ternary import (
    binary_image_size,
    construct_even,
    construct_extended,
    construct_odd_mixed,
    expand_to_binary,
    find_pairing,
    fold_to_ternary,
    is_ternary_code,
)
from .linearq import (
    ConcatResult,
    MatrixModZq,
    MatrixRole,
    best_symmetric_dimension,
    codewords_of,
    concat_code,
    decode_concat,
    double_code,
    generator_from_parity_check,
    hamming_parity_check,
    is_single_rq_correcting,
    lee_parity_check,
    linear_one_code,
    min_hamming_distance,
    nonbinary_comparison,
    parse_matrix,
    syndrome,
    write_matrix,
)
from .cyclic import (
    Orbit,
    SearchConfig,
    SearchStrategy,
    builtin_table_generators,
    enumerate_orbits,
    orbits_compatible,
    search_cyclic,
    search_extended,
)
from .bounds import (
    best_d3_dimension,
    is_perfect,
    rate_ratio,
    sphere_bound,
    table1_report,
    table2_report,
    vt_vs_linear,
)
from .codefile import load_code, parse_code_file, save_code, write_code_file

__all__ = [
    'CodeError', 'AlphabetError', 'PreconditionError', 'EnumerationCapError', 'DecodingError', 'CodeFileError',
    'AlphabetSpec', 'Word', 'CodeBook', 'WeightEnumerator', 'DecodeStatus', 'DecodeResult',
    'weight_w', 'one_sided_distance', 'asym_distance', 'hamming_distance', 'min_asym_distance', 'is_t_code',
    'weight_enumerator', 'evaluate_enumerator', 'decode_asymmetric', 'd_ell_distance', 'is_lm_code',
    'code_profile',
    'ChannelKind', 'Counting', 'ChannelGraph', 'ProductChannel', 'make_channel', 'error_ball',
    'make_product', 'corrects_t_errors', 'BallDecoder', 'ball_decode', 'SimulationResult', 'simulate_channel',
    'AbelianGroupDescriptor', 'group_elements', 'best_cr_group', 'cr_code', 'vt_code', 'Pairing',
    'canonical_pairing',
    'fold_to_ternary', 'expand_to_binary', 'binary_image_size', 'construct_even', 'construct_odd_mixed',
    'construct_extended', 'is_ternary_code', 'find_pairing',
    'MatrixRole', 'MatrixModZq', 'ConcatResult', 'hamming_parity_check', 'lee_parity_check',
    'is_single_rq_correcting', 'codewords_of', 'concat_code', 'double_code', 'decode_concat',
    'min_hamming_distance', 'generator_from_parity_check', 'syndrome', 'linear_one_code',
    'best_symmetric_dimension', 'nonbinary_comparison', 'write_matrix', 'parse_matrix',
    'Orbit', 'SearchStrategy', 'SearchConfig', 'enumerate_orbits', 'orbits_compatible', 'search_cyclic',
    'search_extended', 'builtin_table_generators',
    'sphere_bound', 'is_perfect', 'best_d3_dimension', 'rate_ratio', 'table1_report', 'table2_report',
    'vt_vs_linear',
    'parse_code_file', 'write_code_file', 'load_code', 'save_code',
]
