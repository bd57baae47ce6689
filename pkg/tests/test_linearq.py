import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from codes import (
    AlphabetSpec,
    CodeBook,
    CodeError,
    CodeFileError,
    DecodingError,
    MatrixModZq,
    MatrixRole,
    PreconditionError,
    Word,
    asym_distance,
    codewords_of,
    concat_code,
    decode_concat,
    double_code,
    generator_from_parity_check,
    hamming_parity_check,
    is_single_rq_correcting,
    is_t_code,
    lee_parity_check,
    linear_one_code,
    min_asym_distance,
    min_hamming_distance,
    nonbinary_comparison,
    parse_matrix,
    syndrome,
    write_matrix,
)
from codes.linearq import columns_single_rq_correcting, rank_mod_q

REPETITION_OUTER_WORDS = """
00000 00011 00022 01100 01111 01122 02200 02211 02222
10101 10112 10120 11201 11212 11220 12001 12012 12020
21010 21021 21002 22110 22121 22102 20210 20221 20202
""".split()


@pytest.fixture
def repetition_outer():
    return MatrixModZq.from_rows(3, [[1, 1, 1]])


def test_lee_matrix_with_nonzero_first_row():
    H = lee_parity_check(5, 2, full=False)
    assert [list(row) for row in H.entries] == [
        [1, 1, 1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 2, 3, 4, 0, 1, 2, 3, 4],
    ]
    assert is_single_rq_correcting(H)


def test_full_lee_matrix():
    H = lee_parity_check(5, 2)
    assert H.n == 12
    assert is_single_rq_correcting(H)
    with pytest.raises(CodeError):
        lee_parity_check(4, 2)


def test_plus_minus_collision_is_not_correcting():
    assert not is_single_rq_correcting(MatrixModZq.from_columns(5, [(1,), (4,)]))
    assert not columns_single_rq_correcting([(1, 0), (0, 0)], 5)


def test_zero_column_rejected_in_parity_check():
    with pytest.raises(CodeError):
        MatrixModZq.from_columns(3, [(1, 0), (0, 0)])


def test_is_single_rq_correcting_needs_parity_role(repetition_outer):
    with pytest.raises(CodeError):
        is_single_rq_correcting(repetition_outer)


def test_ternary_hamming_code():
    H = hamming_parity_check(3, 2)
    assert H.n == 4
    assert rank_mod_q(H) == 2
    assert min_hamming_distance(H) == 3
    G = generator_from_parity_check(H)
    assert G.role is MatrixRole.GENERATOR and G.rows == 2
    for row in G.entries:
        assert syndrome(H, row) == (0, 0)


def test_only_prime_moduli():
    with pytest.raises(CodeError):
        hamming_parity_check(4, 2)


def test_repetition_outer_code_gives_shortened_code(repetition_outer):
    result = concat_code(repetition_outer, shorten_to_odd=True)
    assert result.describe() == "[5,3]_3"
    assert result.code.strings() == sorted(REPETITION_OUTER_WORDS)
    assert min_asym_distance(result.code) == 2


def test_repetition_outer_code_gives_length_six(repetition_outer):
    result = concat_code(repetition_outer)
    assert result.describe() == "[6,4]_3"
    assert is_t_code(result.code, 1)


def test_hamming_outer_codes(concat_8_6):
    assert concat_8_6.describe() == "[8,6]_3"
    assert len(concat_8_6.code) == 729
    assert is_t_code(concat_8_6.code, 1)
    shortened = concat_code(lee_parity_check(3, 2), shorten_to_odd=True)
    assert shortened.describe() == "[7,5]_3"
    assert is_t_code(shortened.code, 1)


def test_large_code_is_left_as_generator():
    result = concat_code(lee_parity_check(5, 2, full=False))
    assert result.describe() == "[20,18]_5"
    assert result.code is None


def test_concat_rejects_useless_outer_codes():
    with pytest.raises(PreconditionError):
        concat_code(MatrixModZq.from_rows(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(PreconditionError):
        concat_code(MatrixModZq.from_rows(3, [[1, 0, 0]]))
    with pytest.raises(PreconditionError):
        concat_code(MatrixModZq.from_columns(5, [(1,), (4,)]))
    with pytest.raises(CodeError):
        concat_code(MatrixModZq.from_columns(2, [(1, 0), (0, 1), (1, 1)]))


def test_doubling_doubles_the_distance(repetition_outer):
    doubled = double_code(concat_code(repetition_outer, shorten_to_odd=True).code)
    assert doubled.length == 10
    assert len(doubled) == 27
    assert min_asym_distance(doubled) == 4
    assert is_t_code(doubled, 3)


def _single_error_sweep(result):
    H = result.outer_parity
    for x in result.code:
        for i, symbol in enumerate(x.symbols):
            if symbol == 0:
                continue
            received = Word(x.symbols[:i] + (symbol - 1,) + x.symbols[i + 1:], x.alphabet)
            assert decode_concat(H, received) == x


def test_decoder_corrects_every_single_error(concat_8_6):
    _single_error_sweep(concat_8_6)


def test_decoder_on_shortened_code(repetition_outer):
    _single_error_sweep(concat_code(repetition_outer, shorten_to_odd=True))


def test_decoder_leaves_codewords_alone(concat_8_6):
    for x in list(concat_8_6.code)[:50]:
        assert decode_concat(concat_8_6.outer_parity, x) == x


def test_two_errors_are_not_silently_fixed(concat_8_6):
    x = Word((1, 1, 1, 1, 0, 0, 0, 0), concat_8_6.code.alphabet)
    assert x in concat_8_6.code
    received = Word((0, 1, 0, 1, 0, 0, 0, 0), x.alphabet)
    try:
        decoded = decode_concat(concat_8_6.outer_parity, received)
    except DecodingError:
        return
    assert decoded != x


def test_decoder_reports_impossible_errors(concat_8_6):
    with pytest.raises(DecodingError):
        decode_concat(concat_8_6.outer_parity, Word.of("20000000", 3))
    short = linear_one_code(3, 5)
    with pytest.raises(DecodingError):
        decode_concat(short.outer_parity, Word.of("20100", 3))


def test_linear_one_code_dimensions():
    assert linear_one_code(3, 8).describe() == "[8,6]_3"
    assert linear_one_code(3, 5).describe() == "[5,3]_3"
    assert linear_one_code(5, 20).describe() == "[20,18]_5"
    with pytest.raises(CodeError):
        linear_one_code(2, 8)


def test_nonbinary_comparison_beats_symmetric_codes():
    rows = nonbinary_comparison(3, [5, 6, 7, 8])
    assert [(r["n"], r["k_asym"], r["k_sym"]) for r in rows] == [(5, 3, 2), (6, 4, 3), (7, 5, 4), (8, 6, 5)]


def test_codewords_of_parity_check_matrix():
    code = codewords_of(hamming_parity_check(3, 2))
    assert len(code) == 9
    assert Word.of("0000", 3) in code


def test_matrix_file_round_trip():
    H = lee_parity_check(5, 2, full=False)
    text = write_matrix(H)
    assert text.splitlines()[0] == "5 2 10 parity"
    assert parse_matrix("# внешний код\n" + text) == H


@pytest.mark.parametrize("text, line", [
    ("3 2 4\n1 0 1 1\n0 1 1 2\n", 1),
    ("3 2 4 parity\n1 0 1 1\n", 1),
    ("3 2 4 parity\n1 0 1 1\n0 1 1 3\n", 3),
    ("3 1 3 generator\n1 1\n", 2),
    ("3 1 3 generator\n1 x 1\n", 2),
    ("3 2 3 parity\n1 0 0\n0 1 0\n", 3),
])
def test_matrix_file_errors(text, line):
    with pytest.raises(CodeFileError) as info:
        parse_matrix(text)
    assert info.value.line_number == line


def test_empty_matrix_file():
    with pytest.raises(CodeFileError):
        parse_matrix("# пусто\n")


@st.composite
def small_codes(draw):
    q = draw(st.integers(2, 4))
    n = draw(st.integers(1, 4))
    rows = draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * n), min_size=2, max_size=8, unique=True))
    return CodeBook(AlphabetSpec.uniform(q, n), rows)


@given(small_codes())
def test_doubling_is_exact(c):
    assert min_asym_distance(double_code(c)) == 2 * min_asym_distance(c)


def test_doubled_length_six_code(repetition_outer):
    code = concat_code(repetition_outer).code
    doubled = double_code(code)
    assert len(doubled) == 81
    assert doubled.length == 12
    assert min_asym_distance(doubled) == 4
    assert is_t_code(doubled, 3)


@pytest.mark.parametrize("outer", [
    MatrixModZq.from_rows(3, [[1, 1, 1]]),
    hamming_parity_check(3, 2),
    lee_parity_check(3, 2),
])
def test_concat_code_is_linear(outer):
    result = concat_code(outer)
    code = result.code
    assert len(code) == 3 ** result.dimension
    q = code.alphabet.q
    for x, y in itertools.combinations(list(code.rows)[:60], 2):
        assert tuple((a + b) % q for a, b in zip(x, y)) in code


@pytest.mark.parametrize("outer", [MatrixModZq.from_rows(3, [[1, 1, 1]]), hamming_parity_check(3, 2)])
def test_concat_code_is_a_union_of_inner_cosets(outer):
    result = concat_code(outer)
    q, m = 3, result.outer_parity.n
    expected = set()
    for c in codewords_of(result.outer_parity).rows:
        for a in itertools.product(range(q), repeat=m):
            expected.add(tuple(s for j in range(m) for s in (a[j], (a[j] + c[j]) % q)))
    assert set(result.code.rows) == expected


@pytest.fixture(scope="module")
def concat_20_18():
    result = concat_code(lee_parity_check(5, 2, full=False))
    rng = np.random.default_rng(2024)
    messages = rng.integers(0, 5, size=(300, result.dimension))
    words = (messages @ result.generator.array()) % 5
    return result, [tuple(int(s) for s in row) for row in words]


def test_decoder_on_length_twenty_code(concat_20_18):
    result, words = concat_20_18
    alphabet = AlphabetSpec.uniform(5, 20)
    for symbols in words:
        x = Word(symbols, alphabet)
        assert decode_concat(result.outer_parity, x) == x
        for i, s in enumerate(symbols):
            if s == 0:
                continue
            received = Word(symbols[:i] + (s - 1,) + symbols[i + 1:], alphabet)
            assert decode_concat(result.outer_parity, received) == x


def test_random_pairs_of_length_twenty_code_are_apart(concat_20_18):
    _, words = concat_20_18
    alphabet = AlphabetSpec.uniform(5, 20)
    rng = np.random.default_rng(7)
    for i, j in rng.integers(0, len(words), size=(3000, 2)):
        if words[i] != words[j]:
            assert asym_distance(Word(words[i], alphabet), Word(words[j], alphabet)) >= 2
