import pytest

from codes import AlphabetSpec, CodeBook, concat_code, lee_parity_check


@pytest.fixture
def example_ternary_code():
    """Троичный 1-код канала T длины 3, двоичный образ из 12 слов"""
    return CodeBook.from_strings(["000", "111", "122", "212", "221"], q=3)


@pytest.fixture
def optimal_binary_four():
    return CodeBook.from_strings(["0000", "1100", "0011", "1111"])


@pytest.fixture(scope="session")
def concat_8_6():
    return concat_code(lee_parity_check(3, 2))


@pytest.fixture
def not_a_one_code():
    return CodeBook(AlphabetSpec.uniform(2, 2), [(0, 0), (0, 1)])

