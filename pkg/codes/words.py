"""Слова, кодовые книги и асимметричные метрики.

Расстояние Δ считает суммарное уменьшение символов (канал, где символ может
только уменьшиться), d_ℓ считает число ошибочных координат при ограниченной
амплитуде ошибки.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from .errors import AlphabetError, CodeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphabetSpec:
    sizes: Tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes:
            raise AlphabetError("алфавит должен иметь хотя бы одну координату")
        if any(s < 2 for s in sizes):
            raise AlphabetError(f"размеры алфавита должны быть >= 2: {sizes}")

    @classmethod
    def uniform(cls, q: int, n: int) -> "AlphabetSpec":
        return cls((q,) * n)

    @classmethod
    def mixed(cls, binary: int, ternary: int) -> "AlphabetSpec":
        """Профиль Z^{m1} x T^{m2}: сначала биты, потом триты"""
        return cls((2,) * binary + (3,) * ternary)

    @property
    def length(self) -> int:
        return len(self.sizes)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.sizes)) == 1

    @property
    def q(self) -> int:
        if not self.is_uniform:
            raise AlphabetError(f"алфавит не однородный: {self.sizes}")
        return self.sizes[0]

    def validate(self, symbols: Sequence[int]) -> None:
        if len(symbols) != self.length:
            raise AlphabetError(f"длина слова {len(symbols)} не совпадает с длиной алфавита {self.length}")
        for i, (s, q) in enumerate(zip(symbols, self.sizes)):
            if not 0 <= s < q:
                raise AlphabetError(f"символ {s} в позиции {i + 1} вне диапазона 0..{q - 1}")

    def profile_text(self) -> str:
        if self.is_uniform:
            return str(self.sizes[0])
        return ",".join(str(s) for s in self.sizes)

    def size(self) -> int:
        total = 1
        for s in self.sizes:
            total *= s
        return total


@dataclass(frozen=True)
class Word:
    symbols: Tuple[int, ...]
    alphabet: AlphabetSpec

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        self.alphabet.validate(symbols)

    @classmethod
    def parse(cls, text: str, alphabet: AlphabetSpec) -> "Word":
        return cls(split_symbols(text), alphabet)

    @classmethod
    def of(cls, text: str, q: int = 2) -> "Word":
        """Короткая запись для однородного алфавита: Word.of("0110")"""
        symbols = split_symbols(text)
        return cls(symbols, AlphabetSpec.uniform(q, len(symbols)))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return format_symbols(self.symbols, self.alphabet.sizes)


def split_symbols(text: str) -> Tuple[int, ...]:
    """Цифровая строка или целые через запятую, `10,` - слово из одного символа"""
    text = text.strip()
    if "," in text:
        if text.endswith(","):
            text = text[:-1]
        return tuple(int(part) for part in text.split(","))
    return tuple(int(ch) for ch in text)


def format_symbols(symbols: Sequence[int], sizes: Optional[Sequence[int]] = None) -> str:
    """Запятые, если алфавит шире десяти символов; одиночный символ с запятой в конце"""
    wide = any(q > 10 for q in sizes) if sizes is not None else any(s >= 10 for s in symbols)
    if not wide:
        return "".join(str(s) for s in symbols)
    text = ",".join(str(s) for s in symbols)
    return text + "," if len(symbols) == 1 else text


class CodeBook:
    """Множество слов над общим алфавитом в лексикографическом порядке"""

    def __init__(self, alphabet: AlphabetSpec, words: Iterable = (), name: Optional[str] = None,
                 metadata: Optional[dict] = None):
        self.alphabet = alphabet
        rows = set()
        for w in words:
            if isinstance(w, Word):
                if w.alphabet != alphabet:
                    raise AlphabetError(f"слово {w} над другим алфавитом")
                rows.add(w.symbols)
            else:
                symbols = tuple(int(s) for s in w)
                alphabet.validate(symbols)
                rows.add(symbols)
        self._rows = tuple(sorted(rows))
        self._array = None
        self._lookup = None
        self.name = name
        self.metadata = dict(metadata or {})

    @classmethod
    def from_strings(cls, texts: Iterable[str], q: int = 2, name: Optional[str] = None) -> "CodeBook":
        texts = [t.strip() for t in texts]
        if not texts:
            raise CodeError("нужна хотя бы одна строка, чтобы определить длину")
        alphabet = AlphabetSpec.uniform(q, len(texts[0]))
        return cls(alphabet, (Word.parse(t, alphabet).symbols for t in texts), name=name)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    @property
    def length(self) -> int:
        return self.alphabet.length

    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.array(self._rows, dtype=np.int64).reshape(len(self._rows), self.length)
            self._array.setflags(write=False)
        return self._array

    def words(self) -> Iterator[Word]:
        for row in self._rows:
            yield Word(row, self.alphabet)

    def strings(self):
        return [format_symbols(r, self.alphabet.sizes) for r in self._rows]

    def with_metadata(self, **entries) -> "CodeBook":
        book = CodeBook(self.alphabet, self._rows, name=self.name, metadata=self.metadata)
        book.metadata.update(entries)
        return book

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return self.words()

    def __contains__(self, item):
        symbols = item.symbols if isinstance(item, Word) else tuple(item)
        if self._lookup is None:
            self._lookup = frozenset(self._rows)
        return symbols in self._lookup

    def __eq__(self, other):
        if not isinstance(other, CodeBook):
            return NotImplemented
        return self.alphabet == other.alphabet and self._rows == other._rows

    def __hash__(self):
        return hash((self.alphabet, self._rows))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<CodeBook{label} n={self.length} q={self.alphabet.profile_text()} size={len(self)}>"


@dataclass(frozen=True)
class WeightEnumerator:
    length: int
    coefficients: Tuple[int, ...]

    def __getitem__(self, w):
        return self.coefficients[w]

    def as_dict(self) -> dict:
        return {w: a for w, a in enumerate(self.coefficients) if a}

    @property
    def total(self) -> int:
        return sum(self.coefficients)


class DecodeStatus(Enum):
    DECODED = "decoded"
    AMBIGUOUS = "ambiguous"
    FAILURE = "failure"


@dataclass(frozen=True)
class DecodeResult:
    status: DecodeStatus
    codeword: Optional[Word] = None
    candidates: Tuple[Word, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.DECODED


def _check_same(x: Word, y: Word) -> None:
    if x.alphabet != y.alphabet:
        raise AlphabetError(f"слова над разными алфавитами: {x.alphabet.sizes} и {y.alphabet.sizes}")


def weight_w(x: Word) -> int:
    return sum(x.symbols)


def one_sided_distance(x: Word, y: Word) -> int:
    """N(x, y) = сумма max(y_i - x_i, 0)"""
    _check_same(x, y)
    return sum(max(b - a, 0) for a, b in zip(x.symbols, y.symbols))


def asym_distance(x: Word, y: Word) -> int:
    return max(one_sided_distance(x, y), one_sided_distance(y, x))


def hamming_distance(x: Word, y: Word) -> int:
    _check_same(x, y)
    return sum(1 for a, b in zip(x.symbols, y.symbols) if a != b)


def _pairwise_rows(c: CodeBook):
    """Для каждого слова - разности со всеми следующими словами"""
    arr = c.array()
    for i in range(len(arr) - 1):
        yield i, arr[i + 1:] - arr[i]


def _asym_from_diff(diff: np.ndarray) -> np.ndarray:
    # diff = y - x построчно
    up = np.clip(diff, 0, None).sum(axis=1)
    down = np.clip(-diff, 0, None).sum(axis=1)
    return np.maximum(up, down)


def min_asym_distance(c: CodeBook) -> int:
    if len(c) < 2:
        raise CodeError("для минимального расстояния нужно хотя бы два слова")
    best = None
    for _, diff in _pairwise_rows(c):
        value = int(_asym_from_diff(diff).min())
        if best is None or value < best:
            best = value
    return best


def is_t_code(c: CodeBook, t: int) -> bool:
    if t < 1:
        raise CodeError(f"t должно быть >= 1, получено {t}")
    for _, diff in _pairwise_rows(c):
        if (_asym_from_diff(diff) <= t).any():
            return False
    return True


def weight_enumerator(c: CodeBook) -> WeightEnumerator:
    n = c.length
    counts = [0] * (n + 1)
    for row in c.rows:
        counts[sum(1 for s in row if s)] += 1
    return WeightEnumerator(n, tuple(counts))


def evaluate_enumerator(w: WeightEnumerator, X: int, Y: int) -> int:
    n = w.length
    return sum(a * X ** (n - k) * Y ** k for k, a in enumerate(w.coefficients))


def decode_asymmetric(c: CodeBook, received: Word, t: int) -> DecodeResult:
    """Полный перебор: x >= y покоординатно и w(x - y) <= t"""
    if received.alphabet != c.alphabet:
        raise AlphabetError("принятое слово над другим алфавитом")
    if not len(c):
        return DecodeResult(DecodeStatus.FAILURE)
    arr = c.array()
    r = np.array(received.symbols, dtype=np.int64)
    above = (arr >= r).all(axis=1)
    within = (arr - r).sum(axis=1) <= t
    hits = np.flatnonzero(above & within)
    candidates = tuple(Word(c.rows[i], c.alphabet) for i in hits)
    if len(candidates) == 1:
        return DecodeResult(DecodeStatus.DECODED, candidates[0], candidates)
    if not candidates:
        return DecodeResult(DecodeStatus.FAILURE)
    return DecodeResult(DecodeStatus.AMBIGUOUS, None, candidates)


def _check_ell(q: int, ell: int, wrap: bool) -> None:
    if ell < 1:
        raise CodeError(f"ℓ должно быть >= 1, получено {ell}")
    if wrap and q <= 2 * ell:
        raise CodeError(f"при циклическом вычитании нужно q > 2ℓ, получено q={q}, ℓ={ell}")


def _d_ell_from_diff(diff: np.ndarray, n: int, q: int, ell: int, wrap: bool) -> np.ndarray:
    # diff = y - x построчно
    if wrap:
        x_over = (-diff) % q
        y_over = diff % q
        x_above = (x_over >= 1) & (x_over <= ell)
        y_above = (y_over >= 1) & (y_over <= ell)
        broken = ((diff % q) != 0) & ~x_above & ~y_above
    else:
        x_above = diff < 0
        y_above = diff > 0
        broken = np.abs(diff) > ell
    value = np.maximum(x_above.sum(axis=1), y_above.sum(axis=1))
    return np.where(broken.any(axis=1), n + 1, value)


def d_ell_distance(x: Word, y: Word, ell: int, wrap: bool = False) -> int:
    _check_same(x, y)
    q = x.alphabet.q
    _check_ell(q, ell, wrap)
    diff = np.array([y.symbols], dtype=np.int64) - np.array(x.symbols, dtype=np.int64)
    return int(_d_ell_from_diff(diff, len(x), q, ell, wrap)[0])


def is_lm_code(c: CodeBook, t_tilde: int, ell: int, wrap: bool = False) -> bool:
    q = c.alphabet.q
    _check_ell(q, ell, wrap)
    n = c.length
    for _, diff in _pairwise_rows(c):
        if (_d_ell_from_diff(diff, n, q, ell, wrap) < t_tilde + 1).any():
            return False
    return True


def code_profile(c: CodeBook) -> dict:
    return {
        "n": c.length,
        "q": c.alphabet.profile_text(),
        "size": len(c),
        "min_asym_distance": min_asym_distance(c) if len(c) >= 2 else None,
    }
