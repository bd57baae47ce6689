"""Двоичные 1-коды из троичных внешних кодов.

Пара битов сворачивается в трит (00, 11 -> 0; 01 -> 1; 10 -> 2), трит
разворачивается обратно в одно или два двоичных слова.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .channels import ProductChannel, corrects_t_errors
from .errors import AlphabetError, CodeError, PreconditionError
from .groups import Pairing
from .words import AlphabetSpec, CodeBook, evaluate_enumerator, weight_enumerator

logger = logging.getLogger(__name__)

TRIT_OF_BITS: Dict[Tuple[int, int], int] = {(0, 0): 0, (1, 1): 0, (0, 1): 1, (1, 0): 2}
BITS_OF_TRIT: Dict[int, Tuple[Tuple[int, int], ...]] = {0: ((0, 0), (1, 1)), 1: ((0, 1),), 2: ((1, 0),)}


def _require_binary(c: CodeBook) -> None:
    if any(q != 2 for q in c.alphabet.sizes):
        raise AlphabetError(f"ожидается двоичный код, алфавит {c.alphabet.sizes}")


def _require_length(c: CodeBook, p: Pairing) -> None:
    if p.length != c.length:
        raise CodeError(f"разбиение на пары длины {p.length}, а код длины {c.length}")


def folded_alphabet(p: Pairing) -> AlphabetSpec:
    """Одиночная координата идёт первой (бит), затем триты в порядке пар"""
    return AlphabetSpec(((2,) if p.singleton is not None else ()) + (3,) * len(p.pairs))


def fold_to_ternary(c: CodeBook, p: Pairing) -> CodeBook:
    _require_binary(c)
    _require_length(c, p)
    rows = set()
    for row in c.rows:
        head = (row[p.singleton],) if p.singleton is not None else ()
        rows.add(head + tuple(TRIT_OF_BITS[(row[i], row[j])] for i, j in p.pairs))
    return CodeBook(folded_alphabet(p), rows, name=f"fold({c.name})" if c.name else None)


def _placements(alphabet: AlphabetSpec, p: Optional[Pairing]) -> Tuple[int, List[Tuple[int, ...]]]:
    """Для каждой входной координаты - позиции выходных битов"""
    if any(q not in (2, 3) for q in alphabet.sizes):
        raise AlphabetError(f"разворачиваются только биты и триты, алфавит {alphabet.sizes}")
    if p is None:
        places, pos = [], 0
        for q in alphabet.sizes:
            width = 1 if q == 2 else 2
            places.append(tuple(range(pos, pos + width)))
            pos += width
        return pos, places
    if alphabet != folded_alphabet(p):
        raise AlphabetError(f"алфавит {alphabet.sizes} не соответствует разбиению {p.describe()}")
    places = ([(p.singleton,)] if p.singleton is not None else []) + [tuple(pair) for pair in p.pairs]
    return p.length, places


def expand_to_binary(c: CodeBook, p: Optional[Pairing] = None) -> CodeBook:
    """Каждый трит 0 даёт два варианта (00 и 11), биты копируются"""
    n, places = _placements(c.alphabet, p)
    rows = set()
    for row in c.rows:
        options = []
        for symbol, q, where in zip(row, c.alphabet.sizes, places):
            if q == 2:
                options.append((((where[0], symbol),),))
            else:
                options.append(tuple(((where[0], a), (where[1], b)) for a, b in BITS_OF_TRIT[symbol]))
        for choice in itertools.product(*options):
            word = [0] * n
            for part in choice:
                for pos, bit in part:
                    word[pos] = bit
            rows.add(tuple(word))
    return CodeBook(AlphabetSpec.uniform(2, n), rows)


def binary_image_size(c: CodeBook) -> int:
    """Размер образа: 2 в степени числа нулевых тритов, по всем словам"""
    if c.alphabet.is_uniform and c.alphabet.q == 3:
        return evaluate_enumerator(weight_enumerator(c), 2, 1)
    ternary = [i for i, q in enumerate(c.alphabet.sizes) if q == 3]
    return sum(2 ** sum(1 for i in ternary if row[i] == 0) for row in c.rows)


def _mixed_split(alphabet: AlphabetSpec) -> Tuple[int, int]:
    sizes = alphabet.sizes
    m1 = 0
    while m1 < len(sizes) and sizes[m1] == 2:
        m1 += 1
    if any(q != 3 for q in sizes[m1:]):
        raise AlphabetError(f"ожидается профиль Z^m1 x T^m2 (сначала биты, потом триты), получено {sizes}")
    return m1, len(sizes) - m1


def construct_even(c: CodeBook, check: bool = True) -> CodeBook:
    if not (c.alphabet.is_uniform and c.alphabet.q == 3):
        raise AlphabetError(f"ожидается троичный код, алфавит {c.alphabet.sizes}")
    m = c.length
    if check and not corrects_t_errors(c, ProductChannel.z_times_t(0, m), 1):
        raise PreconditionError("троичный код не исправляет одну ошибку канала T")
    image = expand_to_binary(c, Pairing.identity(2 * m))
    image.name = f"S^{m}({c.name or 'C'})"
    return image


def construct_odd_mixed(c: CodeBook, check: bool = True) -> CodeBook:
    m1, m2 = _mixed_split(c.alphabet)
    if check and not corrects_t_errors(c, ProductChannel.z_times_t(m1, m2), 1):
        raise PreconditionError(f"код не исправляет одну ошибку канала Z^{m1} x T^{m2}")
    image = expand_to_binary(c)
    image.name = f"S^{m2}({c.name or 'C'})"
    return image


def prefix_parts(c0: CodeBook, c1: CodeBook) -> CodeBook:
    """0C'_0 + 1C'_1 над Z x T^m"""
    if c0.alphabet != c1.alphabet or not (c0.alphabet.is_uniform and c0.alphabet.q == 3):
        raise AlphabetError("обе части должны быть троичными кодами одной длины")
    rows = [(0,) + r for r in c0.rows] + [(1,) + r for r in c1.rows]
    return CodeBook(AlphabetSpec.mixed(1, c0.length), rows)


def construct_extended(c0: CodeBook, c1: CodeBook, check: bool = True) -> CodeBook:
    """Расширенная конструкция: ведущий бит различает две части"""
    mixed = prefix_parts(c0, c1)
    if check and not corrects_t_errors(mixed, ProductChannel.z_times_t(1, c0.length), 1):
        raise PreconditionError("части не исправляют ошибку T или слишком близки друг к другу")
    image = expand_to_binary(mixed)
    image.name = f"ext({c0.name or 'C0'}, {c1.name or 'C1'})"
    return image


def is_ternary_code(c: CodeBook, p: Pairing) -> bool:
    return expand_to_binary(fold_to_ternary(c, p), p) == c


def _toggle_closed(rows: frozenset, i: int, j: int) -> bool:
    # 00 <-> 11 в паре (i, j) не выводит из кода
    for row in rows:
        if row[i] == row[j]:
            flipped = list(row)
            flipped[i] = flipped[j] = 1 - row[i]
            if tuple(flipped) not in rows:
                return False
    return True


def find_pairing(c: CodeBook) -> Optional[Pairing]:
    """Лексикографически наименьшее разбиение, при котором код троичный"""
    _require_binary(c)
    n = c.length
    rows = frozenset(c.rows)
    valid = {(i, j) for i in range(n) for j in range(i + 1, n) if _toggle_closed(rows, i, j)}

    def match(free: Sequence[int]) -> Optional[List[Tuple[int, int]]]:
        if not free:
            return []
        i = free[0]
        for j in free[1:]:
            if (i, j) in valid:
                rest = match([k for k in free[1:] if k != j])
                if rest is not None:
                    return [(i, j)] + rest
        return None

    singles = range(n) if n % 2 else [None]
    for s in singles:
        found = match([k for k in range(n) if k != s])
        if found is not None:
            return Pairing(tuple(found), s)
    logger.debug("для кода %r разбиение не найдено", c)
    return None
