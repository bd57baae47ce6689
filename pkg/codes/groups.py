"""Конечные абелевы группы, коды Варшамова-Тененгольца и Константина-Рао."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config import Config

from .errors import CodeError, EnumerationCapError
from .words import AlphabetSpec, CodeBook

logger = logging.getLogger(__name__)

GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """Z_{d_1} + ... + Z_{d_k}"""

    factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors or any(d < 2 for d in factors):
            raise CodeError(f"все множители группы должны быть >= 2: {factors}")

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroupDescriptor":
        return cls((order,))

    @classmethod
    def parse(cls, text: str) -> "AbelianGroupDescriptor":
        """'3x3' -> Z_3 + Z_3"""
        try:
            return cls(tuple(int(part) for part in text.lower().split("x")))
        except ValueError:
            raise CodeError(f"не удалось разобрать группу {text!r}, ожидается вида 3x3")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.factors)

    def contains(self, g: Sequence[int]) -> bool:
        return len(g) == len(self.factors) and all(0 <= x < d for x, d in zip(g, self.factors))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def inverse(self, g: GroupElement) -> GroupElement:
        return tuple((-x) % d for x, d in zip(g, self.factors))

    def element_order(self, g: GroupElement) -> int:
        return math.lcm(*(d // math.gcd(d, x) for x, d in zip(g, self.factors)))

    def describe(self) -> str:
        return "+".join(f"Z{d}" for d in self.factors)


def group_elements(G: AbelianGroupDescriptor) -> List[GroupElement]:
    """Неединичные элементы в лексикографическом порядке компонент"""
    return [g for g in itertools.product(*(range(d) for d in G.factors)) if any(g)]


def _prime_factors(n: int) -> List[int]:
    primes = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            primes.append(p)
            n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def best_cr_group(n: int) -> AbelianGroupDescriptor:
    """n_p копий Z_p для каждого простого p | n+1"""
    if n < 1:
        raise CodeError(f"длина должна быть >= 1, получено {n}")
    return AbelianGroupDescriptor(tuple(_prime_factors(n + 1)))


def cr_code(G: AbelianGroupDescriptor, g: Sequence[int], q: int = 2) -> CodeBook:
    g = tuple(int(x) for x in g)
    if not G.contains(g):
        raise CodeError(f"элемент {g} не принадлежит группе {G.describe()}")
    elements = group_elements(G)
    n = len(elements)
    if q > 2:
        low = [h for h in elements if G.element_order(h) < q]
        if low:
            raise CodeError(f"порядок элемента {low[0]} меньше q={q}, группа {G.describe()} не подходит")
    total = q ** n
    cap = Config.enumeration_cap()
    if total > cap:
        raise EnumerationCapError(f"код CR над {G.describe()}", total, cap)

    words = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(total, n)
    coeffs = np.array(elements, dtype=np.int64).reshape(n, len(G.factors))
    sums = (words @ coeffs) % np.array(G.factors, dtype=np.int64)
    keep = (sums == np.array(g, dtype=np.int64)).all(axis=1)
    name = f"CR({G.describe()}, g={','.join(map(str, g))}, q={q})"
    logger.debug("%s: %d слов из %d", name, int(keep.sum()), total)
    return CodeBook(AlphabetSpec.uniform(q, n), (tuple(r) for r in words[keep].tolist()), name=name)


def vt_code(n: int, g: int, q: int = 2) -> CodeBook:
    if not 0 <= g <= n:
        raise CodeError(f"нужно 0 <= g <= n, получено g={g}, n={n}")
    code = cr_code(AbelianGroupDescriptor.cyclic(n + 1), (g,), q)
    code.name = f"VT(n={n}, g={g}, q={q})"
    return code


@dataclass(frozen=True)
class Pairing:
    """Разбиение координат (с нуля) на пары и не более чем одну одиночную"""

    pairs: Tuple[Tuple[int, int], ...]
    singleton: Optional[int] = None

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        covered = [c for pair in pairs for c in pair]
        if self.singleton is not None:
            covered.append(self.singleton)
        if sorted(covered) != list(range(len(covered))):
            raise CodeError(f"пары {pairs} и одиночная {self.singleton} не покрывают координаты ровно один раз")
        if (self.singleton is not None) != (len(covered) % 2 == 1):
            raise CodeError("одиночная координата нужна тогда и только тогда, когда длина нечётна")

    @property
    def length(self) -> int:
        return 2 * len(self.pairs) + (self.singleton is not None)

    @classmethod
    def identity(cls, n: int) -> "Pairing":
        """(1,2),(3,4),...; при нечётной длине первая координата остаётся битом"""
        offset = n % 2
        pairs = tuple((offset + 2 * j, offset + 2 * j + 1) for j in range(n // 2))
        return cls(pairs, 0 if offset else None)

    @classmethod
    def from_one_based(cls, pairs, singleton=None) -> "Pairing":
        return cls(tuple((i - 1, j - 1) for i, j in pairs), None if singleton is None else singleton - 1)

    def one_based(self) -> dict:
        return {
            "pairs": [[i + 1, j + 1] for i, j in self.pairs],
            "singleton": None if self.singleton is None else self.singleton + 1,
        }

    def describe(self) -> str:
        text = " ".join(f"({i + 1},{j + 1})" for i, j in self.pairs)
        if self.singleton is not None:
            text += f" [{self.singleton + 1}]"
        return text


def canonical_pairing(group_or_length: Union[AbelianGroupDescriptor, int], mode: str = "inverse") -> Pairing:
    if mode == "vt-odd":
        n = group_or_length if isinstance(group_or_length, int) else group_or_length.order - 1
        if n % 2 == 0:
            raise CodeError(f"режим vt-odd требует нечётной длины, получено {n}")
        half = (n - 1) // 2
        return Pairing(tuple((i, n - 1 - i) for i in range(half)), half)
    if mode != "inverse":
        raise CodeError(f"неизвестный режим разбиения на пары: {mode}")

    G = group_or_length
    if isinstance(G, int):
        G = AbelianGroupDescriptor.cyclic(G + 1)
    if G.order % 2 == 0:
        raise CodeError(f"группа {G.describe()} чётного порядка: есть элемент, обратный сам себе")
    elements = group_elements(G)
    index = {h: i for i, h in enumerate(elements)}
    pairs = []
    for i, h in enumerate(elements):
        j = index[G.inverse(h)]
        if i < j:
            pairs.append((i, j))
    return Pairing(tuple(pairs))
