"""Графы переходов каналов, шары ошибок и переборный оракул исправимости."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional, Sequence, Set, Tuple

import numpy as np

from config import Config

from .errors import AlphabetError, CodeError, EnumerationCapError
from .words import AlphabetSpec, CodeBook, DecodeResult, DecodeStatus, Word, decode_asymmetric

logger = logging.getLogger(__name__)


class ChannelKind(str, Enum):
    Z = "Z"
    T = "T"
    RQ = "Rq"
    CHAIN = "chain"
    L1_WRAP = "L1-wrap"


class Counting(str, Enum):
    MAGNITUDE = "magnitude"
    COORDINATES = "coordinates"


@dataclass(frozen=True)
class ChannelGraph:
    q: int
    edges: FrozenSet[Tuple[int, int]]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(a), int(b)) for a, b in self.edges))
        if self.q < 2:
            raise CodeError(f"размер алфавита канала должен быть >= 2, получено {self.q}")
        for a, b in self.edges:
            if a == b:
                raise CodeError(f"петля {a}->{b} в графе канала")
            if not (0 <= a < self.q and 0 <= b < self.q):
                raise CodeError(f"ребро {a}->{b} вне алфавита 0..{self.q - 1}")
        succ = {a: tuple(sorted(b for x, b in self.edges if x == a)) for a in range(self.q)}
        object.__setattr__(self, "_successors", succ)

    def successors(self, a: int) -> Tuple[int, ...]:
        return self._successors[a]

    @property
    def is_chain(self) -> bool:
        """Канал, где символ уменьшается ровно на единицу без переноса"""
        return self.edges == frozenset((a, a - 1) for a in range(1, self.q))

    def reachable(self, a: int, steps: int) -> Set[int]:
        """Символы, достижимые из a не более чем за steps переходов"""
        seen = {a}
        frontier = {a}
        for _ in range(steps):
            frontier = {b for s in frontier for b in self.successors(s)} - seen
            if not frontier:
                break
            seen |= frontier
        return seen


def make_channel(kind, q: int) -> ChannelGraph:
    kind = ChannelKind(kind)
    if kind is ChannelKind.Z:
        if q != 2:
            raise CodeError(f"канал Z определён только для q=2, получено {q}")
        return ChannelGraph(2, frozenset({(1, 0)}), "Z")
    if kind is ChannelKind.T:
        if q != 3:
            raise CodeError(f"канал T определён только для q=3, получено {q}")
        return ChannelGraph(3, frozenset({(0, 1), (0, 2), (1, 0), (2, 0)}), "T")
    if q < 2:
        raise CodeError(f"q должно быть >= 2, получено {q}")
    if kind is ChannelKind.RQ:
        if q < 3:
            raise CodeError(f"канал R_q нужен для q >= 3, получено {q}")
        edges = {(i, (i + 1) % q) for i in range(q)} | {(i, (i - 1) % q) for i in range(q)}
        return ChannelGraph(q, frozenset(edges), f"R{q}")
    if kind is ChannelKind.CHAIN:
        return ChannelGraph(q, frozenset((i, i - 1) for i in range(1, q)), f"chain{q}")
    return ChannelGraph(q, frozenset((i, (i - 1) % q) for i in range(q)), f"L{q}")


@dataclass(frozen=True)
class ProductChannel:
    coordinates: Tuple[ChannelGraph, ...]

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(self.coordinates))
        if not self.coordinates:
            raise CodeError("произведение каналов должно иметь хотя бы одну координату")

    @classmethod
    def uniform(cls, graph: ChannelGraph, n: int) -> "ProductChannel":
        return cls((graph,) * n)

    @classmethod
    def of(cls, kind, q: int, n: int) -> "ProductChannel":
        return cls.uniform(make_channel(kind, q), n)

    @classmethod
    def z_times_t(cls, binary: int, ternary: int) -> "ProductChannel":
        """Z^{m1} x T^{m2}"""
        z, t = make_channel(ChannelKind.Z, 2), make_channel(ChannelKind.T, 3)
        return cls((z,) * binary + (t,) * ternary)

    @property
    def alphabet(self) -> AlphabetSpec:
        return AlphabetSpec(tuple(g.q for g in self.coordinates))

    @property
    def length(self) -> int:
        return len(self.coordinates)

    @property
    def is_chain(self) -> bool:
        return all(g.is_chain for g in self.coordinates)

    def describe(self) -> str:
        names = [g.name or f"q{g.q}" for g in self.coordinates]
        if len(set(names)) == 1:
            return f"{names[0]}^{len(names)}"
        return "x".join(names)


def make_product(alphabet: AlphabetSpec, kind=None) -> ProductChannel:
    """Канал для алфавита кода: явный вид или по умолчанию Z для битов,
    T для тритов смешанного профиля и chain для однородного q > 2"""
    if kind is not None:
        return ProductChannel.of(kind, alphabet.q, alphabet.length)
    if not alphabet.is_uniform:
        if any(q not in (2, 3) for q in alphabet.sizes):
            raise AlphabetError(f"для смешанного профиля нужны только биты и триты: {alphabet.sizes}")
        z, t = make_channel(ChannelKind.Z, 2), make_channel(ChannelKind.T, 3)
        return ProductChannel(tuple(z if q == 2 else t for q in alphabet.sizes))
    if alphabet.q == 2:
        return ProductChannel.of(ChannelKind.Z, 2, alphabet.length)
    return ProductChannel.of(ChannelKind.CHAIN, alphabet.q, alphabet.length)


def _check_compatible(alphabet: AlphabetSpec, ch: ProductChannel) -> None:
    if alphabet != ch.alphabet:
        raise AlphabetError(f"алфавит {alphabet.sizes} не совпадает с каналом {ch.alphabet.sizes}")


def ball_rows(symbols: Sequence[int], ch: ProductChannel, radius: int,
              counting=Counting.MAGNITUDE, per_coordinate: int = 1,
              cap: Optional[int] = None) -> Set[Tuple[int, ...]]:
    """Шар ошибок как множество кортежей символов"""
    cap = cap or Config.ball_cap()
    counting = Counting(counting)
    start = tuple(symbols)
    if radius < 0:
        raise CodeError(f"радиус должен быть >= 0, получено {radius}")
    if counting is Counting.MAGNITUDE:
        seen = {start}
        frontier = [start]
        for _ in range(radius):
            nxt = []
            for w in frontier:
                for i, graph in enumerate(ch.coordinates):
                    for b in graph.successors(w[i]):
                        moved = w[:i] + (b,) + w[i + 1:]
                        if moved not in seen:
                            seen.add(moved)
                            nxt.append(moved)
            if len(seen) > cap:
                raise EnumerationCapError("шар ошибок", len(seen), cap)
            if not nxt:
                break
            frontier = nxt
        return seen

    # число ошибочных координат <= radius, в каждой не более per_coordinate шагов
    used: Dict[Tuple[int, ...], int] = {start: 0}
    for i, graph in enumerate(ch.coordinates):
        targets = sorted(graph.reachable(start[i], per_coordinate) - {start[i]})
        if not targets:
            continue
        grown = dict(used)
        for w, k in used.items():
            if k >= radius:
                continue
            for b in targets:
                moved = w[:i] + (b,) + w[i + 1:]
                if grown.get(moved, radius + 1) > k + 1:
                    grown[moved] = k + 1
        used = grown
        if len(used) > cap:
            raise EnumerationCapError("шар ошибок", len(used), cap)
    return set(used)


def error_ball(x: Word, ch: ProductChannel, radius: int, counting=Counting.MAGNITUDE,
               per_coordinate: int = 1, cap: Optional[int] = None) -> Set[Word]:
    _check_compatible(x.alphabet, ch)
    rows = ball_rows(x.symbols, ch, radius, counting, per_coordinate, cap)
    return {Word(r, x.alphabet) for r in rows}


def corrects_t_errors(c: CodeBook, ch: ProductChannel, t: int, counting=Counting.MAGNITUDE,
                      per_coordinate: int = 1) -> bool:
    """Шары радиуса t вокруг разных кодовых слов попарно не пересекаются"""
    _check_compatible(c.alphabet, ch)
    owner: Dict[Tuple[int, ...], int] = {}
    for idx, row in enumerate(c.rows):
        for w in ball_rows(row, ch, t, counting, per_coordinate):
            if owner.setdefault(w, idx) != idx:
                logger.debug("шары %s и %s пересекаются в %s", c.rows[owner[w]], row, w)
                return False
    return True


class BallDecoder:
    """Таблица слово -> кодовые слова, в чьих шарах оно лежит"""

    def __init__(self, c: CodeBook, ch: ProductChannel, t: int, counting=Counting.MAGNITUDE,
                 per_coordinate: int = 1):
        _check_compatible(c.alphabet, ch)
        self.code = c
        self.table: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for idx, row in enumerate(c.rows):
            for w in ball_rows(row, ch, t, counting, per_coordinate):
                self.table[w] = self.table.get(w, ()) + (idx,)

    def decode(self, received: Word) -> DecodeResult:
        if received.alphabet != self.code.alphabet:
            raise AlphabetError("принятое слово над другим алфавитом")
        hits = self.table.get(received.symbols, ())
        candidates = tuple(Word(self.code.rows[i], self.code.alphabet) for i in hits)
        if len(candidates) == 1:
            return DecodeResult(DecodeStatus.DECODED, candidates[0], candidates)
        if not candidates:
            return DecodeResult(DecodeStatus.FAILURE)
        return DecodeResult(DecodeStatus.AMBIGUOUS, None, candidates)


def ball_decode(c: CodeBook, ch: ProductChannel, received: Word, t: int,
                counting=Counting.MAGNITUDE) -> DecodeResult:
    return BallDecoder(c, ch, t, counting).decode(received)


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    failures: int
    ambiguous: int
    undecodable: int
    seed: int

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "ambiguous": self.ambiguous,
            "undecodable": self.undecodable,
            "failure_rate": self.failure_rate,
            "seed": self.seed,
        }


def _inject(rng: np.random.Generator, row: Tuple[int, ...], ch: ProductChannel, p: float,
            forced_errors: Optional[int]) -> Tuple[int, ...]:
    word = list(row)
    if forced_errors is None:
        for i, graph in enumerate(ch.coordinates):
            for b in graph.successors(word[i]):
                if rng.random() < p:
                    word[i] = b
                    break
        return tuple(word)
    movable = [i for i, graph in enumerate(ch.coordinates) if graph.successors(word[i])]
    k = min(forced_errors, len(movable))
    if k:
        for i in sorted(rng.choice(movable, size=k, replace=False)):
            succ = ch.coordinates[i].successors(word[i])
            word[i] = succ[int(rng.integers(len(succ)))]
    return tuple(word)


def simulate_channel(c: CodeBook, ch: ProductChannel, p: float, trials: int, seed: int, t: int = 1,
                     forced_errors: Optional[int] = None) -> SimulationResult:
    """Монте-Карло: случайное слово, ошибки канала, декодирование"""
    _check_compatible(c.alphabet, ch)
    if not 0.0 <= p <= 1.0:
        raise CodeError(f"вероятность должна быть в [0, 1], получено {p}")
    if not len(c):
        raise CodeError("пустой код нельзя моделировать")
    rng = np.random.default_rng(seed)
    ball_decoder = None if ch.is_chain else BallDecoder(c, ch, t)
    failures = ambiguous = undecodable = 0
    for trial in range(trials):
        sent = c.rows[int(rng.integers(len(c)))]
        received = Word(_inject(rng, sent, ch, p, forced_errors), c.alphabet)
        if ball_decoder is None:
            result = decode_asymmetric(c, received, t)
        else:
            result = ball_decoder.decode(received)
        if result.status is DecodeStatus.AMBIGUOUS:
            ambiguous += 1
        elif result.status is DecodeStatus.FAILURE:
            undecodable += 1
        if not result.ok or result.codeword.symbols != sent:
            failures += 1
        if trial and trial % 10_000 == 0:
            logger.info("моделирование: %d/%d испытаний, %d ошибок декодирования", trial, trials, failures)
    return SimulationResult(trials, failures, ambiguous, undecodable, seed)