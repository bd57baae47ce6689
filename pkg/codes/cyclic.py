"""Циклические троичные коды для канала T: орбиты сдвига и поиск клики.

Вершины графа - орбиты, которые сами по себе исправляют одну ошибку T,
вес вершины - вклад орбиты в размер двоичного образа, рёбра соединяют
орбиты, чьи шары не пересекаются. Лучший код - клика максимального веса.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from config import Config

from .channels import ProductChannel, ball_rows, corrects_t_errors
from .errors import CodeError, EnumerationCapError
from .generator_tables import CYCLIC_GENERATORS, EXTENDED_GENERATORS
from .ternary import prefix_parts
from .words import AlphabetSpec, CodeBook

logger = logging.getLogger(__name__)

MAX_ORBIT_LENGTH = 13
MAX_EXACT_PLAIN = 8
MAX_EXACT_EXTENDED = 7


def rotations(word: Tuple[int, ...]) -> Set[Tuple[int, ...]]:
    return {word[i:] + word[:i] for i in range(len(word))}


@dataclass(frozen=True)
class Orbit:
    representative: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, word: Sequence[int]) -> "Orbit":
        members = tuple(sorted(rotations(tuple(int(x) for x in word))))
        return cls(members[0], members)

    @property
    def length(self) -> int:
        return len(self.representative)

    @property
    def weight_score(self) -> int:
        """Сумма 2^(m - wgt) по членам орбиты"""
        zeros = sum(1 for x in self.representative if x == 0)
        return len(self.members) * 2 ** zeros

    def __str__(self):
        return "".join(str(x) for x in self.representative)


def enumerate_orbits(m: int) -> List[Orbit]:
    if not 1 <= m <= MAX_ORBIT_LENGTH:
        raise CodeError(f"длина орбит должна быть от 1 до {MAX_ORBIT_LENGTH}, получено {m}")
    cap = Config.enumeration_cap()
    if 3 ** m > cap:
        raise EnumerationCapError(f"троичные слова длины {m}", 3 ** m, cap)
    seen = set()
    orbits = []
    for word in itertools.product(range(3), repeat=m):
        if word in seen:
            continue
        orbit = Orbit.of(word)
        seen.update(orbit.members)
        orbits.append(orbit)
    return orbits


def orbits_compatible(o1: Orbit, o2: Orbit, m: int) -> bool:
    if o1.length != m or o2.length != m:
        raise CodeError(f"орбиты должны иметь длину {m}")
    code = CodeBook(AlphabetSpec.uniform(3, m), o1.members + o2.members)
    return corrects_t_errors(code, ProductChannel.z_times_t(0, m), 1)


def orbit_closure(words: Sequence[str]) -> CodeBook:
    if not words:
        raise CodeError("нужна хотя бы одна образующая")
    m = len(words[0])
    rows = set()
    for text in words:
        rows.update(Orbit.of(int(ch) for ch in text).members)
    return CodeBook(AlphabetSpec.uniform(3, m), rows)


def builtin_table_generators(m: int, extended: bool = False):
    """Замыкание опубликованных образующих: код или пара частей (C0, C1)"""
    if extended:
        if m not in EXTENDED_GENERATORS:
            raise CodeError(f"расширенные образующие есть для m в {sorted(EXTENDED_GENERATORS)}, получено {m}")
        zero, one = EXTENDED_GENERATORS[m]
        c0, c1 = orbit_closure(zero.split()), orbit_closure(one.split())
        c0.name, c1.name = f"ext-table-{m}-0", f"ext-table-{m}-1"
        return c0, c1
    if m not in CYCLIC_GENERATORS:
        raise CodeError(f"образующие есть для m в {sorted(CYCLIC_GENERATORS)}, получено {m}")
    code = orbit_closure(CYCLIC_GENERATORS[m].split())
    code.name = f"cyclic-table-{m}"
    return code


class SearchStrategy(str, Enum):
    EXACT = "exact-clique"
    GREEDY = "greedy"
    RANDOMIZED = "randomized-restart"


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    time_budget: float = 60.0
    strategy: SearchStrategy = SearchStrategy.EXACT
    worker_count: int = 1
    node_limit: Optional[int] = None
    restarts: int = 64

    def __post_init__(self):
        object.__setattr__(self, "strategy", SearchStrategy(self.strategy))
        if self.time_budget <= 0:
            raise CodeError(f"бюджет времени должен быть > 0, получено {self.time_budget}")
        if self.worker_count < 1:
            raise CodeError(f"число процессов должно быть >= 1, получено {self.worker_count}")
        if self.node_limit is not None and self.node_limit < 1:
            raise CodeError(f"лимит узлов должен быть >= 1, получено {self.node_limit}")
        if self.restarts < 1:
            raise CodeError(f"число перезапусков должно быть >= 1, получено {self.restarts}")


def _orbit_conflicts(orbits: Sequence[Orbit], m: int):
    """Орбиты с пересекающимися шарами внутри себя и пары конфликтующих орбит"""
    channel = ProductChannel.z_times_t(0, m)
    holders: Dict[Tuple[int, ...], List[int]] = {}
    owner: Dict[Tuple[int, ...], int] = {}
    balls: Dict[Tuple[int, ...], Set[Tuple[int, ...]]] = {}
    for idx, orbit in enumerate(orbits):
        for member in orbit.members:
            owner[member] = idx
            balls[member] = ball_rows(member, channel, 1)
            for z in balls[member]:
                holders.setdefault(z, []).append(idx)
    broken, conflicts = set(), set()
    for hs in holders.values():
        for a, b in itertools.combinations(hs, 2):
            if a == b:
                broken.add(a)
            else:
                conflicts.add((min(a, b), max(a, b)))
    return broken, conflicts, owner, balls


def compatibility_graph(m: int, extended: bool = False) -> nx.Graph:
    """Вершины - орбиты (для расширенного поиска пары (часть, орбита))"""
    orbits = enumerate_orbits(m)
    broken, conflicts, owner, balls = _orbit_conflicts(orbits, m)
    usable = [i for i in range(len(orbits)) if i not in broken]
    G = nx.Graph()
    parts = (0, 1) if extended else (0,)
    for part in parts:
        for i in usable:
            G.add_node((part, i), weight=orbits[i].weight_score, orbit=orbits[i])
    for part in parts:
        for i, j in itertools.combinations(usable, 2):
            if (i, j) not in conflicts:
                G.add_edge((part, i), (part, j))
    if extended:
        # 0x и 1y конфликтуют, если y лежит в шаре x
        cross = {(i, owner[z]) for i in usable for x in orbits[i].members for z in balls[x]}
        for i in usable:
            for j in usable:
                if (i, j) not in cross:
                    G.add_edge((0, i), (1, j))
    logger.debug("граф совместимости m=%d: %d вершин, %d рёбер", m, G.number_of_nodes(), G.number_of_edges())
    return G


class _BudgetExhausted(Exception):
    pass


class _CliqueSearch:
    """Ветви и границы на битовых масках, граница - жадная раскраска"""

    def __init__(self, weights: Sequence[int], adj: Sequence[int], floor: int,
                 time_budget: float, node_limit: Optional[int]):
        self.weights = weights
        self.adj = adj
        self.best_score = floor
        self.best_mask = 0
        self.deadline = time.monotonic() + time_budget
        self.node_limit = node_limit
        self.nodes = 0

    def _color_bound(self, P: int) -> int:
        bound = 0
        uncolored = P
        while uncolored:
            heaviest = 0
            Q = uncolored
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                heaviest = max(heaviest, self.weights[v])
                uncolored &= ~low
                Q &= ~low & ~self.adj[v]
            bound += heaviest
        return bound

    def _expand(self, score: int, chosen: int, P: int) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetExhausted
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        if score > self.best_score:
            self.best_score, self.best_mask = score, chosen
        if not P or score + self._color_bound(P) <= self.best_score:
            return
        while P:
            low = P & -P
            v = low.bit_length() - 1
            self._expand(score + self.weights[v], chosen | low, P & self.adj[v])
            P &= ~low
            if not P or score + self._color_bound(P) <= self.best_score:
                return

    def run(self, branches: Sequence[int]) -> bool:
        try:
            for i in branches:
                later = self.adj[i] & ~((1 << (i + 1)) - 1)
                self._expand(self.weights[i], 1 << i, later)
        except _BudgetExhausted:
            return False
        return True


def _explore_branches(task):
    weights, adj, branches, floor, time_budget, node_limit = task
    search = _CliqueSearch(weights, adj, floor, time_budget, node_limit)
    complete = search.run(branches)
    return search.best_score, search.best_mask, complete, search.nodes


def _mask_vertices(mask: int) -> List[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _greedy(order: Sequence[int], weights: Sequence[int], adj: Sequence[int]) -> Tuple[int, int]:
    chosen, allowed, score = 0, -1, 0
    for v in order:
        if allowed >> v & 1:
            chosen |= 1 << v
            allowed &= adj[v]
            score += weights[v]
    return score, chosen


def _solve_clique(G: nx.Graph, cfg: SearchConfig, exact_limit: int, m: int):
    """Возвращает (вершины клики, счёт, доказана ли оптимальность)"""
    nodes = sorted(G.nodes, key=lambda v: (-G.nodes[v]["weight"], v[0], G.nodes[v]["orbit"].representative))
    index = {v: k for k, v in enumerate(nodes)}
    weights = [G.nodes[v]["weight"] for v in nodes]
    adj = [sum(1 << index[u] for u in G.adj[v]) for v in nodes]

    def key(mask):
        return tuple(sorted((nodes[v][0], nodes[v][1]) for v in _mask_vertices(mask)))

    score, mask = _greedy(range(len(nodes)), weights, adj)
    proven = False
    if cfg.strategy is SearchStrategy.RANDOMIZED:
        rng = np.random.default_rng(cfg.seed)
        deadline = time.monotonic() + cfg.time_budget
        for restart in range(cfg.restarts):
            if time.monotonic() > deadline:
                logger.info("поиск: бюджет времени исчерпан после %d перезапусков", restart)
                break
            noise = rng.random(len(nodes))
            order = sorted(range(len(nodes)), key=lambda v: -weights[v] * (0.5 + noise[v]))
            cand = _greedy(order, weights, adj)
            if cand[0] > score or (cand[0] == score and key(cand[1]) < key(mask)):
                score, mask = cand
    elif cfg.strategy is SearchStrategy.EXACT:
        if m > exact_limit:
            raise CodeError(f"точный поиск поддерживается при m <= {exact_limit}, получено {m}")
        branches = list(range(len(nodes)))
        tasks = [(weights, adj, branches[k::cfg.worker_count], score, cfg.time_budget, cfg.node_limit)
                 for k in range(cfg.worker_count)]
        if cfg.worker_count == 1:
            results = [_explore_branches(tasks[0])]
        else:
            with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
                results = list(pool.map(_explore_branches, tasks))
        proven = all(r[2] for r in results)
        candidates = [(score, mask)] + [(r[0], r[1]) for r in results if r[1]]
        score, mask = min(candidates, key=lambda c: (-c[0], key(c[1])))
        logger.info("поиск m=%d: %d узлов, оптимальность %s",
                    m, sum(r[3] for r in results), "доказана" if proven else "не доказана")
    return [nodes[v] for v in _mask_vertices(mask)], score, proven


def _metadata(cfg: SearchConfig, score: int, proven: bool, orbit_count: int) -> dict:
    return {
        "strategy": cfg.strategy.value,
        "seed": cfg.seed,
        "workers": cfg.worker_count,
        "score": score,
        "orbits": orbit_count,
        "proven_optimal": proven,
    }


def search_cyclic(m: int, cfg: Optional[SearchConfig] = None) -> CodeBook:
    cfg = cfg or SearchConfig()
    G = compatibility_graph(m)
    chosen, score, proven = _solve_clique(G, cfg, MAX_EXACT_PLAIN, m)
    rows = [w for v in chosen for w in G.nodes[v]["orbit"].members]
    code = CodeBook(AlphabetSpec.uniform(3, m), rows, name=f"cyclic-search-{m}",
                    metadata=_metadata(cfg, score, proven, len(chosen)))
    if not corrects_t_errors(code, ProductChannel.z_times_t(0, m), 1):
        raise CodeError("найденный код не прошёл проверку оракулом")
    return code


def search_extended(m: int, cfg: Optional[SearchConfig] = None) -> Tuple[CodeBook, CodeBook]:
    cfg = cfg or SearchConfig()
    G = compatibility_graph(m, extended=True)
    chosen, score, proven = _solve_clique(G, cfg, MAX_EXACT_EXTENDED, m)
    alphabet = AlphabetSpec.uniform(3, m)
    metadata = _metadata(cfg, score, proven, len(chosen))
    parts = []
    for part in (0, 1):
        rows = [w for v in chosen if v[0] == part for w in G.nodes[v]["orbit"].members]
        parts.append(CodeBook(alphabet, rows, name=f"ext-search-{m}-{part}", metadata=metadata))
    if not corrects_t_errors(prefix_parts(*parts), ProductChannel.z_times_t(1, m), 1):
        raise CodeError("найденная пара частей не прошла проверку оракулом")
    return parts[0], parts[1]
