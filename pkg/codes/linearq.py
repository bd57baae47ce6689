"""Линейные коды над Z_q и конкатенация с внутренним кодом двойного повтора.

Слово длины 2m записывается парами (a_j, a_j + c_j), где c - слово внешнего
кода, исправляющего одну ошибку ±1 (канал R_q). Асимметричная ошибка в
первой координате пары даёт +1 во внешнем символе, во второй даёт -1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import Config

from .errors import CodeError, CodeFileError, DecodingError, EnumerationCapError, PreconditionError
from .words import AlphabetSpec, CodeBook, Word

logger = logging.getLogger(__name__)

Column = Tuple[int, ...]


class MatrixRole(str, Enum):
    GENERATOR = "generator"
    PARITY_CHECK = "parity"


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise CodeError(f"поддерживаются только простые q (арифметика Z_q), получено {q}")


@dataclass(frozen=True)
class MatrixModZq:
    q: int
    n: int
    entries: Tuple[Tuple[int, ...], ...]
    role: MatrixRole = MatrixRole.GENERATOR

    def __post_init__(self):
        if self.q < 2:
            raise CodeError(f"модуль должен быть >= 2, получено {self.q}")
        role = MatrixRole(self.role)
        entries = tuple(tuple(int(x) % self.q for x in row) for row in self.entries)
        if any(len(row) != self.n for row in entries):
            raise CodeError(f"все строки матрицы должны иметь длину {self.n}")
        object.__setattr__(self, "role", role)
        object.__setattr__(self, "entries", entries)
        if role is MatrixRole.PARITY_CHECK:
            zero = [j for j, col in enumerate(self.columns()) if not any(col)]
            if zero:
                raise CodeError(f"нулевой столбец {zero[0] + 1} в проверочной матрице")

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]], role=MatrixRole.GENERATOR,
                  n: Optional[int] = None) -> "MatrixModZq":
        rows = [list(r) for r in rows]
        if n is None:
            if not rows:
                raise CodeError("для матрицы без строк нужно явно указать число столбцов")
            n = len(rows[0])
        return cls(q, n, tuple(tuple(r) for r in rows), role)

    @classmethod
    def from_columns(cls, q: int, columns: Sequence[Column], role=MatrixRole.PARITY_CHECK) -> "MatrixModZq":
        if not columns:
            raise CodeError("нужен хотя бы один столбец")
        return cls(q, len(columns), tuple(zip(*columns)), role)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def columns(self) -> List[Column]:
        return [tuple(row[j] for row in self.entries) for j in range(self.n)]

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.n)


def _normalized_columns(q: int, r: int, leading: Sequence[int] = (1,)) -> List[Column]:
    """Ненулевые векторы Z_q^r, первый ненулевой элемент из leading, лексикографически"""
    columns = []
    for v in itertools.product(range(q), repeat=r):
        first = next((x for x in v if x), 0)
        if first in leading:
            columns.append(v)
    return columns


def hamming_parity_check(q: int, r: int) -> MatrixModZq:
    _require_prime(q)
    if r < 2:
        raise CodeError(f"число проверок r должно быть >= 2, получено {r}")
    return MatrixModZq.from_columns(q, _normalized_columns(q, r))


def lee_parity_check(q: int, r: int, full: bool = True) -> MatrixModZq:
    """Столбцы с первым ненулевым элементом из {1, ..., (q-1)/2}.

    full=False оставляет только столбцы с ненулевой первой строкой.
    """
    if q % 2 == 0:
        raise CodeError(f"для метрики Ли нужно нечётное q, получено {q}")
    _require_prime(q)
    if r < 1:
        raise CodeError(f"r должно быть >= 1, получено {r}")
    columns = _normalized_columns(q, r, range(1, (q - 1) // 2 + 1))
    if not full:
        columns = [c for c in columns if c[0]]
    return MatrixModZq.from_columns(q, columns)


def columns_single_rq_correcting(columns: Sequence[Column], q: int) -> bool:
    """Нет нулевых столбцов, все H_j и -H_j попарно различны"""
    seen = set()
    for col in columns:
        col = tuple(x % q for x in col)
        neg = tuple((-x) % q for x in col)
        if not any(col) or col == neg or col in seen or neg in seen:
            return False
        seen.add(col)
        seen.add(neg)
    return True


def is_single_rq_correcting(H: MatrixModZq) -> bool:
    if H.role is not MatrixRole.PARITY_CHECK:
        raise CodeError("ожидается проверочная матрица")
    return columns_single_rq_correcting(H.columns(), H.q)


def _rref(M: np.ndarray, q: int) -> Tuple[np.ndarray, List[int]]:
    """Приведённый ступенчатый вид над полем Z_q"""
    R = M.copy() % q
    pivots = []
    row = 0
    for col in range(R.shape[1]):
        if row == R.shape[0]:
            break
        nonzero = np.flatnonzero(R[row:, col])
        if not len(nonzero):
            continue
        pivot = row + int(nonzero[0])
        R[[row, pivot]] = R[[pivot, row]]
        R[row] = (R[row] * pow(int(R[row, col]), -1, q)) % q
        for other in range(R.shape[0]):
            if other != row and R[other, col]:
                R[other] = (R[other] - R[other, col] * R[row]) % q
        pivots.append(col)
        row += 1
    return R, pivots


def rank_mod_q(M: MatrixModZq) -> int:
    _require_prime(M.q)
    if not M.rows:
        return 0
    return len(_rref(M.array(), M.q)[1])


def generator_from_parity_check(H: MatrixModZq) -> MatrixModZq:
    """Базис ядра H; применённая к порождающей матрице даёт проверочную"""
    _require_prime(H.q)
    q, n = H.q, H.n
    R, pivots = _rref(H.array(), q) if H.rows else (np.zeros((0, n), dtype=np.int64), [])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = int(-R[i, f]) % q
        basis.append(v)
    role = MatrixRole.GENERATOR if H.role is MatrixRole.PARITY_CHECK else MatrixRole.PARITY_CHECK
    if role is MatrixRole.PARITY_CHECK and not basis:
        raise CodeError("код совпадает со всем пространством, проверочной матрицы нет")
    return MatrixModZq.from_rows(q, basis, role, n=n)


def syndrome(H: MatrixModZq, word: Sequence[int]) -> Tuple[int, ...]:
    if len(word) != H.n:
        raise CodeError(f"длина слова {len(word)} не совпадает с числом столбцов {H.n}")
    return tuple(int(s) for s in (H.array() @ np.array(word, dtype=np.int64)) % H.q)


def codewords_of(M: MatrixModZq) -> CodeBook:
    G = M if M.role is MatrixRole.GENERATOR else generator_from_parity_check(M)
    q, k, n = G.q, G.rows, G.n
    total = q ** k
    cap = Config.enumeration_cap()
    if total > cap:
        raise EnumerationCapError(f"линейный код [{n},{k}]_{q}", total, cap)
    messages = np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64).reshape(total, k)
    words = (messages @ G.array()) % q
    return CodeBook(AlphabetSpec.uniform(q, n), (tuple(r) for r in words.tolist()))


def min_hamming_distance(M: MatrixModZq) -> int:
    """Минимальный вес ненулевого кодового слова"""
    weights = (codewords_of(M).array() != 0).sum(axis=1)
    weights = weights[weights > 0]
    if not len(weights):
        raise CodeError("в коде нет ненулевых слов")
    return int(weights.min())


@dataclass
class ConcatResult:
    generator: MatrixModZq
    outer_parity: MatrixModZq
    shortened: bool
    code: Optional[CodeBook] = None

    @property
    def length(self) -> int:
        return self.generator.n

    @property
    def dimension(self) -> int:
        return self.generator.rows

    def describe(self) -> str:
        return f"[{self.length},{self.dimension}]_{self.generator.q}"


def _full_rank_rows(G: MatrixModZq) -> MatrixModZq:
    R, pivots = _rref(G.array(), G.q)
    if len(pivots) == G.rows:
        return G
    logger.info("порождающая матрица внешнего кода вырождена: ранг %d из %d строк", len(pivots), G.rows)
    return MatrixModZq.from_rows(G.q, R[:len(pivots)].tolist(), MatrixRole.GENERATOR, n=G.n)


def concat_code(outer: MatrixModZq, shorten_to_odd: bool = False, check: bool = True) -> ConcatResult:
    """[2m, m+k]_q 1-код из внешнего [m, k]_q кода; при укорочении [2m-1, m+k-1]_q.

    outer может быть порождающей или проверочной матрицей внешнего кода.
    """
    q, m = outer.q, outer.n
    _require_prime(q)
    if q < 3:
        raise CodeError("для q=2 ошибки ±1 неразличимы, нужно q >= 3")
    if outer.role is MatrixRole.GENERATOR:
        G = _full_rank_rows(outer) if outer.rows else outer
        if G.rows == m:
            raise PreconditionError("внешний код совпадает со всем Z_q^m и не исправляет ошибок")
        try:
            H = generator_from_parity_check(G)
        except CodeError:
            # нулевой столбец: во внешнем коде есть слово веса 1
            raise PreconditionError("внешний код не исправляет одну ошибку канала R_q")
    else:
        H, G = outer, generator_from_parity_check(outer)
    if check and not is_single_rq_correcting(H):
        raise PreconditionError("внешний код не исправляет одну ошибку канала R_q")

    rows = []
    for j in range(m):
        row = [0] * (2 * m)
        row[2 * j] = row[2 * j + 1] = 1
        rows.append(row)
    for g in G.entries:
        row = [0] * (2 * m)
        for j, x in enumerate(g):
            row[2 * j + 1] = x
        rows.append(row)
    if shorten_to_odd:
        # a_1 = 0, первая координата всегда нулевая и удаляется
        rows = [r[1:] for idx, r in enumerate(rows) if idx != 0]
    generator = MatrixModZq.from_rows(q, rows, MatrixRole.GENERATOR, n=2 * m - int(shorten_to_odd))
    result = ConcatResult(generator, H, shorten_to_odd)
    if q ** generator.rows <= Config.enumeration_cap():
        code = codewords_of(generator)
        code.name = f"concat{result.describe()}"
        result.code = code
    logger.debug("конкатенация: внешний [%d,%d]_%d -> %s", m, G.rows, q, result.describe())
    return result


def double_code(c: CodeBook) -> CodeBook:
    """Каждый символ повторяется дважды на месте: 0 -> 00, 1 -> 11, ..."""
    alphabet = AlphabetSpec(tuple(s for s in c.alphabet.sizes for _ in range(2)))
    rows = (tuple(x for x in row for _ in range(2)) for row in c.rows)
    return CodeBook(alphabet, rows, name=f"double({c.name})" if c.name else None)


def decode_concat(H_outer: MatrixModZq, received: Word) -> Word:
    """Синдромное декодирование одной асимметричной ошибки; длина 2m или 2m-1"""
    if not is_single_rq_correcting(H_outer):
        raise PreconditionError("внешняя проверочная матрица не исправляет ошибку R_q")
    q, m = H_outer.q, H_outer.n
    if not received.alphabet.is_uniform or received.alphabet.q != q:
        raise CodeError(f"ожидается слово над Z_{q}")
    y = list(received.symbols)
    shortened = len(y) == 2 * m - 1
    if not shortened and len(y) != 2 * m:
        raise CodeError(f"длина слова {len(y)}, а ожидается {2 * m} или {2 * m - 1}")
    full = [0] + y if shortened else list(y)
    outer = [(full[2 * j + 1] - full[2 * j]) % q for j in range(m)]
    s = syndrome(H_outer, outer)
    if any(s):
        columns = H_outer.columns()
        neg = tuple((-x) % q for x in s)
        if s in columns:
            pos = 2 * columns.index(s)
        elif neg in columns:
            pos = 2 * columns.index(neg) + 1
        else:
            raise DecodingError(f"синдром {s} не соответствует одиночной ошибке")
        if shortened and pos == 0:
            raise DecodingError("ошибка в удалённой координате невозможна")
        if full[pos] + 1 >= q:
            raise DecodingError(f"символ {full[pos]} в позиции {pos + 1 - shortened} не мог уменьшиться")
        full[pos] += 1
    return Word(full[1:] if shortened else full, received.alphabet)


def _redundancy_for(q: int, m: int, per_column: int = 1) -> int:
    """Наименьшее r, при котором есть m допустимых столбцов высоты r"""
    r = 1
    while (q ** r - 1) // (q - 1) * per_column < m:
        r += 1
    return r


def linear_one_code(q: int, n: int) -> ConcatResult:
    """Линейный 1-код длины n: укороченный внешний код со столбцами Ли и конкатенация"""
    _require_prime(q)
    if q < 3:
        raise CodeError(f"нужно q >= 3, получено {q}")
    if n < 2:
        raise CodeError(f"длина должна быть >= 2, получено {n}")
    m = (n + 1) // 2
    half = (q - 1) // 2
    r = _redundancy_for(q, m, half)
    columns = _normalized_columns(q, r, range(1, half + 1))[:m]
    return concat_code(MatrixModZq.from_columns(q, columns), shorten_to_odd=bool(n % 2))


def best_symmetric_dimension(q: int, n: int) -> int:
    """Наибольшая размерность линейного кода длины n с d = 3 по границе Хэмминга"""
    return n - _redundancy_for(q, n)


def nonbinary_comparison(q: int, lengths: Sequence[int]) -> List[dict]:
    rows = []
    for n in lengths:
        rows.append({
            "n": n,
            "k_asym": linear_one_code(q, n).dimension,
            "k_sym": best_symmetric_dimension(q, n),
        })
    return rows


def write_matrix(M: MatrixModZq) -> str:
    lines = [f"{M.q} {M.rows} {M.n} {M.role.value}"]
    lines += [" ".join(str(x) for x in row) for row in M.entries]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> MatrixModZq:
    """Заголовок `q r c role`, затем r строк по c вычетов"""
    lines = [(i, line.split("#", 1)[0].strip()) for i, line in enumerate(text.splitlines(), 1)]
    lines = [(i, line) for i, line in lines if line]
    if not lines:
        raise CodeFileError("пустой файл матрицы")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 4:
        raise CodeFileError("заголовок должен иметь вид `q r c role`", number)
    try:
        q, r, c = (int(p) for p in parts[:3])
        role = MatrixRole(parts[3])
    except ValueError:
        raise CodeFileError(f"не удалось разобрать заголовок {header!r}", number)
    body = lines[1:]
    if len(body) != r:
        raise CodeFileError(f"ожидается {r} строк матрицы, найдено {len(body)}", number)
    rows = []
    for number, line in body:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise CodeFileError(f"нечисловой элемент в строке {line!r}", number)
        if len(row) != c:
            raise CodeFileError(f"ожидается {c} элементов, найдено {len(row)}", number)
        if any(not 0 <= x < q for x in row):
            raise CodeFileError(f"элемент вне диапазона 0..{q - 1}", number)
        rows.append(row)
    try:
        return MatrixModZq.from_rows(q, rows, role, n=c)
    except CodeError as exc:
        raise CodeFileError(str(exc), number)
