"""Граница сферической упаковки, совершенные коды и сводные таблицы размеров."""

from __future__ import annotations

import itertools
import logging
import math
from typing import List, Optional

import numpy as np

from .cyclic import SearchConfig, builtin_table_generators, search_cyclic
from .errors import CodeError, EnumerationCapError, PreconditionError
from .generator_tables import (
    KNOWN_BOUNDS,
    KNOWN_BOUNDS_SOURCE,
    PARTITION_SIZES,
    PARTITION_SOURCE,
    PUBLISHED_CR_SIZES,
    PUBLISHED_CYCLIC_SIZES,
    PUBLISHED_RATE_RATIOS,
    PUBLISHED_TERNARY_SIZES,
    SIZE_TABLE_LENGTHS,
)
from .groups import AbelianGroupDescriptor, best_cr_group, cr_code
from .linearq import best_symmetric_dimension, concat_code, lee_parity_check
from .ternary import binary_image_size, prefix_parts
from .words import CodeBook, is_lm_code

logger = logging.getLogger(__name__)


def sphere_bound(q: int, n: int, t_tilde: int, ell: int) -> int:
    """floor(q^n / sum_{i<=t} C(n, i) * ell^i), точная целочисленная арифметика"""
    if q < 2 or n < 1 or ell < 1 or t_tilde < 0:
        raise CodeError(f"недопустимые параметры границы: q={q}, n={n}, t={t_tilde}, ℓ={ell}")
    volume = sum(math.comb(n, i) * ell ** i for i in range(t_tilde + 1))
    return q ** n // volume


def is_perfect(c: CodeBook, t_tilde: int, ell: int) -> bool:
    if not is_lm_code(c, t_tilde, ell, wrap=True):
        raise PreconditionError(f"код не исправляет {t_tilde} ошибок амплитуды до {ell} с переносом")
    bound = sphere_bound(c.alphabet.q, c.length, t_tilde, ell)
    if len(c) > bound:
        raise CodeError(f"размер {len(c)} превышает границу упаковки {bound}")
    return len(c) == bound


def best_d3_dimension(q: int, n: int) -> int:
    if q not in (2, 3):
        raise CodeError(f"поддерживаются q = 2 и q = 3, получено {q}")
    if n < 3:
        raise CodeError(f"длина должна быть >= 3, получено {n}")
    return best_symmetric_dimension(q, n)


def _canonical_ternary_check(m: int) -> np.ndarray:
    """Первые m столбцов: сначала единичные, затем остальные нормированные лексикографически"""
    r = 2
    while (3 ** r - 1) // 2 < m:
        r += 1
    identity = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    rest = [v for v in itertools.product(range(3), repeat=r)
            if next((x for x in v if x), 0) == 1 and v not in identity]
    return np.array((identity + rest)[:m], dtype=np.int64).T


def ternary_image_size(m: int) -> int:
    """W(2, 1) ядра канонической троичной проверочной матрицы.

    По тождеству Мак-Вильямс W_C(2, 1) = 3^-r * sum_{d in C^perp} 4^(m - wt d),
    поэтому перечисляется только дуальный код.
    """
    H = _canonical_ternary_check(m)
    r = H.shape[0]
    messages = np.array(list(itertools.product(range(3), repeat=r)), dtype=np.int64)
    weights = ((messages @ H) % 3 != 0).sum(axis=1)
    total = sum(4 ** (m - int(w)) for w in weights)
    if total % 3 ** r:
        raise CodeError("сумма по дуальному коду не делится на его размер")
    return total // 3 ** r


def rate_ratio_details(m: int) -> dict:
    if m < 3:
        raise CodeError(f"m должно быть >= 3, получено {m}")
    image = ternary_image_size(m)
    binary_dimension = best_d3_dimension(2, 2 * m)
    return {
        "n": 2 * m,
        "ternary_image": image,
        "binary_dimension": binary_dimension,
        "s": math.log2(image) / binary_dimension,
    }


def rate_ratio(m: int) -> float:
    return rate_ratio_details(m)["s"]


def table1_report(max_m: int = 44) -> List[dict]:
    rows = []
    for m in range(3, max_m + 1):
        details = rate_ratio_details(m)
        published = PUBLISHED_RATE_RATIOS.get(2 * m)
        computed = round(details["s"], 3)
        details.update({
            "s": computed,
            "published_s": published,
            "deviation": published is not None and abs(computed - published) > 5e-4,
        })
        rows.append(details)
    return rows


def _cyclic_size(n: int) -> int:
    m = n // 2
    if n % 2:
        c0, c1 = builtin_table_generators(m, extended=True)
        return binary_image_size(prefix_parts(c0, c1))
    if m == 3:
        return binary_image_size(search_cyclic(3, SearchConfig(strategy="exact-clique")))
    return binary_image_size(builtin_table_generators(m))


def table2_report() -> dict:
    rows = []
    for n in SIZE_TABLE_LENGTHS:
        G = best_cr_group(n)
        cr = len(cr_code(G, G.identity))
        cyclic = _cyclic_size(n)
        mismatch = cr != PUBLISHED_CR_SIZES[n] or cyclic != PUBLISHED_CYCLIC_SIZES[n]
        if mismatch:
            logger.warning("n=%d: вычислено CR=%d, циклический=%d, опубликовано %d и %d",
                           n, cr, cyclic, PUBLISHED_CR_SIZES[n], PUBLISHED_CYCLIC_SIZES[n])
        rows.append({
            "n": n,
            "cr_group": G.describe(),
            "cr": cr,
            "cyclic_ternary": cyclic,
            "published_cr": PUBLISHED_CR_SIZES[n],
            "published_cyclic_ternary": PUBLISHED_CYCLIC_SIZES[n],
            "published_ternary": PUBLISHED_TERNARY_SIZES[n],
            "partition": PARTITION_SIZES[n],
            "known_bounds": KNOWN_BOUNDS[n],
            "mismatch": mismatch,
        })
    return {
        "rows": rows,
        "sources": {"partition": PARTITION_SOURCE, "known_bounds": KNOWN_BOUNDS_SOURCE},
    }


def vt_vs_linear(q: int, r: int) -> dict:
    """Длина n = q^r - 1: линейный конкатенированный код против CR над Z_{n+1}"""
    n = q ** r - 1
    linear = concat_code(lee_parity_check(q, r, full=True))
    cr_size: Optional[int] = None
    try:
        cr_size = len(cr_code(AbelianGroupDescriptor.cyclic(n + 1), (0,), q))
    except EnumerationCapError as exc:
        logger.info("код CR длины %d не перечислен: %s", n, exc)
    except CodeError as exc:
        logger.info("код CR длины %d не определён: %s", n, exc)
    bound = sphere_bound(q, n, 1, 1)
    linear_size = q ** linear.dimension
    return {
        "q": q,
        "r": r,
        "n": n,
        "linear": linear.describe(),
        "linear_size": linear_size,
        "cr_size": cr_size,
        "sphere_bound": bound,
        "linear_perfect": linear_size == bound,
    }
