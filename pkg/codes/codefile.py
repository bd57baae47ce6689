"""Текстовый формат файлов кодов.

    asymcodes-code format=1 q=3 n=5 name=concat[5,3]_3
    % seed=0
    00000
    01102
    ...

Заголовок задаёт профиль алфавита (`q=3` или `q=2,3,3,3`) и длину, слово
asymcodes-code в нём можно опустить. Строки `% ключ=значение` несут
метаданные в JSON, строки `#` игнорируются.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import AlphabetError, CodeFileError
from .words import AlphabetSpec, CodeBook, format_symbols, split_symbols

MAGIC = "asymcodes-code"
FORMAT_VERSION = 1


def _parse_header(line: str, number: int):
    head, _, name = line.partition(" name=")
    tokens = head.split()
    if tokens and tokens[0] == MAGIC:
        tokens = tokens[1:]
    fields = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise CodeFileError(f"ожидается ключ=значение, получено {token!r}", number)
        fields[key] = value
    try:
        version = int(fields.get("format", FORMAT_VERSION))
        n = int(fields["n"])
        sizes = tuple(int(x) for x in fields["q"].split(","))
    except KeyError as exc:
        raise CodeFileError(f"в заголовке нет поля {exc.args[0]}", number)
    except ValueError:
        raise CodeFileError(f"нечисловое поле в заголовке {line!r}", number)
    if version != FORMAT_VERSION:
        raise CodeFileError(f"неподдерживаемая версия формата {version}", number)
    if len(sizes) == 1:
        sizes = sizes * n
    if len(sizes) != n:
        raise CodeFileError(f"профиль алфавита длины {len(sizes)}, а n={n}", number)
    try:
        alphabet = AlphabetSpec(sizes)
    except AlphabetError as exc:
        raise CodeFileError(str(exc), number)
    return alphabet, (name.strip() or None)


def parse_code_file(text: str) -> CodeBook:
    alphabet: Optional[AlphabetSpec] = None
    name = None
    metadata = {}
    rows = []
    seen = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            alphabet, name = _parse_header(line, number)
            continue
        if line.startswith("%"):
            key, sep, value = line[1:].strip().partition("=")
            if not sep:
                raise CodeFileError("метаданные должны иметь вид `% ключ=значение`", number)
            try:
                metadata[key.strip()] = json.loads(value)
            except json.JSONDecodeError:
                raise CodeFileError(f"значение метаданных {value!r} не является JSON", number)
            continue
        try:
            symbols = split_symbols(line)
            alphabet.validate(symbols)
        except (ValueError, AlphabetError) as exc:
            raise CodeFileError(f"неверное слово {line!r}: {exc}", number)
        if symbols in seen:
            raise CodeFileError(f"слово {line!r} повторяет строку {seen[symbols]}", number)
        seen[symbols] = number
        rows.append(symbols)
    if alphabet is None:
        raise CodeFileError("нет заголовка")
    return CodeBook(alphabet, rows, name=name, metadata=metadata)


def write_code_file(c: CodeBook) -> str:
    header = f"{MAGIC} format={FORMAT_VERSION} q={c.alphabet.profile_text()} n={c.length}"
    if c.name:
        header += f" name={c.name}"
    lines = [header]
    lines += [f"% {key}={json.dumps(value, ensure_ascii=False)}" for key, value in c.metadata.items()]
    lines += [format_symbols(row, c.alphabet.sizes) for row in c.rows]
    return "\n".join(lines) + "\n"


def load_code(path: str) -> CodeBook:
    with open(path, encoding="utf-8") as f:
        return parse_code_file(f.read())


def save_code(path: str, c: CodeBook) -> str:
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_code_file(c))
    return path
