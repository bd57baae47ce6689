class CodeError(ValueError):
    """Базовая ошибка рабочего стенда"""


class AlphabetError(CodeError):
    """Неверный алфавит, символ вне диапазона или несовпадение длин"""


class PreconditionError(CodeError):
    """Вход конструкции не прошёл проверку оракулом"""


class EnumerationCapError(CodeError):
    def __init__(self, what, needed, cap):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: требуется перечислить {needed} слов, лимит {cap} (ASYMCODES_ENUM_CAP)")


class DecodingError(CodeError):
    """Декодер не нашёл кодовое слово"""


class CodeFileError(CodeError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"строка {line_number}: {message}"
        super().__init__(message)
