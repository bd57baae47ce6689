#config
import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    # Лимиты перебора
    DEFAULT_ENUM_CAP = 1_000_000
    DEFAULT_BALL_CAP = 10_000_000

    # Отчёты
    REPORTS_DIR = os.getenv("ASYMCODES_REPORTS_DIR", "reports/")

    # Логирование
    LOG_LEVEL = os.getenv("ASYMCODES_LOG_LEVEL", "INFO")

    TOOL_NAME = "asymcodes"
    VERSION = "1.0.0"

    @staticmethod
    def _int_from_env(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return default
        try:
            value = int(raw.replace("_", ""))
        except ValueError:
            raise ValueError(f"{name} должен быть целым числом, получено {raw!r}")
        if value < 1:
            raise ValueError(f"{name} должен быть положительным, получено {value}")
        return value

    @staticmethod
    def enumeration_cap() -> int:
        """Максимальное число слов, которое разрешено перечислить"""
        return Config._int_from_env("ASYMCODES_ENUM_CAP", Config.DEFAULT_ENUM_CAP)

    @staticmethod
    def ball_cap() -> int:
        """Максимальный размер одного шара ошибок"""
        return Config._int_from_env("ASYMCODES_BALL_CAP", Config.DEFAULT_BALL_CAP)
