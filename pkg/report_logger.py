import json
import logging
import os
from typing import Any, Dict, Optional

from config import Config

logger = logging.getLogger(__name__)


class ReportLogger:
    """JSON-отчёт одной команды. Времени в отчёте нет: одинаковый argv даёт одинаковый файл"""

    def __init__(self, reports_dir: Optional[str] = None):
        self.reports_dir = reports_dir or Config.REPORTS_DIR
        self.report_data: Optional[Dict[str, Any]] = None

    def start_report(self, command: str, parameters: Dict[str, Any], seed: Optional[int] = None) -> None:
        self.report_data = {
            "tool": Config.TOOL_NAME,
            "version": Config.VERSION,
            "command": command,
            "parameters": parameters,
            "seed": seed,
            "results": {},
            "flags": {}
        }

    def add_result(self, key: str, value: Any) -> None:
        if not self.report_data:
            return
        self.report_data["results"][key] = value

    def add_flag(self, name: str, value: Any) -> None:
        if self.report_data:
            self.report_data["flags"][name] = value

    def to_json(self) -> str:
        return json.dumps(self.report_data, ensure_ascii=False, indent=2) + "\n"

    def save(self, path: Optional[str] = None) -> Optional[str]:
        if not self.report_data:
            return None

        if path is None:
            suffix = "" if self.report_data["seed"] is None else f"_seed{self.report_data['seed']}"
            path = os.path.join(self.reports_dir, f"{self.report_data['command'].replace(' ', '_')}{suffix}.json")
        directory = os.path.dirname(path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.to_json())

        logger.info("отчёт сохранён: %s", path)
        return path
