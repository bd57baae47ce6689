import argparse
import logging
import sys
from typing import List

from config import Config
from codes import CodeError, SearchStrategy
from dispatcher import CommandDispatcher
from report_logger import ReportLogger

logger = logging.getLogger(__name__)

# Параметры, которые не относятся к вычислению и не попадают в отчёт
SERVICE_KEYS = ("action", "json", "log_level")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="", default=None, metavar="PATH",
                        help="сохранить JSON-отчёт (без пути - в каталог отчётов)")
    common.add_argument("--log-level", default=None, help="уровень логирования (по умолчанию из ASYMCODES_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog=Config.TOOL_NAME,
                                     description="Коды, исправляющие асимметричные ошибки")
    sub = parser.add_subparsers(dest="action", required=True)

    construct = sub.add_parser("construct", parents=[common], help="построить код")
    construct.add_argument("kind", choices=["vt", "cr", "ternary", "concat", "linear", "hamming", "lee", "double"])
    construct.add_argument("--n", type=int)
    construct.add_argument("--g", default="0")
    construct.add_argument("--q", type=int, default=2)
    construct.add_argument("--r", type=int)
    construct.add_argument("--group", default=None, help="группа вида 3x3")
    construct.add_argument("--in", dest="in", help="файл кода (для ternary - часть C0)")
    construct.add_argument("--in1", help="часть C1 расширенной конструкции")
    construct.add_argument("--matrix", help="файл матрицы внешнего кода")
    construct.add_argument("--shorten", action="store_true", help="укоротить до нечётной длины")
    construct.add_argument("--example-columns", action="store_true",
                           help="для lee: только столбцы с ненулевой первой строкой")
    construct.add_argument("--out")
    construct.add_argument("--unchecked", action="store_true", help="не проверять результат оракулом")

    verify = sub.add_parser("verify", parents=[common], help="проверить код")
    verify.add_argument("--in", dest="in", required=True)
    verify.add_argument("--model", choices=["asym", "limited"], default="asym")
    verify.add_argument("--t", type=int, required=True)
    verify.add_argument("--l", type=int, default=1)
    verify.add_argument("--wrap", action="store_true")

    search = sub.add_parser("search", parents=[common], help="поиск циклических троичных кодов")
    search.add_argument("kind", choices=["cyclic", "extended"])
    search.add_argument("--m", type=int, required=True)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--budget", type=float, default=60.0)
    search.add_argument("--strategy", choices=[s.value for s in SearchStrategy], default=SearchStrategy.EXACT.value)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--node-limit", type=int, default=None)
    search.add_argument("--out")

    decode = sub.add_parser("decode", parents=[common], help="декодировать слово")
    decode.add_argument("--code", required=True)
    decode.add_argument("--received", required=True)
    decode.add_argument("--t", type=int, default=1)
    decode.add_argument("--channel", default=None, help="Z, T, Rq, chain или L1-wrap")

    simulate = sub.add_parser("simulate", parents=[common], help="моделирование канала")
    simulate.add_argument("--code", required=True)
    simulate.add_argument("--p", type=float, required=True)
    simulate.add_argument("--trials", type=int, default=10_000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--t", type=int, default=1)
    simulate.add_argument("--channel", default=None)
    simulate.add_argument("--errors", type=int, default=None, help="ровно столько ошибок в каждом испытании")

    bound = sub.add_parser("bound", parents=[common], help="границы и совершенные коды")
    bound.add_argument("kind", choices=["sphere", "perfect", "vt-linear"])
    bound.add_argument("--q", type=int)
    bound.add_argument("--n", type=int)
    bound.add_argument("--t", type=int, default=1)
    bound.add_argument("--l", type=int, default=1)
    bound.add_argument("--r", type=int)
    bound.add_argument("--in", dest="in")

    tables = sub.add_parser("tables", parents=[common], help="сводные таблицы")
    tables.add_argument("kind", choices=["table1", "table2", "verify-generators", "nonbinary"])
    tables.add_argument("--max-m", type=int, default=44)
    tables.add_argument("--max-n", type=int, default=20)
    tables.add_argument("--q", type=int, default=3)

    info = sub.add_parser("info", parents=[common], help="сводка по коду")
    info.add_argument("--in", dest="in", required=True)
    return parser


def run_command(argv: List[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (args.log_level or Config.LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(level), int):
        print(f"ошибка: неизвестный уровень логирования {level}", file=sys.stderr)
        return 2
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    params = {k: v for k, v in vars(args).items() if k not in SERVICE_KEYS}
    command = args.action if "kind" not in params else f"{args.action} {params['kind']}"
    report = ReportLogger()
    report.start_report(command, params, params.get("seed"))
    dispatcher = CommandDispatcher(report)
    try:
        outcome = dispatcher.dispatch(args.action, params)
        for line in outcome.lines:
            print(line)
        if args.json is not None:
            report.save(args.json or None)
    except (CodeError, OSError, ValueError) as exc:
        print(f"ошибка: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        logger.debug("необработанное исключение", exc_info=True)
        print(f"внутренняя ошибка: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return outcome.status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
