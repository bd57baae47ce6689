from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from codes import (
    AbelianGroupDescriptor,
    CodeBook,
    MatrixModZq,
    ProductChannel,
    SearchConfig,
    Word,
    ball_decode,
    builtin_table_generators,
    code_profile,
    concat_code,
    construct_even,
    construct_extended,
    construct_odd_mixed,
    corrects_t_errors,
    cr_code,
    decode_asymmetric,
    double_code,
    hamming_parity_check,
    is_lm_code,
    is_perfect,
    is_single_rq_correcting,
    is_t_code,
    lee_parity_check,
    linear_one_code,
    load_code,
    make_product,
    min_asym_distance,
    nonbinary_comparison,
    parse_matrix,
    save_code,
    search_cyclic,
    search_extended,
    simulate_channel,
    sphere_bound,
    table1_report,
    table2_report,
    vt_code,
    vt_vs_linear,
    write_code_file,
    write_matrix,
)
from codes.generator_tables import PUBLISHED_CYCLIC_SIZES
from codes.ternary import binary_image_size, prefix_parts
from codes.words import split_symbols
from report_logger import ReportLogger


@dataclass
class CommandOutcome:
    status: int = 0
    lines: List[str] = field(default_factory=list)


def _mark(ok: bool) -> str:
    return "✅" if ok else "❌"


def _require(args: Dict[str, Any], *keys: str) -> None:
    missing = [k for k in keys if args.get(k) is None]
    if missing:
        raise ValueError("не заданы параметры: " + ", ".join("--" + k.replace("_", "-") for k in missing))


class CommandDispatcher:
    def __init__(self, report: ReportLogger):
        self.report = report
        self.handlers: Dict[str, Callable[[Dict[str, Any]], CommandOutcome]] = {
            "construct": self.construct,
            "verify": self.verify,
            "search": self.search,
            "decode": self.decode,
            "simulate": self.simulate,
            "bound": self.bound,
            "tables": self.tables,
            "info": self.info,
        }

    def dispatch(self, action: str, args: Dict[str, Any]) -> CommandOutcome:
        handler = self.handlers.get(action)
        if handler is None:
            raise ValueError(f"Неизвестное действие: {action}")
        return handler(args)

    def _emit_code(self, code: CodeBook, args: Dict[str, Any], outcome: CommandOutcome) -> None:
        self.report.add_result("code", code_profile(code))
        if args.get("out"):
            save_code(args["out"], code)
            outcome.lines.append(f"записано {len(code)} слов длины {code.length} в {args['out']}")
        else:
            outcome.lines.extend(write_code_file(code).splitlines())

    def _emit_matrix(self, matrix: MatrixModZq, args: Dict[str, Any], outcome: CommandOutcome) -> None:
        text = write_matrix(matrix)
        if args.get("out"):
            with open(args["out"], "w", encoding="utf-8") as f:
                f.write(text)
            outcome.lines.append(f"матрица {matrix.rows}x{matrix.n} записана в {args['out']}")
        else:
            outcome.lines.extend(text.splitlines())

    def _verify_one_code(self, code: CodeBook, t: int, outcome: CommandOutcome) -> bool:
        ok = is_t_code(code, t)
        self.report.add_flag("verified", ok)
        if not ok:
            outcome.status = 1
            outcome.lines.insert(0, f"{_mark(ok)} код не исправляет {t} асимметричных ошибок")
        return ok

    def construct(self, args: Dict[str, Any]) -> CommandOutcome:
        outcome = CommandOutcome()
        kind = args["kind"]
        check = not args.get("unchecked")
        t = 1
        if kind == "vt":
            _require(args, "n")
            code = vt_code(args["n"], int(args["g"]), args["q"])
        elif kind == "cr":
            _require(args, "group")
            G = AbelianGroupDescriptor.parse(args["group"])
            g = args["g"].strip()
            if g == "0":
                element = G.identity
            elif len(G.factors) == 1 and "," not in g:
                element = (int(g),)
            else:
                element = split_symbols(g)
            code = cr_code(G, element, args["q"])
        elif kind == "ternary":
            _require(args, "in")
            part0 = load_code(args["in"])
            if args.get("in1"):
                code = construct_extended(part0, load_code(args["in1"]), check)
            elif part0.alphabet.is_uniform:
                code = construct_even(part0, check)
            else:
                code = construct_odd_mixed(part0, check)
        elif kind in ("concat", "linear"):
            if kind == "concat":
                _require(args, "matrix")
                with open(args["matrix"], encoding="utf-8") as f:
                    result = concat_code(parse_matrix(f.read()), args.get("shorten", False), check)
            else:
                _require(args, "n")
                result = linear_one_code(args["q"], args["n"])
            self.report.add_result("parameters", result.describe())
            if result.code is None:
                outcome.lines.append(f"{result.describe()}: код слишком велик для перечисления, выводится порождающая матрица")
                self._emit_matrix(result.generator, args, outcome)
                return outcome
            code = result.code
        elif kind in ("hamming", "lee"):
            _require(args, "r")
            if kind == "hamming":
                H = hamming_parity_check(args["q"], args["r"])
            else:
                H = lee_parity_check(args["q"], args["r"], not args.get("example_columns", False))
            ok = is_single_rq_correcting(H)
            self.report.add_result("columns", H.n)
            self.report.add_flag("single_rq_correcting", ok)
            self._emit_matrix(H, args, outcome)
            if not ok:
                outcome.status = 1
                outcome.lines.insert(0, f"{_mark(ok)} столбцы H_j и -H_j не все различны, одиночная ошибка R_q не исправляется")
            return outcome
        elif kind == "double":
            _require(args, "in")
            source = load_code(args["in"])
            code = double_code(source)
            t = 2 * min_asym_distance(source) - 1
            self.report.add_result("t", t)
        else:
            raise ValueError(f"Неизвестная конструкция: {kind}")

        self._emit_code(code, args, outcome)
        if check:
            self._verify_one_code(code, t, outcome)
        else:
            self.report.add_flag("verified", None)
        return outcome

    def verify(self, args: Dict[str, Any]) -> CommandOutcome:
        code = load_code(args["in"])
        t = args["t"]
        if args["model"] == "asym":
            ok = is_t_code(code, t)
            claim = f"{t} асимметричных ошибок"
        else:
            ell = args.get("l") or 1
            ok = is_lm_code(code, t, ell, wrap=args.get("wrap", False))
            claim = f"{t} ошибок амплитуды до {ell}" + (" с переносом" if args.get("wrap") else "")
        self.report.add_result("code", code_profile(code))
        self.report.add_flag("verified", ok)
        verdict = "исправляет" if ok else "не исправляет"
        return CommandOutcome(0 if ok else 1, [f"{_mark(ok)} код {verdict} {claim}"])

    def search(self, args: Dict[str, Any]) -> CommandOutcome:
        cfg = SearchConfig(
            seed=args["seed"],
            time_budget=args["budget"],
            strategy=args["strategy"],
            worker_count=args.get("workers") or 1,
            node_limit=args.get("node_limit"),
        )
        if args["kind"] == "cyclic":
            code = search_cyclic(args["m"], cfg)
            metadata = code.metadata
        else:
            c0, c1 = search_extended(args["m"], cfg)
            code = prefix_parts(c0, c1).with_metadata(**c0.metadata)
            code.name = f"ext-search-{args['m']}"
            metadata = c0.metadata
        self.report.add_result("score", metadata["score"])
        self.report.add_flag("proven_optimal", metadata["proven_optimal"])
        outcome = CommandOutcome()
        self._emit_code(code, args, outcome)
        return outcome

    def decode(self, args: Dict[str, Any]) -> CommandOutcome:
        code = load_code(args["code"])
        received = Word.parse(args["received"], code.alphabet)
        channel = make_product(code.alphabet, args.get("channel"))
        if channel.is_chain:
            result = decode_asymmetric(code, received, args["t"])
        else:
            result = ball_decode(code, channel, received, args["t"])
        self.report.add_result("status", result.status.value)
        self.report.add_result("candidates", [str(w) for w in result.candidates])
        if result.ok:
            return CommandOutcome(0, [str(result.codeword)])
        return CommandOutcome(1, [f"{_mark(False)} {result.status.value}: кандидатов {len(result.candidates)}"])

    def simulate(self, args: Dict[str, Any]) -> CommandOutcome:
        code = load_code(args["code"])
        channel = make_product(code.alphabet, args.get("channel"))
        result = simulate_channel(code, channel, args["p"], args["trials"], args["seed"],
                                  t=args.get("t") or 1, forced_errors=args.get("errors"))
        for key, value in result.as_dict().items():
            self.report.add_result(key, value)
        return CommandOutcome(0, [f"{key}: {value}" for key, value in result.as_dict().items()])

    def bound(self, args: Dict[str, Any]) -> CommandOutcome:
        kind = args["kind"]
        if kind == "sphere":
            _require(args, "q", "n")
            value = sphere_bound(args["q"], args["n"], args["t"], args.get("l") or 1)
            self.report.add_result("sphere_bound", value)
            return CommandOutcome(0, [str(value)])
        if kind == "perfect":
            _require(args, "in")
            code = load_code(args["in"])
            ok = is_perfect(code, args["t"], args.get("l") or 1)
            self.report.add_flag("perfect", ok)
            return CommandOutcome(0 if ok else 1, [f"{_mark(ok)} совершенный: {ok}"])
        if kind == "vt-linear":
            _require(args, "q", "r")
            row = vt_vs_linear(args["q"], args["r"])
            for key, value in row.items():
                self.report.add_result(key, value)
            return CommandOutcome(0, [f"{key}: {value}" for key, value in row.items()])
        raise ValueError(f"Неизвестная граница: {kind}")

    def tables(self, args: Dict[str, Any]) -> CommandOutcome:
        kind = args["kind"]
        outcome = CommandOutcome()
        if kind == "table1":
            rows = table1_report(args.get("max_m") or 44)
            outcome.lines.append(f"{'n':>4} {'W(2,1)':>16} {'k_B':>4} {'s':>6} {'опубл.':>7}")
            for row in rows:
                published = "-" if row["published_s"] is None else f"{row['published_s']:.3f}"
                flag = " *" if row["deviation"] else ""
                outcome.lines.append(
                    f"{row['n']:>4} {row['ternary_image']:>16} {row['binary_dimension']:>4} "
                    f"{row['s']:>6.3f} {published:>7}{flag}")
            self.report.add_result("table1", rows)
            self.report.add_flag("deviations", sum(1 for r in rows if r["deviation"]))
        elif kind == "table2":
            report = table2_report()
            outcome.lines.append(f"{'n':>3} {'CR':>6} {'цикл.':>6} {'тернар.':>8} {'разбиение':>10} {'границы':>11}")
            for row in report["rows"]:
                partition = (row["partition"] or "*").split()[0]
                flag = " !" if row["mismatch"] else ""
                outcome.lines.append(
                    f"{row['n']:>3} {row['cr']:>6} {row['cyclic_ternary']:>6} {row['published_ternary']:>8} "
                    f"{partition:>10} {row['known_bounds']:>11}{flag}")
            self.report.add_result("table2", report)
            mismatches = sum(1 for r in report["rows"] if r["mismatch"])
            self.report.add_flag("mismatches", mismatches)
            outcome.status = 1 if mismatches else 0
        elif kind == "verify-generators":
            self._verify_generators(outcome)
        elif kind == "nonbinary":
            lengths = range(2, (args.get("max_n") or 20) + 1)
            rows = nonbinary_comparison(args.get("q") or 3, lengths)
            outcome.lines.append(f"{'n':>4} {'k_asym':>7} {'k_sym':>6}")
            outcome.lines.extend(f"{r['n']:>4} {r['k_asym']:>7} {r['k_sym']:>6}" for r in rows)
            self.report.add_result("nonbinary", rows)
        else:
            raise ValueError(f"Неизвестная таблица: {kind}")
        return outcome

    def _verify_generators(self, outcome: CommandOutcome) -> None:
        checks = []
        for m in range(4, 9):
            code = builtin_table_generators(m)
            checks.append((2 * m, code, construct_even, ProductChannel.z_times_t(0, m)))
        for m in range(3, 8):
            c0, c1 = builtin_table_generators(m, extended=True)
            checks.append((2 * m + 1, prefix_parts(c0, c1), construct_odd_mixed, ProductChannel.z_times_t(1, m)))
        failed = 0
        for n, code, construct, channel in checks:
            oracle = corrects_t_errors(code, channel, 1)
            size = binary_image_size(code)
            binary_ok = is_t_code(construct(code, check=False), 1)
            ok = oracle and binary_ok and size == PUBLISHED_CYCLIC_SIZES[n]
            failed += not ok
            self.report.add_result(f"n={n}", {"size": size, "oracle": oracle, "binary_1_code": binary_ok})
            outcome.lines.append(f"{_mark(ok)} n={n}: размер {size}, ожидается {PUBLISHED_CYCLIC_SIZES[n]}")
        self.report.add_flag("all_verified", failed == 0)
        outcome.status = 1 if failed else 0

    def info(self, args: Dict[str, Any]) -> CommandOutcome:
        code = load_code(args["in"])
        profile = code_profile(code)
        for key, value in profile.items():
            self.report.add_result(key, value)
        lines = [f"{key}: {value}" for key, value in profile.items()]
        if code.name:
            lines.insert(0, f"name: {code.name}")
        return CommandOutcome(0, lines)
