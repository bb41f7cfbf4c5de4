"""
braidmfw: Morton-Franks-Williams analysis of closed braids.

Exit status: 0 all checks passed, 1 an expectation failed, 2 usage error,
3 a size limit was hit.
"""
import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional

from src.api.schemas import MFWReportModel, RunReport, ThmACertificateModel
from src.application.alexander import burau_alexander
from src.application.band_forms import classify_ABCD, shortest_band_form
from src.application.constructions import (
    BMParams, axis_linked_union, bm_word, cable, cable_crossing_count_link, connect_sum, identify_in_table,
)
from src.application.engine_manager import ENGINE_VERSION, EngineManager, homfly
from src.application.hecke import HECKE_ENGINE_VERSION
from src.application.homflypt import REFERENCE_ENGINE_VERSION
from src.application.markov_search import SearchBudget
from src.application.mfw_analysis import (
    QuadrantScan, mfw_report, mirror_duality_holds, quadrant_scan, sharp_consequences, thmA_check, thmA_scan,
)
from src.application.paper_suites import SUITE_CHOICES, run_suites
from src.application.settings import (
    DEFAULT_BAND_BUDGET, DEFAULT_MAX_LETTERS, DEFAULT_MAX_STRANDS, DEFAULT_SEARCH_DEPTH, DEFAULT_SEARCH_QUEUE,
    EngineChoice, EngineSettings,
)
from src.domain.band_word import BandWord, band_to_artin
from src.domain.braid_word import BraidWord, linking_matrix
from src.domain.exceptions import BraidMFWError, MFWViolation, SizeLimitExceeded
from src.domain.laurent import v_degrees
from src.infrastructure.knot_table import data_dir, ingest_table, load_default_table
from src.infrastructure.report_writer import plot_quadrant, render, write_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

default_log_level = os.getenv("BRAIDMFW_LOG_LEVEL", "WARNING")


def _word(text: str, strands: Optional[int] = None) -> BraidWord:
    return BraidWord.parse(text, strands)


def _invariants(w: BraidWord) -> Dict:
    """HOMFLYPT, degrees, Alexander and the representative-level numbers."""
    p = homfly(w)
    d_minus, d_plus = v_degrees(p)
    return {
        "homfly": p.to_text(),
        "d_minus": d_minus,
        "d_plus": d_plus,
        "alexander": burau_alexander(w).to_text(),
        "components": w.component_count(),
        "beta": w.exponent_sum() - w.strands,
        "gamma": w.exponent_sum() + w.strands,
    }


def _emit(report: RunReport, w: BraidWord, key: str, with_invariants: bool) -> None:
    report.results[key] = w.to_text() if w.strands <= 26 else w.to_int_list()
    report.results[f"{key} strands"] = w.strands
    report.results[f"{key} exponent sum"] = w.exponent_sum()
    if with_invariants:
        report.results[f"{key} invariants"] = _invariants(w)


# --- commands ---

def cmd_invariants(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="invariants", inputs={"word": args.word, "strands": w.strands})
    report.results.update(_invariants(w))
    if w.component_count() > 1:
        report.results["linking matrix"] = linking_matrix(w)
    return report


def cmd_mfw(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="mfw", inputs={"word": args.word, "braid_index": args.braid_index})
    mfw = mfw_report(w, args.braid_index)
    report.results.update(MFWReportModel.from_report(mfw).model_dump(mode="json"))
    forced = sharp_consequences(mfw)
    if forced is not None:
        report.results["sharp: forced (b, c)"] = list(forced)
    return report


def cmd_thma(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    budget = SearchBudget(args.depth, args.max_states)
    report = RunReport(command="thma", inputs={"word": args.word, "position": args.position, "depth": args.depth})
    if args.position is not None:
        cert = thmA_check(w, args.position, budget, args.braid_index)
    else:
        cert = thmA_scan(w, budget, args.progress, args.braid_index)
    report.results.update(ThmACertificateModel.from_certificate(cert).model_dump(mode="json"))
    report.expect("witnesses replay", True, cert.replay())
    return report


def cmd_cable(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="cable", inputs={"word": args.word, "p": args.p, "q": args.q})
    cabled = cable(w, args.p, args.q)
    _emit(report, cabled, "cable", args.invariants)
    k = args.q - args.p * w.exponent_sum()
    report.expect("strands = p n", args.p * w.strands, cabled.strands)
    report.expect("c = p^2 c + k(p - 1)", cable_crossing_count_link(w.exponent_sum(), args.p, [k]),
                  cabled.exponent_sum())
    return report


def cmd_connect_sum(args: argparse.Namespace) -> RunReport:
    w1, w2 = _word(args.word1), _word(args.word2)
    report = RunReport(command="connect-sum", inputs={"word1": args.word1, "word2": args.word2})
    total = connect_sum(w1, w2)
    _emit(report, total, "sum", args.invariants)
    report.expect("c adds", w1.exponent_sum() + w2.exponent_sum(), total.exponent_sum())
    if args.invariants:
        report.expect("HOMFLYPT multiplies", (homfly(w1) * homfly(w2)).to_text(), homfly(total).to_text())
    return report


def cmd_axis_union(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="axis-union", inputs={"word": args.word, "n": args.n, "full_twists": args.full_twists})
    union = axis_linked_union(w, args.n, args.full_twists)
    _emit(report, union, "union", args.invariants)
    report.expect("components = n components(w)", args.n * w.component_count(), union.component_count())
    if args.n > 1:
        report.results["linking matrix"] = linking_matrix(union)
    return report


def cmd_bm(args: argparse.Namespace) -> RunReport:
    params = BMParams(args.x, args.y, args.z, args.w)
    report = RunReport(command="bm", inputs={"params": list(params.as_tuple())})
    word = bm_word(params)
    _emit(report, word, "bm", args.invariants)
    if args.invariants:
        mfw = mfw_report(word, 4)
        report.results["D_plus_rep"] = mfw.D_plus_rep
        report.expect("D+ >= 2", True, mfw.D_plus_rep >= 2)
        match = identify_in_table(word, [(e.name, e.word()) for e in load_default_table(args.data_dir)])
        report.results["identified as"] = f"{match[0]} ({match[1].value})" if match else "none"
    return report


def cmd_xu(args: argparse.Namespace) -> RunReport:
    bw = BandWord.parse(args.band_word)
    report = RunReport(command="xu", inputs={"band_word": args.band_word, "budget": args.budget})
    form = shortest_band_form(bw, args.budget)
    report.results["length"] = form.length
    report.results["representative"] = form.representative.to_text()
    report.results["form"] = form.form.value if form.form else None
    report.results["k"] = form.k
    report.results["complete"] = form.complete
    report.results["artin"] = band_to_artin(bw).to_text()
    family = classify_ABCD(form.representative) or classify_ABCD(bw)
    report.results["family"] = f"{family[0].value}{list(family[1])}" if family else None
    return report


def cmd_quadrant(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="quadrant", inputs={"word": args.word, "depth": args.depth})
    scan = quadrant_scan(w, w.exponent_sum(), args.depth)
    report.results["points"] = [[p.b, p.c] for p in scan.points]
    report.results["sequences"] = scan.sequences
    report.expect("points outside the quadrant or MFW region", 0, len(scan.violations))
    report.expect("mirror duality", True, mirror_duality_holds(w))
    if args.csv:
        write_csv(args.csv, QuadrantScan.CSV_HEADER, scan.csv_rows())
    if args.plot:
        plot_quadrant(scan, args.plot, title=args.word)
    return report


def cmd_identify(args: argparse.Namespace) -> RunReport:
    w = _word(args.word, args.strands)
    report = RunReport(command="identify", inputs={"word": args.word})
    match = identify_in_table(w, [(e.name, e.word()) for e in load_default_table(args.data_dir)])
    report.results["knot"] = match[0] if match else None
    report.results["verdict"] = match[1].value if match else "none"
    return report


def cmd_verify_paper(args: argparse.Namespace) -> RunReport:
    table = load_default_table(args.data_dir)
    return run_suites(args.suite, table, progress=args.progress)


def cmd_table(args: argparse.Namespace) -> RunReport:
    report = RunReport(command="table", inputs={"ingest": str(args.ingest)})
    entries = ingest_table(args.ingest, args.data_dir)
    report.results["stored"] = len(entries)
    report.results["directory"] = str(data_dir(args.data_dir))
    report.results["knots"] = [e.name for e in entries]
    return report


# --- parser ---

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidmfw", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--json", action="store_true", help="Emit the run report as JSON.")
    parser.add_argument("--log-level", default=default_log_level,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help=f"Logging level (default: {default_log_level}, env BRAIDMFW_LOG_LEVEL).")
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help="Directory of the persistent HOMFLYPT cache (env BRAIDMFW_CACHE_DIR; default: none).")
    parser.add_argument("--data-dir", type=Path, default=None,
                        help="Directory of the ingested knot table (env BRAIDMFW_DATA_DIR; default: ./braidmfw_data).")
    parser.add_argument("--max-strands", type=int, default=None,
                        help=f"HOMFLYPT strand limit (env BRAIDMFW_MAX_STRANDS; default: {DEFAULT_MAX_STRANDS}).")
    parser.add_argument("--max-letters", type=int, default=None,
                        help=f"HOMFLYPT word-length limit (env BRAIDMFW_MAX_LETTERS; default: {DEFAULT_MAX_LETTERS}).")
    parser.add_argument("--engine", choices=[e.value for e in EngineChoice], default=None,
                        help="HOMFLYPT engine (env BRAIDMFW_ENGINE; default: auto).")
    parser.add_argument("--no-progress", dest="progress", action="store_false", help="Hide progress bars.")

    sub = parser.add_subparsers(dest="command", required=True)

    def word_command(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help="Braid word, e.g. aaacBAAcB.")
        p.add_argument("--strands", type=int, default=None, help="Strand count (default: largest generator + 1).")
        p.set_defaults(func=func)
        return p

    word_command("invariants", cmd_invariants, "HOMFLYPT, degrees, Alexander, components, beta, gamma.")
    p = word_command("mfw", cmd_mfw, "Full MFW report.")
    p.add_argument("--braid-index", type=int, default=None, help="Claimed braid index (default: strand count).")
    p = word_command("thma", cmd_thma, "Destabilization certificate at a crossing, or the best crossing.")
    p.add_argument("--position", type=int, default=None, help="Crossing index (default: scan all).")
    p.add_argument("--depth", type=int, default=DEFAULT_SEARCH_DEPTH, help="Braid-relation rewrites per path.")
    p.add_argument("--max-states", type=int, default=DEFAULT_SEARCH_QUEUE, help="States per search.")
    p.add_argument("--braid-index", type=int, default=None, help="Claimed braid index; must equal the strand count.")
    p = word_command("cable", cmd_cable, "(p, q)-cable word.")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--invariants", action="store_true")
    p = sub.add_parser("connect-sum", help="Composite braid of two knots.")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--invariants", action="store_true")
    p.set_defaults(func=cmd_connect_sum)
    p = word_command("axis-union", cmd_axis_union, "n copies linked by full twists.")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--full-twists", type=int, default=2)
    p.add_argument("--invariants", action="store_true")
    p = sub.add_parser("bm", help="Birman-Menasco word BM_{x,y,z,w}.")
    for name in ("x", "y", "z", "w"):
        p.add_argument(name, type=int)
    p.add_argument("--invariants", action="store_true")
    p.set_defaults(func=cmd_bm)
    p = sub.add_parser("xu", help="Shortest band form and A/B/C/D family of a 3-braid band word.")
    p.add_argument("band_word", help='Signed band indices, e.g. "-2 1 1 2 2 3".')
    p.add_argument("--budget", type=int, default=DEFAULT_BAND_BUDGET)
    p.set_defaults(func=cmd_xu)
    p = word_command("quadrant", cmd_quadrant, "Scan (b, c) of stabilizations of a minimal representative.")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--csv", type=Path, default=None, help="Write the scanned points as CSV.")
    p.add_argument("--plot", type=Path, default=None, help="Write a PNG plot of the scan.")
    word_command("identify", cmd_identify, "Match against the knot table up to mirror.")
    p = sub.add_parser("verify-paper", help="Run the acceptance suites.")
    p.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    p.set_defaults(func=cmd_verify_paper)
    p = sub.add_parser("table", help="Validate and store a knot table CSV.")
    p.add_argument("ingest", type=Path, help="CSV with header name,braid_word,braid_index,expected_c,expected_deficit.")
    p.set_defaults(func=cmd_table)
    return parser


def configure(args: argparse.Namespace) -> EngineSettings:
    settings = EngineSettings.from_env(max_strands=args.max_strands, max_letters=args.max_letters,
                                       engine=args.engine, cache_dir=args.cache_dir,
                                       progress=None if args.progress else False)
    EngineManager().configure(settings)
    return settings


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    try:
        configure(args)
        start = time.perf_counter()
        report = args.func(args)
        report.timings.setdefault("total", time.perf_counter() - start)
        report.engine_versions = {"reference": REFERENCE_ENGINE_VERSION, "hecke": HECKE_ENGINE_VERSION,
                                  "cache": ENGINE_VERSION}
    except SizeLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except MFWViolation as e:
        logger.error(f"Internal consistency failure: {e}", exc_info=True)
        return EXIT_EXPECTATION
    except (BraidMFWError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        EngineManager().save()
    print(render(report, args.json))
    return EXIT_OK if report.passed else EXIT_EXPECTATION


if __name__ == "__main__":
    sys.exit(main())
