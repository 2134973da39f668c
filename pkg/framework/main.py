import os
import sys
import argparse
import logging
from fractions import Fraction

from colorama import init, Fore, Style

from analysis.dependency import analyze
from appspec.errors import AppSpecError
from appspec.parser import parse_file
from campaign.campaign_runner import CampaignConfig, CampaignReport, ReportWriteError, coverage_section, run_campaign
from campaign.sweep import LengthSweep
from engine.coverage import coverage_report
from generation.enumeration import enumerate_all
from generation.sequences import SequenceFileError, read_sequences
from graphs.fsm_graph import FsmGraph, export_dot
from model.builder import BuildConfig, build_model
from utils.logging_utils import setup_logging
from utils.output_utils import coverage_line, failure, highlight, success, warning
from workers import execute_sequences

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2
EXIT_INTERRUPTED = 130


class CampaignArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1, like parse errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(failure(f"{self.prog}: error: {message}"), file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_build_flags(parser):
    parser.add_argument("--max-length", type=int, default=99,
                        help="Length bound d of each model-construction walk (default: 99)")
    parser.add_argument("--restarts", type=int, default=2,
                        help="Number of model-construction walks from the initial state (default: 2)")
    parser.add_argument("--strategy", choices=["random", "weighted"], default="random",
                        help="Event selection strategy during model construction")
    parser.add_argument("--abstraction", choices=["coarse", "fine"], default="coarse",
                        help="State abstraction used for model states")
    parser.add_argument("--alpha", type=Fraction, default=Fraction(7, 10),
                        help="Weight of events that depend on the previous one (default: 0.7)")
    parser.add_argument("--beta", type=Fraction, default=Fraction(3, 10),
                        help="Weight of the other events (default: 0.3)")
    parser.add_argument("--seed", type=int, default=0, help="Campaign seed (default: 0)")


def _build_config(args):
    return BuildConfig(max_length=args.max_length, restarts=args.restarts, strategy=args.strategy,
                       abstraction=args.abstraction, alpha=args.alpha, beta=args.beta, seed=args.seed)


def build_parser():
    parser = CampaignArgumentParser(
        prog="longseq",
        description="Model-based testing of event-driven apps with long event sequences.")
    parser.add_argument("--log", action="store_true", help="Enable logging")
    parser.add_argument("--output", default=".", help="Folder for the log file (default: current folder)")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Build a model, generate and execute sequences, report coverage")
    run.add_argument("app", help="Path to the .eda app")
    _add_build_flags(run)
    run.add_argument("--gen", choices=["long", "por"], default="long", help="Sequence generator")
    run.add_argument("--por-depth", type=int, default=4, help="Depth bound of the por generator")
    run.add_argument("--sequences", type=int, default=2, help="Number of long walks to generate")
    run.add_argument("--time-budget", type=float, default=None, help="Seconds before generation/execution stop")
    run.add_argument("--jobs", type=int, default=1, help="Worker processes for sequence execution")
    run.add_argument("--report", default=None, help="Path of the JSON report")
    run.add_argument("--dot", default=None, help="Write the model as DOT to this path")
    run.add_argument("--timings", action="store_true", help="Include wall-clock timings in the report")

    model = sub.add_parser("model", help="Build the model only and render it")
    model.add_argument("app", help="Path to the .eda app")
    _add_build_flags(model)
    model.add_argument("--dot", default=None, help="Write DOT here instead of printing it")
    model.add_argument("--graphml", default=None, help="Also save the model as GraphML")
    model.add_argument("--pdf", default=None, help="Also save a PDF picture of the model")

    deps = sub.add_parser("deps", help="Print the event dependency relation")
    deps.add_argument("app", help="Path to the .eda app")
    deps.add_argument("--reflexive", action="store_true", help="Also print the e -> e pairs")

    enum = sub.add_parser("enum", help="Count every accepted event sequence up to a depth")
    enum.add_argument("app", help="Path to the .eda app")
    enum.add_argument("--depth", type=int, required=True, help="Depth bound")

    exec_ = sub.add_parser("exec", help="Replay sequences from a file")
    exec_.add_argument("app", help="Path to the .eda app")
    exec_.add_argument("--seq-file", required=True, help="Sequence file, one ';'-joined sequence per line")
    exec_.add_argument("--seed", type=int, default=0, help="Seed for rand_bool() (default: 0)")
    exec_.add_argument("--jobs", type=int, default=1, help="Worker processes")
    exec_.add_argument("--report", default=None, help="Path of the JSON report")

    sweep = sub.add_parser("sweep", help="Coverage as a function of the length bound over several seeds")
    sweep.add_argument("app", help="Path to the .eda app")
    _add_build_flags(sweep)
    sweep.add_argument("--lengths", type=_int_list, required=True, help="Comma-separated length bounds")
    sweep.add_argument("--seeds", type=_int_list, default=[0, 1, 2, 3, 4], help="Comma-separated seeds")
    sweep.add_argument("--sequences", type=int, default=2, help="Long walks per campaign")
    sweep.add_argument("--report", default=None, help="Path of the JSON result")
    sweep.add_argument("--plot", default=None, help="Path of a PDF plot")
    return parser


def cmd_run(args):
    config = CampaignConfig(
        build=_build_config(args), generator=args.gen, por_depth=args.por_depth, sequences=args.sequences,
        time_budget=args.time_budget, report_path=args.report, dot_path=args.dot, jobs=args.jobs,
        include_timings=args.timings, progress=True, log_folder=args.output if args.log else None)
    report = run_campaign(args.app, config)
    print(f"{Fore.YELLOW}Model of {report.app}: {highlight(report.model['states'])}{Fore.YELLOW} states, "
          f"{highlight(report.model['transitions'])}{Fore.YELLOW} transitions{Style.RESET_ALL}")
    print(f"{Fore.YELLOW}Executed {highlight(report.sequences['executed'])}{Fore.YELLOW} sequences "
          f"({report.sequences['skipped']} skipped events){Style.RESET_ALL}")
    print(coverage_line("construction", report.construction_coverage))
    print(coverage_line("execution   ", report.execution_coverage))
    print(coverage_line("aggregated  ", report.aggregated_coverage))
    for finding in report.findings:
        print(warning(f"finding: {finding['event']} at {finding['statement']}: {finding['message']} "
                      f"after {finding['sequence']}"))
    if report.partial:
        print(warning("Time budget expired: partial result"))
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_model(args):
    spec = parse_file(args.app)
    fsm, _ = build_model(spec, analyze(spec), _build_config(args))
    graph = FsmGraph(fsm)
    if args.dot:
        graph.save_dot(args.dot)
    else:
        print(export_dot(fsm), end="")
    if args.graphml:
        graph.save_graphml(args.graphml)
    if args.pdf:
        graph.save_pdf(args.pdf)
    print(success(f"states: {fsm.num_states} transitions: {fsm.num_transitions} "
                  f"labels: {','.join(sorted(fsm.events))}"))
    return EXIT_OK


def cmd_deps(args):
    spec = parse_file(args.app)
    for line in analyze(spec).edge_lines(reflexive=args.reflexive):
        print(line)
    return EXIT_OK


def cmd_enum(args):
    if args.depth < 1:
        print(failure("--depth must be positive"), file=sys.stderr)
        return EXIT_USAGE
    spec = parse_file(args.app)
    count, _ = enumerate_all(spec, args.depth)
    print(count)
    return EXIT_OK


def cmd_exec(args):
    spec = parse_file(args.app)
    sequences = read_sequences(args.seq_file, spec)
    results, _ = execute_sequences(spec, sequences, args.seed, jobs=args.jobs, progress=True,
                                   log_folder=args.output if args.log else None)
    covered = set()
    for stats in results:
        covered |= stats.covered_delta
        print(f"{Fore.CYAN}#{stats.index}{Style.RESET_ALL} {';'.join(stats.events)}: "
              f"{stats.fired} fired, {stats.skipped} skipped")
        for finding in stats.findings:
            print(warning(f"  finding: {finding.event}: {finding.message}"))
    execution = coverage_report(spec, covered)
    print(coverage_line("execution", execution))
    if args.report:
        section, _ = coverage_section(spec, coverage_report(spec, set()), execution)
        report = CampaignReport(
            app=spec.name,
            config={"seed": args.seed, "seq_file": os.path.basename(args.seq_file), "jobs": args.jobs},
            model={},
            sequences={"executed": len(results),
                       "fired": sum(s.fired for s in results),
                       "skipped": sum(s.skipped for s in results)},
            coverage=section,
            findings=[{"sequence_index": s.index, "event": f.event, "message": f.message,
                       "sequence": ";".join(f.sequence)} for s in results for f in s.findings],
            per_sequence=[s.to_dict() for s in results],
        )
        report.write(args.report)
    return EXIT_OK


def cmd_sweep(args):
    base = CampaignConfig(build=_build_config(args), generator="long", sequences=args.sequences)
    sweep = LengthSweep(args.app, args.lengths, args.seeds, base, progress=True)
    for point in sweep.run():
        print(f"{Fore.CYAN}d={point.max_length}{Style.RESET_ALL} mean {point.mean:.2%} sd {point.sd:.2%}")
    if args.report:
        sweep.save_json(args.report)
    if args.plot:
        sweep.save_pdf(args.plot)
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "model": cmd_model,
    "deps": cmd_deps,
    "enum": cmd_enum,
    "exec": cmd_exec,
    "sweep": cmd_sweep,
}


def main(argv=None):
    init()
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.log:
        setup_logging(args.output)
        logging.info("Logging enabled")
    else:
        logging.disable(logging.CRITICAL)

    try:
        return COMMANDS[args.command](args)
    except (AppSpecError, SequenceFileError, FileNotFoundError, ValueError) as e:
        print(failure(f"Error: {e}"), file=sys.stderr)
        return EXIT_USAGE
    except ReportWriteError as e:
        print(failure(f"Error: {e}"), file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        logging.info("Process interrupted by user. Exiting gracefully...")
        print(f"\n{Fore.YELLOW}Process interrupted by user. Exiting gracefully...{Style.RESET_ALL}")
        return EXIT_INTERRUPTED


if __name__ == "__main__":
    sys.exit(main())
