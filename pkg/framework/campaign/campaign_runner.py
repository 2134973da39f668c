import json
import logging
import os
import time
from dataclasses import dataclass, field
from typing import List, Optional

from analysis.dependency import analyze
from appspec.ast_nodes import format_stmt_id
from appspec.parser import parse_file
from engine.coverage import coverage_report
from generation.long_walk import gen_long
from generation.por import TreeExplorer
from graphs.fsm_graph import FsmGraph
from model.builder import BuildConfig, ModelBuilder
from utils.rng import WALK_STREAM, make_rng
from workers import execute_sequences

GENERATORS = ("long", "por")


class ReportWriteError(OSError):
    pass


@dataclass
class CampaignConfig:
    build: BuildConfig = field(default_factory=BuildConfig)
    generator: str = "long"
    por_depth: int = 4
    sequences: int = 2
    time_budget: Optional[float] = None
    report_path: Optional[str] = None
    dot_path: Optional[str] = None
    jobs: int = 1
    include_timings: bool = False
    progress: bool = False
    log_folder: Optional[str] = None

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"generator must be one of {GENERATORS}, got {self.generator!r}")
        if self.generator == "por" and (self.por_depth is None or self.por_depth < 1):
            raise ValueError("the por generator needs a positive por_depth")
        if self.generator == "long" and (self.sequences is None or self.sequences < 1):
            raise ValueError("the long generator needs a positive number of sequences")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def to_dict(self):
        build = self.build
        return {
            "max_length": build.max_length,
            "restarts": build.restarts,
            "strategy": build.strategy.value,
            "abstraction": build.abstraction.value,
            "alpha": round(float(build.alpha), 4),
            "beta": round(float(build.beta), 4),
            "seed": build.seed,
            "generator": self.generator,
            "por_depth": self.por_depth if self.generator == "por" else None,
            "sequences": self.sequences if self.generator == "long" else None,
            "time_budget": self.time_budget,
            "jobs": self.jobs,
        }


def _finding_dict(stage, finding, index=None):
    return {
        "stage": stage,
        "sequence_index": index,
        "event": finding.event,
        "statement": format_stmt_id(finding.statement) if finding.statement else None,
        "message": finding.message,
        "sequence": ";".join(finding.sequence),
    }


@dataclass
class CampaignReport:
    app: str
    config: dict
    model: dict
    sequences: dict
    coverage: dict
    findings: List[dict]
    partial: bool = False
    per_sequence: List[dict] = field(default_factory=list)
    timings: Optional[dict] = None
    # live objects for callers; never serialized
    construction_coverage: object = field(default=None, repr=False)
    execution_coverage: object = field(default=None, repr=False)
    aggregated_coverage: object = field(default=None, repr=False)
    fsm: object = field(default=None, repr=False)

    def to_dict(self):
        data = {
            "app": self.app,
            "config": self.config,
            "model": self.model,
            "sequences": self.sequences,
            "coverage": self.coverage,
            "findings": self.findings,
            "per_sequence": self.per_sequence,
            "partial": self.partial,
        }
        if self.timings is not None:
            data["timings"] = self.timings
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def write(self, path):
        try:
            folder = os.path.dirname(os.path.abspath(path))
            os.makedirs(folder, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                f.write(self.to_json())
        except OSError as e:
            raise ReportWriteError(f"cannot write report {path}: {e}") from e
        logging.info(f"Report written to {path}")


def coverage_section(spec, construction, execution):
    """Construction, execution and aggregated (union) coverage side by side."""
    aggregated = coverage_report(spec, construction.covered | execution.covered)
    per_event = {}
    for event, cov in aggregated.per_event.items():
        per_event[event] = {
            "total": cov.total,
            "construction": construction.per_event[event].covered,
            "execution": execution.per_event[event].covered,
            "aggregated": cov.covered,
            "ratio": round(cov.ratio, 4),
        }
    statements = [
        {
            "id": format_stmt_id(sid),
            "event": event,
            "kind": kind,
            "construction": sid in construction.covered,
            "execution": sid in execution.covered,
        }
        for sid, event, kind in aggregated.statements
    ]
    section = {
        "total_statements": aggregated.total,
        "construction": round(construction.ratio, 4),
        "execution": round(execution.ratio, 4),
        "aggregated": round(aggregated.ratio, 4),
        "covered": aggregated.covered_count,
        "per_event": per_event,
        "statements": statements,
    }
    return section, aggregated


class CampaignRunner:
    """
    End to end: dependency analysis, model construction, sequence
    generation, execution on fresh sessions, and the coverage report.
    """

    def __init__(self, app_path, config, spec=None):
        self.app_path = app_path
        self.config = config
        self.spec = spec
        self.deadline = None

    def _out_of_time(self):
        return self.deadline is not None and time.monotonic() >= self.deadline

    def _generate(self, fsm, rel):
        cfg = self.config
        if cfg.generator == "por":
            explorer = TreeExplorer(fsm, cfg.por_depth, rel, origin="por", should_stop=self._out_of_time)
            return explorer.run_batch()
        rng = make_rng(cfg.build.seed, WALK_STREAM)
        return gen_long(fsm, cfg.build.max_length, cfg.sequences, rng, should_stop=self._out_of_time)

    def run(self):
        cfg = self.config
        started = time.perf_counter()
        if cfg.time_budget is not None:
            self.deadline = time.monotonic() + cfg.time_budget

        spec = self.spec if self.spec is not None else parse_file(self.app_path)
        logging.info(f"Starting campaign on {spec.name}")

        rel = analyze(spec)
        builder = ModelBuilder(spec, rel, cfg.build)
        fsm, session = builder.build()
        construction = session.coverage()
        built = time.perf_counter()

        if cfg.dot_path:
            FsmGraph(fsm).save_dot(cfg.dot_path)
            logging.info(f"Model written to {cfg.dot_path}")

        batch = self._generate(fsm, rel)
        generated = time.perf_counter()
        unique = batch.unique
        results, exec_partial = execute_sequences(
            spec, unique, cfg.build.seed, jobs=cfg.jobs, should_stop=self._out_of_time,
            progress=cfg.progress, log_folder=cfg.log_folder)
        executed = time.perf_counter()

        covered = set()
        for stats in results:
            covered |= stats.covered_delta
        execution = coverage_report(spec, covered)
        section, aggregated = coverage_section(spec, construction, execution)

        findings = [_finding_dict("construction", f) for f in session.findings]
        for stats in results:
            findings.extend(_finding_dict("execution", f, stats.index) for f in stats.findings)

        lengths = [len(seq) for seq in unique]
        sequence_stats = {
            "generated": len(batch.walks),
            "unique": len(unique),
            "duplicates": batch.duplicates,
            "truncated": batch.truncated,
            "executed": len(results),
            "min_length": min(lengths) if lengths else 0,
            "max_length": max(lengths) if lengths else 0,
            "mean_length": round(sum(lengths) / len(lengths), 4) if lengths else 0.0,
            "fired": sum(s.fired for s in results),
            "skipped": sum(s.skipped for s in results),
        }
        model_stats = builder.stats.to_dict(include_timings=cfg.include_timings)
        model_stats["events"] = sorted(fsm.events)

        timings = None
        if cfg.include_timings:
            timings = {
                "build": round(built - started, 4),
                "generation": round(generated - built, 4),
                "execution": round(executed - generated, 4),
                "total": round(executed - started, 4),
            }

        report = CampaignReport(
            app=spec.name,
            config=cfg.to_dict(),
            model=model_stats,
            sequences=sequence_stats,
            coverage=section,
            findings=findings,
            partial=batch.partial or exec_partial,
            per_sequence=[s.to_dict() for s in results],
            timings=timings,
            construction_coverage=construction,
            execution_coverage=execution,
            aggregated_coverage=aggregated,
            fsm=fsm,
        )
        logging.info(f"Campaign on {spec.name} finished: aggregated {aggregated.summary()}"
                     + (" (partial, budget expired)" if report.partial else ""))
        if cfg.report_path:
            report.write(cfg.report_path)
        return report


def run_campaign(app_path, config, spec=None):
    return CampaignRunner(app_path, config, spec=spec).run()
