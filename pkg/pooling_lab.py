# pooling_lab.py
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from checks import AXIOM_IDS, CheckConfig, CheckReport, Outcome, consistency_matrix, run_axiom
from core.errors import BracketFailure, PoolingError
from core.tolerance import TolerancePolicy, resolve
from dynamics.conditional import conditional_ce, default_h_samples
from rules.aggregation_rule import aggregate_utility
from utils.config_manager import ConfigManager
from utils.demos import run_demo
from utils.report_writer import ReportWriter
from utils.scenario_manager import Query, QueryError, Scenario, load_scenario

logger = logging.getLogger(__name__)

ALL_AXIOMS = "all"


@dataclass(frozen=True)
class RunResult:
    """Rendered report plus whether any check came back violated or could not be evaluated."""

    text: str
    violated: bool = False
    inapplicable: bool = False

    @classmethod
    def from_reports(cls, text: str, reports: Sequence[CheckReport]) -> "RunResult":
        return cls(text, violated=any(r.violated for r in reports),
                   inapplicable=any(r.outcome is Outcome.INAPPLICABLE for r in reports))

    def __str__(self) -> str:
        return self.text


def _write_report(writer: ReportWriter, report: CheckReport) -> None:
    writer.extend(report.to_lines())


def check_scenario(scenario: Scenario, axiom: str, config: CheckConfig, writer: ReportWriter,
                   tol: Optional[TolerancePolicy] = None, section: str = "check") -> List[CheckReport]:
    """Runs one axiom (or all of them) on the scenario's rule and returns the reports in output order."""
    if axiom == ALL_AXIOMS:
        matrix = consistency_matrix({"scenario": scenario.rule}, config, {"scenario": scenario.profile}, tol)
        reports = []
        for axiom_id in AXIOM_IDS:
            report = matrix[axiom_id]["scenario"]
            writer.section(f"{section}.{axiom_id}")
            _write_report(writer, report)
            reports.append(report)
        return reports
    report = run_axiom(axiom, scenario.rule, config, scenario.profile, tol)
    writer.section(f"{section}.{axiom}")
    _write_report(writer, report)
    return [report]


def _run_query(index: int, query: Query, scenario: Scenario, config: CheckConfig, writer: ReportWriter,
               tol: TolerancePolicy) -> List[CheckReport]:
    section = f"query.{index}.{query.kind}"
    writer.section(section)
    if query.kind == "evaluate":
        writer.add("act", query.act)
        writer.add("value", aggregate_utility(scenario.rule, scenario.profile, scenario.act(query.act)))
    elif query.kind == "update":
        posterior = scenario.profile.condition(scenario.event(query.event), tol)
        writer.add("event", scenario.states.labels_of(scenario.event(query.event)))
        for name, belief in zip(scenario.expert_names, posterior):
            writer.add(f"posterior.{name}", belief.probs)
    elif query.kind == "conditional_ce":
        f = scenario.act(query.act)
        if query.h:
            samples = [scenario.act(name) for name in query.h]
            names = list(query.h)
        else:
            samples = default_h_samples(f, count=config.h_samples, act_range=config.act_range, seed=config.seed)
            names = ["zero", query.act] + [f"random.{j}" for j in range(len(samples) - 2)]
        result = conditional_ce(scenario.rule, scenario.profile, scenario.event(query.event), f, samples, tol)
        writer.add("act", query.act)
        writer.add("event", query.event)
        for name, value in zip(names, result.values):
            writer.add(f"ce.{name}", value)
        writer.add("spread", result.spread)
        writer.add("well_defined", result.is_well_defined(tol))
    elif query.kind == "check":
        return check_scenario(scenario, query.axiom, config, writer, tol, section)
    elif query.kind == "demo":
        run_demo(query.demo, writer, tol)
    return []


def run_queries(scenario: Scenario, config: CheckConfig, machine: bool = False,
                tol: Optional[TolerancePolicy] = None) -> RunResult:
    """
    Executes the scenario's queries in order.

    Module errors are wrapped in QueryError naming the failing query; demo mismatches propagate.
    """
    policy = resolve(tol)
    writer = ReportWriter(machine=machine)
    reports: List[CheckReport] = []
    for index, query in enumerate(scenario.queries):
        logger.debug("running query #%d (%s)", index, query.kind)
        try:
            reports += _run_query(index, query, scenario, config, writer, policy)
        except (PoolingError, BracketFailure, KeyError) as e:
            raise QueryError(index, query.kind, e) from e
    return RunResult.from_reports(writer.render(), reports)


class PoolingLab:
    """Facade over configuration, scenarios, checks and demos."""

    def __init__(self, config_source: Union[str, Dict, None] = None, eps_value: Optional[float] = None):
        self.config_manager = ConfigManager(config_source=config_source)
        self.tolerance = self.config_manager.get_tolerance_policy(eps_value)

    def check_config(self, seed: Optional[int] = None, trials: Optional[int] = None) -> CheckConfig:
        return self.config_manager.get_check_config(seed=seed, trials=trials)

    def load(self, path: str) -> Scenario:
        return load_scenario(path)

    def evaluate(self, path: str, machine: bool = False, seed: Optional[int] = None) -> RunResult:
        return run_queries(self.load(path), self.check_config(seed), machine, self.tolerance)

    def check(self, path: str, axiom: str, trials: Optional[int] = None, seed: Optional[int] = None,
              machine: bool = False) -> RunResult:
        scenario = self.load(path)
        writer = ReportWriter(machine=machine)
        reports = check_scenario(scenario, axiom, self.check_config(seed, trials), writer, self.tolerance)
        return RunResult.from_reports(writer.render(), reports)

    def demo(self, demo_id: str, machine: bool = False) -> RunResult:
        writer = ReportWriter(machine=machine)
        run_demo(demo_id, writer, self.tolerance)
        return RunResult(writer.render())
