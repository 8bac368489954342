#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
情景管理模块

读取、校验与保存 JSON 情景文件。情景文件的顶层键：

    states   状态标签列表（至少 3 个）
    experts  [{"name": ..., "prior": [...]}]
    rule     {"kind": ..., 参数...}，与 AggregationRule.to_dict() 一致
    acts     [{"name": ..., "utils": [...]}] 或 [{"name": ..., "constant": c}]
    events   [{"name": ..., "states": [标签...]}]
    queries  [{"kind": "evaluate" | "update" | "conditional_ce" | "check" | "demo", ...}]
"""

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.acts import UtilityAct
from core.belief import Belief, SuggestionProfile
from core.errors import PoolingError
from core.state_space import Event, StateSpace
from rules.aggregation_rule import AggregationRule
from rules.dictatorship_rule import DictatorshipRule
from rules.rule_factory import rule_from_dict

QUERY_KINDS = ("evaluate", "update", "conditional_ce", "check", "demo")
TOP_LEVEL_KEYS = ("states", "experts", "rule", "acts", "events", "queries")


class ScenarioError(Exception):
    """情景文件相关错误的基类"""


class ScenarioParseError(ScenarioError):
    def __init__(self, message: str, line: Optional[int] = None, key: Optional[str] = None):
        self.line = line
        self.key = key
        where = f"line {line}: " if line is not None else (f"key '{key}': " if key else "")
        super().__init__(f"{where}{message}")


class ScenarioValidationError(ScenarioError):
    def __init__(self, invariant: str, entry: str, detail: str = ""):
        self.invariant = invariant
        self.entry = entry
        super().__init__(f"{entry} violates {invariant}" + (f": {detail}" if detail else ""))


class QueryError(ScenarioError):
    def __init__(self, index: int, kind: str, cause: Exception):
        self.index = index
        self.kind = kind
        self.cause = cause
        super().__init__(f"query #{index} ({kind}): {cause}")


class DemoMismatch(ScenarioError):
    def __init__(self, demo: str, quantity: str, expected: float, actual: float):
        self.demo = demo
        self.quantity = quantity
        self.expected = expected
        self.actual = actual
        super().__init__(f"demo '{demo}': {quantity} expected {expected!r}, got {actual!r}")


@dataclass(frozen=True)
class Query:
    kind: str
    act: Optional[str] = None
    event: Optional[str] = None
    h: Tuple[str, ...] = ()
    axiom: Optional[str] = None
    demo: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind}
        for key in ("act", "event", "axiom", "demo"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        if self.h:
            data["h"] = list(self.h)
        return data


@dataclass
class Scenario:
    states: StateSpace
    expert_names: Tuple[str, ...]
    profile: SuggestionProfile
    rule: AggregationRule
    acts: Dict[str, UtilityAct] = field(default_factory=dict)
    events: Dict[str, Event] = field(default_factory=dict)
    queries: List[Query] = field(default_factory=list)

    def act(self, name: str) -> UtilityAct:
        if name not in self.acts:
            raise ScenarioValidationError("act reference", f"act '{name}'", "no such act")
        return self.acts[name]

    def event(self, name: str) -> Event:
        if name not in self.events:
            raise ScenarioValidationError("event reference", f"event '{name}'", "no such event")
        return self.events[name]


def _require(data: Dict[str, Any], key: str, where: str) -> Any:
    if not isinstance(data, dict):
        raise ScenarioParseError(f"{where} must be an object", key=where)
    if key not in data:
        raise ScenarioParseError(f"missing key in {where}", key=key)
    return data[key]


def _named_list(data: Dict[str, Any], key: str) -> List[Dict[str, Any]]:
    entries = data.get(key, [])
    if not isinstance(entries, list):
        raise ScenarioParseError("expected an array", key=key)
    seen = set()
    for index, entry in enumerate(entries):
        name = _require(entry, "name", f"{key}[{index}]")
        if name in seen:
            raise ScenarioValidationError("unique names", f"{key}[{index}]", f"duplicate name '{name}'")
        seen.add(name)
    return entries


def _build_states(data: Dict[str, Any]) -> StateSpace:
    labels = _require(data, "states", "scenario")
    if not isinstance(labels, list):
        raise ScenarioParseError("expected an array of labels", key="states")
    try:
        return StateSpace([str(label) for label in labels])
    except PoolingError as e:
        raise ScenarioValidationError("state space", "states", str(e)) from e


def _build_profile(data: Dict[str, Any], states: StateSpace) -> Tuple[Tuple[str, ...], SuggestionProfile]:
    experts = _named_list(data, "experts")
    if not experts:
        raise ScenarioValidationError("at least one expert", "experts")
    beliefs = []
    for index, expert in enumerate(experts):
        entry = f"experts[{index}] ({expert['name']})"
        prior = _require(expert, "prior", entry)
        if not isinstance(prior, list) or len(prior) != states.size:
            raise ScenarioValidationError("prior dimension", entry, f"expected {states.size} probabilities")
        try:
            beliefs.append(Belief(prior))
        except PoolingError as e:
            raise ScenarioValidationError("simplex constraint", entry, str(e)) from e
    return tuple(str(e["name"]) for e in experts), SuggestionProfile(beliefs)


def _build_rule(data: Dict[str, Any], experts: int) -> AggregationRule:
    try:
        rule = rule_from_dict(_require(data, "rule", "scenario"))
    except (PoolingError, TypeError, ValueError) as e:
        raise ScenarioValidationError("rule definition", "rule", str(e)) from e
    if rule.expert_count is not None and rule.expert_count != experts:
        raise ScenarioValidationError("expert count", "rule",
                                      f"rule is defined for {rule.expert_count} experts, scenario has {experts}")
    if isinstance(rule, DictatorshipRule) and rule.expert >= experts:
        raise ScenarioValidationError("dictator index", "rule", f"expert {rule.expert} of {experts}")
    return rule


def _build_acts(data: Dict[str, Any], states: StateSpace) -> Dict[str, UtilityAct]:
    acts = {}
    for index, entry in enumerate(_named_list(data, "acts")):
        where = f"acts[{index}] ({entry['name']})"
        try:
            if "constant" in entry:
                act = UtilityAct.constant(float(entry["constant"]), states.size)
            else:
                act = UtilityAct(_require(entry, "utils", where))
        except (PoolingError, TypeError, ValueError) as e:
            raise ScenarioValidationError("finite utility vector", where, str(e)) from e
        if act.dimension != states.size:
            raise ScenarioValidationError("act dimension", where, f"expected {states.size} utilities")
        acts[str(entry["name"])] = act
    return acts


def _build_events(data: Dict[str, Any], states: StateSpace) -> Dict[str, Event]:
    events = {}
    for index, entry in enumerate(_named_list(data, "events")):
        where = f"events[{index}] ({entry['name']})"
        try:
            events[str(entry["name"])] = states.event(_require(entry, "states", where))
        except (PoolingError, KeyError, TypeError) as e:
            raise ScenarioValidationError("event over known states", where, str(e)) from e
    return events


def _build_queries(data: Dict[str, Any], acts: Dict[str, UtilityAct], events: Dict[str, Event]) -> List[Query]:
    entries = data.get("queries", [])
    if not isinstance(entries, list):
        raise ScenarioParseError("expected an array", key="queries")
    queries = []
    for index, entry in enumerate(entries):
        where = f"queries[{index}]"
        kind = _require(entry, "kind", where)
        if kind not in QUERY_KINDS:
            raise ScenarioValidationError("query kind", where, f"unknown kind '{kind}'")
        h = entry.get("h", [])
        query = Query(kind=kind, act=entry.get("act"), event=entry.get("event"), h=tuple(h),
                      axiom=entry.get("axiom"), demo=entry.get("demo"))
        required = {"evaluate": ("act",), "update": ("event",), "conditional_ce": ("act", "event"),
                    "check": ("axiom",), "demo": ("demo",)}[kind]
        for key in required:
            if getattr(query, key) is None:
                raise ScenarioParseError(f"{kind} query needs '{key}'", key=f"{where}.{key}")
        for name in ((query.act,) if query.act else ()) + query.h:
            if name not in acts:
                raise ScenarioValidationError("act reference", where, f"no act named '{name}'")
        if query.event is not None and query.event not in events:
            raise ScenarioValidationError("event reference", where, f"no event named '{query.event}'")
        queries.append(query)
    return queries


def parse_scenario(text: str) -> Scenario:
    """
    解析并校验情景文本

    Args:
        text: UTF-8 JSON 文本

    Returns:
        校验后的 Scenario

    Raises:
        ScenarioParseError: JSON 语法错误（带行号）或缺少键
        ScenarioValidationError: 违反维度、单纯形或引用约束
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(e.msg, line=e.lineno) from e
    if not isinstance(data, dict):
        raise ScenarioParseError("scenario must be a JSON object", line=1)
    unknown = sorted(set(data) - set(TOP_LEVEL_KEYS))
    if unknown:
        raise ScenarioParseError("unknown top-level key", key=unknown[0])

    states = _build_states(data)
    names, profile = _build_profile(data, states)
    rule = _build_rule(data, profile.expert_count)
    acts = _build_acts(data, states)
    events = _build_events(data, states)
    queries = _build_queries(data, acts, events)
    return Scenario(states, names, profile, rule, acts, events, queries)


def load_scenario(path: str) -> Scenario:
    if not os.path.exists(path):
        raise ScenarioParseError(f"scenario file not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        return parse_scenario(f.read())


def scenario_to_dict(scenario: Scenario) -> Dict[str, Any]:
    return {
        "states": list(scenario.states.labels),
        "experts": [{"name": name, "prior": belief.tolist()}
                    for name, belief in zip(scenario.expert_names, scenario.profile)],
        "rule": scenario.rule.to_dict(),
        "acts": [{"name": name, "utils": act.tolist()} for name, act in scenario.acts.items()],
        "events": [{"name": name, "states": scenario.states.labels_of(event)}
                   for name, event in scenario.events.items()],
        "queries": [query.to_dict() for query in scenario.queries],
    }


def serialize(scenario: Scenario) -> str:
    return json.dumps(scenario_to_dict(scenario), ensure_ascii=False, indent=2)


def save_scenario(scenario: Scenario, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize(scenario))
        f.write("\n")
