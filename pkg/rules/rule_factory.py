from typing import Any, Dict

from core.errors import PoolingError

from .aggregation_rule import AggregationRule
from .dictatorship_rule import DictatorshipRule
from .dual_self_rule import DualSelfRule, credibility_rule, median_rule, order_statistic_rule
from .geometric_rule import GeometricRule
from .linear_rule import LinearRule
from .multiple_weight_rule import MultipleWeightRule
from .soft_min_rule import SoftMinRule

RULE_KINDS = ("linear", "multiple_weight", "dual_self", "dictatorship", "geometric", "soft_min",
              "median", "order_statistic", "credibility")


def _require(params: Dict[str, Any], key: str, kind: str) -> Any:
    if key not in params:
        raise PoolingError(f"rule kind '{kind}' requires parameter '{key}'")
    return params[key]


def build_rule(kind: str, **params) -> AggregationRule:
    """按名称构造聚合规则（参数与 to_dict() 输出一致）"""
    kind_lower = kind.lower()

    if kind_lower == "linear":
        return LinearRule(_require(params, "weight", kind))
    elif kind_lower == "multiple_weight":
        if params.get("full_simplex"):
            return MultipleWeightRule.full_simplex(int(params["full_simplex"]))
        return MultipleWeightRule(_require(params, "vertices", kind))
    elif kind_lower == "dual_self":
        return DualSelfRule(_require(params, "sets", kind))
    elif kind_lower == "dictatorship":
        return DictatorshipRule(int(_require(params, "expert", kind)))
    elif kind_lower == "geometric":
        return GeometricRule(_require(params, "exponents", kind))
    elif kind_lower == "soft_min":
        return SoftMinRule(float(params.get("temperature", 1.0)))
    elif kind_lower == "median":
        return median_rule()
    elif kind_lower == "order_statistic":
        return order_statistic_rule(int(_require(params, "experts", kind)), int(_require(params, "k", kind)))
    elif kind_lower == "credibility":
        return credibility_rule(tuple(params.get("group_weights", (0.8, 0.2))),
                                tuple(params.get("interval", (0.25, 0.75))))
    raise PoolingError(f"Unsupported or unknown rule kind: {kind}")


def rule_from_dict(data: Dict[str, Any]) -> AggregationRule:
    if not isinstance(data, dict) or "kind" not in data:
        raise PoolingError(f"rule description must be a mapping with a 'kind' key, got {data!r}")
    params = {k: v for k, v in data.items() if k != "kind"}
    return build_rule(str(data["kind"]), **params)
