#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
公理检验的配置与报告
"""

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.acts import UtilityAct
from core.belief import SuggestionProfile
from core.state_space import Event

SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class CheckConfig:
    """随机检验配置

    Attributes:
        seed: 64位随机种子
        trials: 随机试验次数
        act_range: 抽样效用的范围 [−act_range, act_range]
        h_samples: 条件检验中每次试验的随机 h 数量
        state_sizes: 抽样的状态空间大小
        expert_counts: 规则未固定专家数时抽样的专家数
        show_progress: 是否显示 tqdm 进度条
    """

    seed: int = 0
    trials: int = 1000
    act_range: float = 10.0
    h_samples: int = 32
    state_sizes: Tuple[int, ...] = (3, 4, 5)
    expert_counts: Tuple[int, ...] = (2, 3, 4)
    show_progress: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not self.act_range > 0:
            raise ValueError(f"act_range must be positive, got {self.act_range}")
        if self.h_samples < 0:
            raise ValueError(f"h_samples must be non-negative, got {self.h_samples}")
        if not self.state_sizes or min(self.state_sizes) < 3:
            raise ValueError(f"state sizes must be at least 3, got {self.state_sizes}")
        if not self.expert_counts or min(self.expert_counts) < 1:
            raise ValueError(f"expert counts must be positive, got {self.expert_counts}")

    @property
    def seed64(self) -> int:
        return self.seed & SEED_MASK


class Outcome(enum.Enum):
    PASS = "pass"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Witness:
    """违反公理的具体实例，可重放"""

    profile: SuggestionProfile
    acts: Dict[str, UtilityAct] = field(default_factory=dict)
    event: Optional[Event] = None
    alpha: Optional[float] = None
    other_profile: Optional[SuggestionProfile] = None
    gap: float = 0.0

    def describe(self) -> List[Tuple[str, str]]:
        lines = [("profile", repr(self.profile.tolist()))]
        if self.other_profile is not None:
            lines.append(("other_profile", repr(self.other_profile.tolist())))
        if self.event is not None:
            lines.append(("event", repr(self.event.sorted_members())))
        for name, act in self.acts.items():
            lines.append((f"act.{name}", repr(act.tolist())))
        if self.alpha is not None:
            lines.append(("alpha", format(self.alpha, ".12g")))
        lines.append(("gap", format(self.gap, ".12g")))
        return lines


@dataclass(frozen=True)
class CheckReport:
    """一次随机检验的结果；Pass 只表示 trials_run 次试验内未找到反例"""

    axiom: str
    outcome: Outcome
    trials_run: int
    seed: int
    rule: str
    witness: Optional[Witness] = None
    reason: str = ""
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    @property
    def violated(self) -> bool:
        return self.outcome is Outcome.VIOLATED

    def summary(self) -> str:
        text = f"{self.axiom}: {self.outcome.value.upper()} after {self.trials_run} trials (seed {self.seed})"
        if self.witness is not None:
            text += f", gap {self.witness.gap:.6g}"
        if self.reason:
            text += f" [{self.reason}]"
        return text

    def to_lines(self) -> List[Tuple[str, str]]:
        lines = [("axiom", self.axiom), ("rule", self.rule), ("verdict", self.outcome.value),
                 ("trials_run", str(self.trials_run)), ("skipped", str(self.skipped)), ("seed", str(self.seed))]
        if self.reason:
            lines.append(("reason", self.reason))
        if self.witness is not None:
            lines.extend((f"witness.{k}", v) for k, v in self.witness.describe())
        return lines
