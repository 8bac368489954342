#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
有限状态空间与事件

事件以状态下标的集合表示，补集和枚举都是精确的。
"""

import itertools
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from .errors import PoolingError, StateSpaceTooSmall

MIN_STATES = 3


class Event:
    """非空事件 E ⊆ Ω

    Args:
        members: 状态下标集合（从0开始）
        size: 所在状态空间的状态数
    """

    __slots__ = ("_members", "_size")

    def __init__(self, members: Iterable[int], size: int):
        members = frozenset(int(m) for m in members)
        if not members:
            raise PoolingError("events must be non-empty")
        if size < 1:
            raise PoolingError(f"state space size must be positive, got {size}")
        out_of_range = [m for m in members if m < 0 or m >= size]
        if out_of_range:
            raise PoolingError(f"event members {sorted(out_of_range)} outside a state space of size {size}")
        self._members = members
        self._size = int(size)

    @classmethod
    def universe(cls, size: int) -> "Event":
        return cls(range(size), size)

    @property
    def members(self) -> frozenset:
        return self._members

    @property
    def size(self) -> int:
        return self._size

    @property
    def is_universe(self) -> bool:
        return len(self._members) == self._size

    def complement(self) -> "Event":
        if self.is_universe:
            raise PoolingError("the complement of the sure event is empty")
        return Event(set(range(self._size)) - self._members, self._size)

    def mask(self) -> np.ndarray:
        """布尔指示向量"""
        out = np.zeros(self._size, dtype=bool)
        out[sorted(self._members)] = True
        return out

    def sorted_members(self) -> List[int]:
        return sorted(self._members)

    def __contains__(self, index: int) -> bool:
        return index in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_members())

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Event):
            return NotImplemented
        return self._members == other._members and self._size == other._size

    def __hash__(self) -> int:
        return hash((self._members, self._size))

    def __repr__(self) -> str:
        return f"Event({self.sorted_members()}, size={self._size})"


class StateSpace:
    """有限状态空间 Ω，状态名有序且唯一，|Ω| ≥ 3"""

    __slots__ = ("_labels",)

    def __init__(self, labels: Sequence[str]):
        labels = tuple(str(label) for label in labels)
        if len(labels) < MIN_STATES:
            raise StateSpaceTooSmall(len(labels), MIN_STATES)
        if len(set(labels)) != len(labels):
            duplicates = sorted({l for l in labels if labels.count(l) > 1})
            raise PoolingError(f"state labels must be unique, duplicated: {duplicates}")
        self._labels = labels

    @classmethod
    def of_size(cls, size: int) -> "StateSpace":
        return cls([f"w{i + 1}" for i in range(size)])

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    def index(self, label: str) -> int:
        try:
            return self._labels.index(label)
        except ValueError:
            raise PoolingError(f"unknown state '{label}'; known states: {list(self._labels)}") from None

    def event(self, states: Iterable[Union[str, int]]) -> Event:
        """由状态名或下标构造事件"""
        indices = [s if isinstance(s, (int, np.integer)) else self.index(s) for s in states]
        return Event(indices, self.size)

    def universe(self) -> Event:
        return Event.universe(self.size)

    def require_size(self, minimum: int, what: str = None) -> None:
        if self.size < minimum:
            raise StateSpaceTooSmall(self.size, minimum, what)

    def events(self, proper: bool = False) -> Iterator[Event]:
        """枚举所有非空事件；proper=True 时排除 Ω 本身"""
        top = self.size - 1 if proper else self.size
        for k in range(1, top + 1):
            for members in itertools.combinations(range(self.size), k):
                yield Event(members, self.size)

    def labels_of(self, event: Event) -> List[str]:
        return [self._labels[i] for i in event]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateSpace):
            return NotImplemented
        return self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"StateSpace({list(self._labels)})"
