"""Simulated-annealing acceptance for worsening neighbours."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class AnnealingState:
    temp: float = 1000.0
    cooling: float = 0.7
    sn_tag: bool = False

    def __post_init__(self):
        if self.temp <= 0:
            raise ValueError("temperature must be positive")
        if not 0.0 <= self.cooling <= 1.0:
            raise ValueError("cooling constant must be in [0, 1]")

    def cool(self) -> None:
        self.temp *= self.cooling


def sn_accept(
    mq_new: float, mq_old: float, state: AnnealingState, rng: np.random.Generator
) -> bool:
    """Accept a strictly worsening move with probability e^((new-old)/temp)."""
    if mq_new >= mq_old:
        return False
    return rng.random() < math.exp((mq_new - mq_old) / state.temp)
