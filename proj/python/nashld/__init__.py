# Copyright 2026 The nashld Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact eta-Nash regions of the linear deterministic interference channel
with noisy feedback.

Channel parameters are tuples (n11, n22, n12, n21, fb11, fb22). Rates and
eta are fractions.Fraction values (ints and "num/den" strings are accepted
as input).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from . import _core

Params = Tuple[int, int, int, int, int, int]
RationalLike = Union[Fraction, int, str]
Vertex = Tuple[Fraction, Fraction]

__all__ = [
    "theta",
    "nash_bounds",
    "capacity_region",
    "box_region",
    "ne_region",
    "ne_region_constructive",
    "is_ne_rate_pair",
    "ne_split_search",
    "inclusion_chain_check",
    "verify_pair",
    "scheme",
]


def _text(value: RationalLike) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _params(p: Sequence[int]) -> Params:
    if len(p) != 6:
        raise ValueError("channel parameters are (n11, n22, n12, n21, fb11, fb22)")
    return tuple(int(v) for v in p)  # type: ignore[return-value]


def _vertices(raw) -> list[Vertex]:
    return [(Fraction(x), Fraction(y)) for x, y in raw]


def theta(p: Sequence[int], user: int) -> tuple[int, ...]:
    return tuple(_core.theta(_params(p), user))


def nash_bounds(p: Sequence[int], eta: RationalLike):
    """((L1, L2), (U1, U2))."""
    lower, upper = _core.nash_bounds(_params(p), _text(eta))
    return tuple(map(Fraction, lower)), tuple(map(Fraction, upper))


def capacity_region(p: Sequence[int]) -> list[Vertex]:
    return _vertices(_core.capacity_region(_params(p)))


def box_region(p: Sequence[int], eta: RationalLike) -> list[Vertex]:
    return _vertices(_core.box_region(_params(p), _text(eta)))


def ne_region(p: Sequence[int], eta: RationalLike) -> list[Vertex]:
    return _vertices(_core.ne_region(_params(p), _text(eta)))


def ne_region_constructive(p: Sequence[int], eta: RationalLike) -> list[Vertex]:
    return _vertices(_core.ne_region_constructive(_params(p), _text(eta)))


def is_ne_rate_pair(p: Sequence[int], eta: RationalLike, r1: RationalLike, r2: RationalLike) -> bool:
    return _core.is_ne_rate_pair(_params(p), _text(eta), _text(r1), _text(r2))


def ne_split_search(
    p: Sequence[int], eta: RationalLike, r1: RationalLike, r2: RationalLike
) -> Optional[dict]:
    raw = _core.ne_split_search(_params(p), _text(eta), _text(r1), _text(r2))
    return None if raw is None else json.loads(raw)


def inclusion_chain_check(p: Sequence[int], eta: RationalLike) -> bool:
    return _core.inclusion_chain_check(_params(p), _text(eta))


def verify_pair(
    p: Sequence[int], name: str, trials: int = 64, exhaustive: bool = True, seed: int = 1
) -> dict:
    """Simulation report of a built-in pair: floor, zero, policed or cooperative."""
    return json.loads(_core.verify_pair(_params(p), name, trials, exhaustive, seed))


def scheme(p: Sequence[int], name: str, user: int) -> dict:
    return json.loads(_core.scheme_json(_params(p), name, user))
