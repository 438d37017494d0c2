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

from fractions import Fraction

import pytest

import nashld

FIG = (7, 6, 4, 4, 0, 0)
FIG5 = (7, 6, 4, 4, 5, 0)


def test_theta():
    assert nashld.theta(FIG, 1) == (0, 7, 4, 3, 4, 7, 7)
    assert nashld.theta((7, 6, 4, 4, 7, 6), 1) == (4, 7, 0, 3, 3, 3, 3)


def test_bounds_are_fractions():
    lower, upper = nashld.nash_bounds(FIG5, "1/100")
    assert lower == (Fraction(299, 100), Fraction(199, 100))
    assert upper == (Fraction(501, 100), Fraction(401, 100))


def test_capacity_pentagon():
    assert nashld.capacity_region(FIG) == [(0, 0), (7, 0), (6, 2), (4, 4), (0, 6)]


def test_caption_points():
    eta = Fraction(1, 100)
    assert nashld.is_ne_rate_pair(FIG5, eta, 3, 4)
    assert nashld.is_ne_rate_pair(FIG5, eta, 5, 4)
    assert not nashld.is_ne_rate_pair(FIG5, eta, 7, 0)


def test_feedback_collapse_and_enlargement():
    base = nashld.ne_region(FIG, "1/100")
    assert nashld.ne_region((7, 6, 4, 4, 4, 3), "1/100") == base
    assert nashld.ne_region(FIG5, "1/100") != base


def test_witness():
    w = nashld.ne_split_search(FIG5, "1/8", 3, 4)
    assert w is not None
    assert nashld.ne_split_search(FIG5, "1/8", 7, 0) is None


def test_inclusions():
    assert nashld.inclusion_chain_check(FIG5, "1/100")


def test_simulation():
    report = nashld.verify_pair(FIG, "floor")
    assert report["rate"] == ["3/1", "2/1"]
    assert report["verdict"] == "zero-error"
    policed = nashld.verify_pair(FIG5, "policed")
    assert policed["rate"] == ["3/1", "4/1"]
    assert policed["verdict"] == "zero-error"
    assert nashld.scheme(FIG5, "policed", 2)["random_rate"] == "2/1"


def test_errors():
    with pytest.raises(ValueError, match="eta must be positive"):
        nashld.ne_region(FIG, 0)
    with pytest.raises(ValueError):
        nashld.capacity_region((1, 2, 3))
    with pytest.raises(ValueError):
        nashld.verify_pair(FIG, "policed")
