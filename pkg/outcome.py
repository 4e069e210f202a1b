#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

# Copyright 2026 The Data Structure Games Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Outcome classes and players, under normal play.

>>> OutcomeClass.from_wins(left_first=True, right_first=False)
<OutcomeClass.L: 'L'>
>>> str(OutcomeClass.N)
'N'
>>> Player.LEFT.opponent
<Player.RIGHT: 'right'>
"""

from enum import Enum


class OutcomeClass(Enum):
    P = 'P'
    N = 'N'
    L = 'L'
    R = 'R'

    @classmethod
    def from_wins(cls, *, left_first=None, right_first=None):
        """
        Combines the two who-wins-moving-first searches.

        >>> OutcomeClass.from_wins(left_first=False, right_first=False)
        <OutcomeClass.P: 'P'>
        >>> OutcomeClass.from_wins(left_first=True, right_first=True)
        <OutcomeClass.N: 'N'>
        """
        assert isinstance(left_first, bool) and isinstance(right_first, bool)
        if left_first and right_first:
            return cls.N
        if left_first:
            return cls.L
        if right_first:
            return cls.R
        return cls.P

    @classmethod
    def impartial(cls, mover_wins):
        return cls.N if mover_wins else cls.P

    def __str__(self):
        return self.value


class Player(Enum):
    """
    Left is blue and Right is red in Myopic Col.
    """

    LEFT = 'left'
    RIGHT = 'right'

    @property
    def opponent(self):
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    @property
    def wins_as(self):
        """
        The outcome class in which this player wins regardless of who starts.
        """
        return OutcomeClass.L if self is Player.LEFT else OutcomeClass.R

    def __str__(self):
        return self.value
