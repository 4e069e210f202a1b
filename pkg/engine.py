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
The brute-force oracle: exhaustive game-tree search with memoization.

A position is anything with:

 - `impartial`: True or False;
 - `options()` (impartial) or `options(player)` (partizan), enumerating the
   positions one move away in a fixed order;
 - `key()`: a hashable normalized encoding; positions of the same type with
   equal keys must have equal values.

Every supported ruleset strictly decreases a natural measure with each move,
so the search needs no cycle detection.

>>> from rulesets import NimPosition, TowerNimPosition
>>> grundy_value(NimPosition((1, 2, 3)))
0
>>> grundy_value(TowerNimPosition((1, 3)))
3
>>> winning_moves(NimPosition((1, 2)))
[NimPosition(heaps=(1, 1))]
"""

import logging
import threading

from outcome import OutcomeClass, Player
from values import make_game, outcome_of_value

logger = logging.getLogger(__name__)

DEFAULT_MEMO_CAP = 50000000


class ResourceLimitError(RuntimeError):
    """
    The memo table outgrew its cap: the bounds are too large.
    """


def mex(values):
    """
    The least natural number missing from the given values.

    >>> mex([])
    0
    >>> mex({0, 1, 2})
    3
    >>> mex({1, 2})
    0
    """
    present = set(values)
    result = 0
    while result in present:
        result += 1
    return result


class GameEngine:
    """
    One memo table, shared by every search run through this engine. Safe to
    use from several threads; entries are only ever added.

    >>> from rulesets import NimPosition
    >>> engine = GameEngine(memo_cap=3)
    >>> engine.grundy_value(NimPosition((1,)))
    1
    >>> engine.grundy_value(NimPosition((5,)))
    Traceback (most recent call last):
      ...
    engine.ResourceLimitError: memo table reached its cap of 3 entries

    Memoization never changes an answer:

    >>> from verify import Bounds, enumerate_positions
    >>> remembering, forgetful = GameEngine(), GameEngine(memoize=False)
    >>> heaps = list(enumerate_positions('nim', Bounds(3, 4)))
    >>> paths = list(enumerate_positions('col-paths', Bounds(max_vertices=4)))
    >>> len(heaps), len(paths)
    (35, 120)
    >>> all(remembering.grundy_value(p) == forgetful.grundy_value(p)
    ...     for p in heaps)
    True
    >>> all(remembering.canonical_value(p) is forgetful.canonical_value(p)
    ...     and remembering.outcome(p) is forgetful.outcome(p) for p in paths)
    True
    >>> len(forgetful), len(remembering) > 0
    (0, True)
    """

    def __init__(self, *, memo_cap=DEFAULT_MEMO_CAP, memoize=True):
        if memo_cap < 1:
            raise ValueError('memo cap must be positive: %r' % (memo_cap,))
        self.memo_cap = memo_cap
        self.memoize = memoize
        self._memo = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._memo)

    def _remember(self, kind, position, compute):
        if not self.memoize:
            return compute()
        key = (kind, type(position), position.key())
        try:
            return self._memo[key]
        except KeyError:
            pass
        result = compute()
        with self._lock:
            if key not in self._memo:
                if len(self._memo) >= self.memo_cap:
                    raise ResourceLimitError(
                        'memo table reached its cap of %d entries'
                        % (self.memo_cap,))
                self._memo[key] = result
                if len(self._memo) % 1000000 == 0:
                    logger.debug('memo table holds %d entries',
                                 len(self._memo))
        return result

    def grundy_value(self, position):
        assert position.impartial
        return self._remember('grundy', position, lambda: mex(
            self.grundy_value(option) for option in position.options()))

    def outcome_impartial(self, position):
        return OutcomeClass.impartial(self.grundy_value(position) != 0)

    def wins_moving_first(self, position, player):
        """
        Whether `player`, to move in a partizan position, has a winning
        move.
        """
        assert not position.impartial
        return self._remember(player, position, lambda: any(
            not self.wins_moving_first(option, player.opponent)
            for option in position.options(player)))

    def outcome_partizan(self, position):
        return OutcomeClass.from_wins(
            left_first=self.wins_moving_first(position, Player.LEFT),
            right_first=self.wins_moving_first(position, Player.RIGHT))

    def outcome(self, position):
        if position.impartial:
            return self.outcome_impartial(position)
        return self.outcome_partizan(position)

    def canonical_value(self, position):
        assert not position.impartial
        return self._remember('value', position, lambda: make_game(
            [self.canonical_value(option)
             for option in position.options(Player.LEFT)],
            [self.canonical_value(option)
             for option in position.options(Player.RIGHT)]))

    def winning_moves(self, position, mover=None):
        """
        Options after which the opponent, moving next, has no win; in the
        ruleset's own enumeration order.
        """
        if position.impartial:
            return [option for option in position.options()
                    if self.grundy_value(option) == 0]
        if not isinstance(mover, Player):
            raise ValueError('a partizan position needs a mover')
        return [option for option in position.options(mover)
                if not self.wins_moving_first(option, mover.opponent)]


_default_engine = None


def default_engine():
    global _default_engine
    if _default_engine is None:
        _default_engine = GameEngine()
    return _default_engine


def engine_or_default(engine):
    """
    An engine with an empty memo table is still the engine to use.

    >>> fresh = GameEngine(memoize=False)
    >>> engine_or_default(fresh) is fresh, engine_or_default(None) is default_engine()
    (True, True)
    """
    return default_engine() if engine is None else engine


def grundy_value(position, engine=None):
    return engine_or_default(engine).grundy_value(position)


def outcome_impartial(position, engine=None):
    """
    >>> from rulesets import AntonimPosition, NimPosition
    >>> outcome_impartial(NimPosition((1,))), outcome_impartial(NimPosition((2, 2)))
    (<OutcomeClass.N: 'N'>, <OutcomeClass.P: 'P'>)
    >>> outcome_impartial(AntonimPosition((1, 2)))
    <OutcomeClass.P: 'P'>
    """
    return engine_or_default(engine).outcome_impartial(position)


def outcome_partizan(position, engine=None):
    """
    >>> from myopic_col import ColPosition
    >>> [str(outcome_partizan(ColPosition.path(text)))
    ...  for text in ('', 'U', 'U,B')]
    ['P', 'N', 'R']
    """
    return engine_or_default(engine).outcome_partizan(position)


def canonical_value(position, engine=None):
    """
    >>> from myopic_col import ColPosition
    >>> canonical_value(ColPosition.path('U'))
    *
    >>> canonical_value(ColPosition.path('U,U'))
    0
    >>> tree = ColPosition.from_json({
    ...     'vertices': [{'id': i, 'color': 'uncolored'} for i in range(3)],
    ...     'arcs': [[0, 1], [0, 2]]})
    >>> canonical_value(tree)
    *
    >>> outcome_of_value(canonical_value(tree)) is outcome_partizan(tree)
    True
    """
    return engine_or_default(engine).canonical_value(position)


def winning_moves(position, mover=None, engine=None):
    """
    >>> from rulesets import NimPosition, TowerNimPosition
    >>> winning_moves(NimPosition((1, 2, 3)))
    []
    >>> winning_moves(TowerNimPosition((1, 1, 5)))
    [TowerNimPosition(stack=(1, 1))]
    """
    return engine_or_default(engine).winning_moves(position, mover)


def mover_wins(position, mover=None, engine=None):
    """
    Whether the player to move has a winning move.

    >>> from rulesets import NimPosition
    >>> mover_wins(NimPosition((1, 2))), mover_wins(NimPosition((1, 2, 3)))
    (True, False)

    The mover wins exactly when there is a winning move:

    >>> from verify import Bounds, enumerate_positions
    >>> all(bool(winning_moves(p)) == mover_wins(p)
    ...     for p in enumerate_positions('nim', Bounds(3, 4)))
    True
    >>> all(bool(winning_moves(p, player)) == mover_wins(p, player)
    ...     for p in enumerate_positions('col-paths', Bounds(max_vertices=4))
    ...     for player in Player)
    True
    """
    engine = engine_or_default(engine)
    if position.impartial:
        return engine.grundy_value(position) != 0
    return engine.wins_moving_first(position, mover)
