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
Heap games over five data structures: Nim (array), Antonim (set), Tower Nim
(stack), Rotisserie Nim (queue) and Greedy Nim (priority queue), each with
its closed-form solver.

Every move removes at least one stick, so total sticks is the measure the
search decreases.

>>> NimPosition.parse('3,5,7')
NimPosition(heaps=(3, 5, 7))
>>> str(AntonimPosition.parse('{5,1,3}'))
'{1,3,5}'
>>> TowerNimPosition.parse('(2,1,4)').options()[0]
TowerNimPosition(stack=(2, 1))
"""

import logging
from collections import namedtuple

import numpy as np

from outcome import OutcomeClass

logger = logging.getLogger(__name__)

P, N = OutcomeClass.P, OutcomeClass.N

ONE_BASED = 'one-based'
ZERO_BASED = 'zero-based'
CORRECTED = 'corrected'
LITERAL = 'literal'


class PositionSyntaxError(ValueError):
    pass


class NoClosedFormError(ValueError):
    pass


def _parse_heaps(text, brackets=('()',)):
    """
    >>> _parse_heaps('3, 5,7')
    (3, 5, 7)
    >>> _parse_heaps('()')
    ()
    >>> _parse_heaps('3,,5')
    Traceback (most recent call last):
      ...
    rulesets.PositionSyntaxError: not a list of heap sizes: '3,,5'
    """
    body = text.strip()
    for opening, closing in brackets:
        if body.startswith(opening) and body.endswith(closing):
            body = body[1:-1]
            break
    if not body.strip():
        return ()
    try:
        return tuple(int(part) for part in body.split(','))
    except ValueError:
        raise PositionSyntaxError('not a list of heap sizes: %r' % (text,))


def _check_heaps(heaps, *, allow_zero=False):
    heaps = tuple(heaps)
    smallest = 0 if allow_zero else 1
    for heap in heaps:
        if not isinstance(heap, int) or heap < smallest:
            raise PositionSyntaxError('heap sizes must be %s integers: %r'
                                      % ('natural' if allow_zero
                                         else 'positive', heaps))
    return heaps


def _xor_sum(numbers):
    return int(np.bitwise_xor.reduce(np.array(numbers, dtype=np.int64)))


def _heap_list(heaps):
    return '(' + ','.join(str(heap) for heap in heaps) + ')'


class NimPosition(namedtuple('BaseNimPosition', 'heaps')):
    """
    A list of heaps; a move lowers exactly one heap. Empty heaps are allowed
    and behave like absent ones.

    >>> NimPosition((1, 2)).options()
    [NimPosition(heaps=(0, 2)), NimPosition(heaps=(1, 0)), NimPosition(heaps=(1, 1))]
    >>> NimPosition((0,)).options()
    []
    >>> NimPosition((3, 0, 1)).key()
    (1, 3)
    """

    __slots__ = ()
    ruleset = 'nim'
    impartial = True

    def __new__(cls, heaps=()):
        return super().__new__(cls, _check_heaps(heaps, allow_zero=True))

    def options(self):
        heaps = self.heaps
        return [NimPosition(heaps[:i] + (smaller,) + heaps[i + 1:])
                for i, heap in enumerate(heaps)
                for smaller in range(heap)]

    def key(self):
        return tuple(sorted(heap for heap in self.heaps if heap))

    def measure(self):
        return sum(self.heaps)

    @classmethod
    def parse(cls, text):
        return cls(_parse_heaps(text))

    def __str__(self):
        return _heap_list(self.heaps)


def nim_grundy_closed(position):
    """
    The xor of the heap sizes.

    >>> nim_grundy_closed(NimPosition((3, 5)))
    6
    >>> nim_grundy_closed(NimPosition(()))
    0
    >>> nim_grundy_closed(NimPosition((1, 2, 3)))
    0
    """
    return _xor_sum(position.heaps)


class AntonimPosition(namedtuple('BaseAntonimPosition', 'heaps')):
    """
    A set of distinct heaps. Reducing a heap to a size already present
    forgets it, exactly as if the whole heap were taken.

    >>> AntonimPosition((1,)).options()
    [AntonimPosition(heaps=())]
    >>> [str(option) for option in AntonimPosition((2,)).options()]
    ['{}', '{1}']
    >>> [str(option) for option in AntonimPosition((1, 2)).options()]
    ['{2}', '{1}']
    >>> AntonimPosition((2, 2))
    Traceback (most recent call last):
      ...
    rulesets.PositionSyntaxError: Antonim heaps must be distinct: (2, 2)
    """

    __slots__ = ()
    ruleset = 'antonim'
    impartial = True

    def __new__(cls, heaps=()):
        heaps = _check_heaps(heaps)
        if len(set(heaps)) != len(heaps):
            raise PositionSyntaxError('Antonim heaps must be distinct: %r'
                                      % (heaps,))
        return super().__new__(cls, tuple(sorted(heaps)))

    def options(self):
        result = []
        for heap in self.heaps:
            rest = tuple(other for other in self.heaps if other != heap)
            result.append(AntonimPosition(rest))
            result.extend(AntonimPosition(rest + (smaller,))
                          for smaller in range(1, heap)
                          if smaller not in self.heaps)
        return result

    def key(self):
        return self.heaps

    def measure(self):
        return sum(self.heaps)

    @classmethod
    def parse(cls, text):
        return cls(_parse_heaps(text, brackets=('{}', '()')))

    def __str__(self):
        return '{' + ','.join(str(heap) for heap in self.heaps) + '}'


def antonim_outcome_closed(position):
    """
    Known rules for up to three piles.

    >>> [str(antonim_outcome_closed(AntonimPosition.parse(text)))
    ...  for text in ('{}', '{4}', '{1,2}', '{2,3}', '{1,3,5}')]
    ['P', 'N', 'P', 'N', 'P']
    >>> antonim_outcome_closed(AntonimPosition((1, 2, 3, 4)))
    Traceback (most recent call last):
      ...
    rulesets.NoClosedFormError: no closed form for Antonim with 4 piles
    """
    heaps = position.heaps
    if len(heaps) >= 4:
        raise NoClosedFormError('no closed form for Antonim with %d piles'
                                % (len(heaps),))
    if not heaps:
        return P
    if len(heaps) == 1:
        return N
    if len(heaps) == 2:
        smaller, larger = heaps
        return P if smaller % 2 == 1 and larger == smaller + 1 else N
    return P if _xor_sum([heap + 1 for heap in heaps]) == 0 else N


class TowerNimPosition(namedtuple('BaseTowerNimPosition', 'stack')):
    """
    Heaps on a stack, bottom first; only the top (last) heap may be touched.

    >>> [str(option) for option in TowerNimPosition((5, 2, 4)).options()]
    ['(5,2)', '(5,2,1)', '(5,2,2)', '(5,2,3)']
    >>> TowerNimPosition((1,)).options()
    [TowerNimPosition(stack=())]
    >>> TowerNimPosition((2, 1)).options()
    [TowerNimPosition(stack=(2,))]
    """

    __slots__ = ()
    ruleset = 'tower'
    impartial = True

    def __new__(cls, stack=()):
        return super().__new__(cls, _check_heaps(stack))

    def options(self):
        if not self.stack:
            return []
        below, top = self.stack[:-1], self.stack[-1]
        return [TowerNimPosition(below)] + \
            [TowerNimPosition(below + (smaller,)) for smaller in range(1, top)]

    def key(self):
        return self.stack

    def measure(self):
        return sum(self.stack)

    @classmethod
    def parse(cls, text):
        return cls(_parse_heaps(text))

    def __str__(self):
        return _heap_list(self.stack)


def _ones_on_top(stack):
    count = 0
    for heap in reversed(stack):
        if heap != 1:
            break
        count += 1
    return count


def tower_outcome_closed(position):
    """
    Decided by the ones sitting on top of the topmost bigger heap.

    >>> [str(tower_outcome_closed(TowerNimPosition(stack)))
    ...  for stack in ((1, 1), (1, 1, 5), (2, 1), ())]
    ['P', 'N', 'P', 'P']
    """
    stack = position.stack
    ones = _ones_on_top(stack)
    if ones == len(stack):
        return P if ones % 2 == 0 else N
    return N if ones % 2 == 0 else P


def tower_nimber_closed(position, parity=CORRECTED):
    """
    The nimber where it is characterized, else None.

    >>> tower_nimber_closed(TowerNimPosition((1, 1, 1)))
    1
    >>> tower_nimber_closed(TowerNimPosition((3, 1, 2)))
    2
    >>> tower_nimber_closed(TowerNimPosition((5, 3, 1, 1)))
    1
    >>> tower_nimber_closed(TowerNimPosition((5, 3, 1, 1)), parity=LITERAL)
    0
    >>> tower_nimber_closed(TowerNimPosition((2, 3))) is None
    True
    """
    assert parity in (CORRECTED, LITERAL)
    stack = position.stack
    ones = _ones_on_top(stack)
    if ones == len(stack):
        return ones % 2
    if ones:
        if parity == LITERAL:
            return ones % 2
        return 1 if ones % 2 == 0 else 0
    if len(stack) == 1 or stack[-2] == 1:
        return stack[-1]
    return None


class RotisseriePosition(namedtuple('BaseRotisseriePosition', 'queue')):
    """
    Heaps in a queue, front first; what is left of the front heap rejoins at
    the back.

    >>> [str(option) for option in RotisseriePosition((3, 2)).options()]
    ['(2)', '(2,1)', '(2,2)']
    >>> [str(option) for option in RotisseriePosition((1, 4)).options()]
    ['(4)']
    >>> [str(option) for option in RotisseriePosition((2,)).options()]
    ['()', '(1)']
    """

    __slots__ = ()
    ruleset = 'rotisserie'
    impartial = True

    def __new__(cls, queue=()):
        return super().__new__(cls, _check_heaps(queue))

    def options(self):
        if not self.queue:
            return []
        front, rest = self.queue[0], self.queue[1:]
        return [RotisseriePosition(rest)] + \
            [RotisseriePosition(rest + (smaller,))
             for smaller in range(1, front)]

    def key(self):
        return self.queue

    def measure(self):
        return sum(self.queue)

    @classmethod
    def parse(cls, text):
        return cls(_parse_heaps(text))

    def __str__(self):
        return _heap_list(self.queue)


def _all_big_outcome(queue, indexing):
    first_min = queue.index(min(queue))
    if indexing == ONE_BASED:
        count, index = len(queue), first_min + 1
        return N if count % 2 == 1 or index % 2 == 0 else P
    last_index = len(queue) - 1
    return N if last_index % 2 == 1 or first_min % 2 == 0 else P


def rotisserie_outcome_closed(position, indexing=ONE_BASED):
    """
    The outcome where a theorem decides it, else None. The all-heaps-at-
    least-two theorem goes first so the index convention applies to every
    such queue.

    >>> [str(rotisserie_outcome_closed(RotisseriePosition(queue)))
    ...  for queue in ((), (4,), (3, 2), (2, 3), (2, 2, 1), (1, 3, 2), (3, 2, 2))]
    ['P', 'N', 'N', 'P', 'P', 'P', 'N']
    >>> rotisserie_outcome_closed(RotisseriePosition((3, 2, 2)), ZERO_BASED)
    <OutcomeClass.P: 'P'>
    >>> rotisserie_outcome_closed(RotisseriePosition((2, 1, 2, 2))) is None
    True
    """
    assert indexing in (ONE_BASED, ZERO_BASED)
    queue = position.queue
    if not queue:
        return P
    if len(queue) == 1:
        return N
    if min(queue) >= 2:
        return _all_big_outcome(queue, indexing)
    if len(queue) == 2:
        return N if queue[0] > queue[1] else P
    if len(queue) == 3:
        first, second, third = queue
        if first == 1:
            return P if second > third else N
        return P if second > 1 and third == 1 else N
    logger.debug('no theorem covers %s', position)
    return None


class GreedyNimPosition(namedtuple('BaseGreedyNimPosition', 'heaps')):
    """
    A multiset of heaps, kept largest first; only a largest heap may be
    touched.

    >>> [str(option) for option in GreedyNimPosition((3, 1)).options()]
    ['(1)', '(1,1)', '(2,1)']
    >>> [str(option) for option in GreedyNimPosition((2, 2)).options()]
    ['(2)', '(2,1)']
    >>> GreedyNimPosition(()).options()
    []
    >>> GreedyNimPosition((1, 2)) == GreedyNimPosition((2, 1))
    True
    """

    __slots__ = ()
    ruleset = 'greedy'
    impartial = True

    def __new__(cls, heaps=()):
        heaps = _check_heaps(heaps)
        return super().__new__(cls, tuple(sorted(heaps, reverse=True)))

    def options(self):
        if not self.heaps:
            return []
        largest, rest = self.heaps[0], self.heaps[1:]
        return [GreedyNimPosition(rest)] + \
            [GreedyNimPosition(rest + (smaller,))
             for smaller in range(1, largest)]

    def key(self):
        return self.heaps

    def measure(self):
        return sum(self.heaps)

    @classmethod
    def parse(cls, text):
        return cls(_parse_heaps(text))

    def __str__(self):
        return _heap_list(self.heaps)


def greedy_outcome_closed(position):
    """
    P exactly when an even number of heaps share the greatest size.

    >>> [str(greedy_outcome_closed(GreedyNimPosition(heaps)))
    ...  for heaps in ((2, 2), (5, 4, 4), ())]
    ['P', 'N', 'P']
    """
    heaps = position.heaps
    largest = heaps.count(heaps[0]) if heaps else 0
    return P if largest % 2 == 0 else N
