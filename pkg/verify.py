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
Exhaustive cross-checks: every closed form against the search oracle, and
the lemma-level properties, over bounded ranges of positions.

>>> report = verify_closed_forms('greedy', Bounds(max_heaps=5, max_heap_size=6))
>>> report.status, report.positions_checked, report.mismatches
('pass', 462, [])
>>> list(report.to_json())
['check', 'bounds', 'positions_checked', 'status', 'mismatches']

The full default suites:

>>> [(r.check, r.status) for r in run_suite('nim')]
[('nim', 'pass')]
>>> [(r.check, r.status) for r in run_suite('antonim')]
[('antonim', 'pass')]
>>> [(r.check, r.status, r.positions_checked) for r in run_suite('tower')]
[('tower', 'pass', 19531)]
>>> [(r.check, r.status) for r in run_suite('rotisserie')]
[('rotisserie', 'pass'), ('rotisserie', 'pass')]
>>> [(r.check, r.status) for r in run_suite('greedy')]
[('greedy', 'pass')]
>>> [(r.check, r.status) for r in run_suite('col-paths')]
[('col-paths', 'pass')]
>>> [(r.check, r.status) for r in run_suite('star-lemma')]
[('star-lemma', 'pass')]
>>> [(r.check, r.status) for r in run_suite('adj-strategy')]
[('adj-strategy', 'pass')]
>>> [(r.check, r.status) for r in run_suite('adj-compare')]
[('adj-compare', 'pass')]
>>> [(r.check, r.status) for r in run_suite('head-optimality')]
[('head-optimality', 'pass')]

Every move shrinks the position, so the search terminates; positions print
in the grammar they parse from:

>>> small = [position
...          for ruleset in ('nim', 'antonim', 'tower', 'rotisserie', 'greedy',
...                          'col-paths')
...          for position in enumerate_positions(ruleset, Bounds(3, 4, 3))]
>>> def every_option(position):
...     if position.impartial:
...         return position.options()
...     return position.options(Player.LEFT) + position.options(Player.RIGHT)
>>> all(option.measure() < position.measure()
...     for position in small for option in every_option(position))
True
>>> all(type(position).parse(str(position)) == position for position in small)
True

Colouring a vertex only ever takes moves away:

>>> all(set(option.moves(player)) <= set(position.moves(player))
...     for position in small if not position.impartial
...     for option in every_option(position) for player in Player)
True

Every value the Col sweeps meet prints back to itself and obeys the group
laws:

>>> from values import format_value, negate, parse_value, ZERO
>>> engine = engine_or_default(None)
>>> met = {engine.canonical_value(position) for position
...        in enumerate_positions('col-paths', Bounds(max_vertices=7))}
>>> for size in range(3, 8):
...     for shape in forked_shapes(size):
...         result = col_tree_conjecture_check(shape_to_position(shape), engine)
...         met.update((result.lhs, result.rhs))
>>> met = sorted(met, key=lambda g: g.sort_key)
>>> [g for g in met if parse_value(format_value(g)) is not g]
[]
>>> [g for g in met if make_game(g.left, g.right) is not g]
[]
>>> [g for g in met if add(g, negate(g)) is not ZERO]
[]
>>> [(g, h) for g in met for h in met
...  if leq(g, h) != leq(negate(h), negate(g))]
[]
>>> few = met[:8]
>>> [(f, g, h) for f in few for g in few for h in few
...  if add(add(f, g), h) is not add(f, add(g, h))]
[]

Every recorded mismatch can be replayed against the oracle:

>>> failing = run_suite('rotisserie', adjnim_indexing=ZERO_BASED)[0]
>>> failing.status
'fail'
>>> mismatch = next(m for m in failing.mismatches if m.position == '(3,2,2)')
>>> mismatch
Mismatch(position='(3,2,2)', closed='P', oracle='N')
>>> str(outcome_impartial(RotisseriePosition.parse(mismatch.position)))
'N'
"""

import json
import logging
from collections import namedtuple, OrderedDict
from itertools import combinations, combinations_with_replacement, product
from math import comb

from more_itertools import ilen
from tqdm import tqdm

from dyadic import dyadics_between
from engine import (engine_or_default, outcome_impartial, ResourceLimitError)
from myopic_col import (col_decompose_paths, col_path_value,
                        col_tree_conjecture_check, ColPosition, B, R, U)
from outcome import OutcomeClass, Player
from rulesets import (AntonimPosition, GreedyNimPosition, NimPosition,
                      RotisseriePosition, TowerNimPosition,
                      antonim_outcome_closed, greedy_outcome_closed,
                      nim_grundy_closed, rotisserie_outcome_closed,
                      tower_nimber_closed, tower_outcome_closed,
                      CORRECTED, ONE_BASED, ZERO_BASED)
from tree_shapes import (forked_shapes, format_shape, rooted_shapes,
                         shape_to_position)
from values import add, leq, make_game, number, value_form, STAR

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INFORMATIONAL = 'informational'

P = OutcomeClass.P


class Bounds(namedtuple('BaseBounds',
                        'max_heaps max_heap_size max_vertices min_heap_size '
                        'magnitude_max denominator_max')):
    """
    Limits of an exhaustive sweep; fields a check does not use stay None.

    >>> dict(Bounds(max_heaps=2, max_heap_size=3).to_json())
    {'max_heaps': 2, 'max_heap_size': 3, 'min_heap_size': 1}
    >>> Bounds(max_heaps=0, max_heap_size=3)
    Traceback (most recent call last):
      ...
    ValueError: bound max_heaps must be at least 1, not 0
    """

    __slots__ = ()

    def __new__(cls, max_heaps=None, max_heap_size=None, max_vertices=None,
                min_heap_size=1, magnitude_max=None, denominator_max=None):
        self = super().__new__(cls, max_heaps, max_heap_size, max_vertices,
                               min_heap_size, magnitude_max, denominator_max)
        for field, value in zip(self._fields, self):
            if value is not None and (not isinstance(value, int) or value < 1):
                raise ValueError('bound %s must be at least 1, not %r'
                                 % (field, value))
        return self

    def heap_sizes(self):
        return range(self.min_heap_size, self.max_heap_size + 1)

    def to_json(self):
        return OrderedDict((field, value)
                           for field, value in zip(self._fields, self)
                           if value is not None
                           and (field != 'min_heap_size'
                                or self.max_heap_size is not None))


Mismatch = namedtuple('Mismatch', 'position closed oracle')


class VerificationReport(namedtuple('BaseVerificationReport',
                                    'check bounds positions_checked status '
                                    'mismatches details')):
    __slots__ = ()

    def __new__(cls, check, bounds, positions_checked, status,
                mismatches=(), details=()):
        assert status in (PASS, FAIL, INFORMATIONAL)
        return super().__new__(cls, check, bounds, positions_checked, status,
                               list(mismatches), list(details))

    @property
    def failed(self):
        return self.status == FAIL

    def to_json(self):
        document = OrderedDict([
            ('check', self.check),
            ('bounds', self.bounds.to_json()
             if isinstance(self.bounds, Bounds) else self.bounds),
            ('positions_checked', self.positions_checked),
            ('status', self.status),
            ('mismatches', [OrderedDict(zip(Mismatch._fields, mismatch))
                            for mismatch in self.mismatches]),
        ])
        if self.details:
            document['details'] = self.details
        return document

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def _theorem_status(mismatches):
    return FAIL if mismatches else PASS


def enumerate_positions(ruleset, bounds):
    """
    Every position within bounds exactly once: by size (heap count, or
    vertex count), then lexicographically.

    >>> [str(p) for p in enumerate_positions('nim', Bounds(2, 2))]
    ['()', '(1)', '(2)', '(1,1)', '(1,2)', '(2,2)']
    >>> [str(p) for p in enumerate_positions('antonim', Bounds(2, 3))]
    ['{}', '{1}', '{2}', '{3}', '{1,2}', '{1,3}', '{2,3}']
    >>> [str(p) for p in enumerate_positions('tower', Bounds(1, 2))]
    ['()', '(1)', '(2)']
    >>> [str(p) for p in enumerate_positions('col-paths', Bounds(max_vertices=1))]
    ['U', 'B', 'R']
    """
    if ruleset == 'col-paths':
        for size in range(1, bounds.max_vertices + 1):
            for letters in product('UBR', repeat=size):
                yield ColPosition.path(','.join(letters))
        return
    sizes = bounds.heap_sizes()
    for count in range(bounds.max_heaps + 1):
        if ruleset == 'nim':
            for heaps in combinations_with_replacement(sizes, count):
                yield NimPosition(heaps)
        elif ruleset == 'greedy':
            for heaps in combinations_with_replacement(sizes, count):
                yield GreedyNimPosition(heaps)
        elif ruleset == 'antonim':
            for heaps in combinations(sizes, count):
                yield AntonimPosition(heaps)
        elif ruleset == 'tower':
            for stack in product(sizes, repeat=count):
                yield TowerNimPosition(stack)
        elif ruleset == 'rotisserie':
            for queue in product(sizes, repeat=count):
                yield RotisseriePosition(queue)
        else:
            raise ValueError('no positions to enumerate for %r' % (ruleset,))


def count_positions(ruleset, bounds):
    """
    The number of positions `enumerate_positions` yields, by counting
    formula.

    >>> [count_positions(ruleset, bound) for ruleset, bound in (
    ...     ('nim', Bounds(4, 8)), ('antonim', Bounds(3, 15)),
    ...     ('tower', Bounds(6, 5)), ('rotisserie', Bounds(4, 6)),
    ...     ('greedy', Bounds(5, 6)), ('col-paths', Bounds(max_vertices=7)))]
    [495, 576, 19531, 1555, 462, 3279]
    >>> all(count_positions(ruleset, Bounds(3, 4, min_heap_size=2)) ==
    ...     ilen(enumerate_positions(ruleset, Bounds(3, 4, min_heap_size=2)))
    ...     for ruleset in ('nim', 'antonim', 'tower', 'rotisserie', 'greedy'))
    True
    >>> ilen(enumerate_positions('col-paths', Bounds(max_vertices=4)))
    120
    """
    if ruleset == 'col-paths':
        return sum(3 ** size for size in range(1, bounds.max_vertices + 1))
    sizes = len(bounds.heap_sizes())
    counts = range(bounds.max_heaps + 1)
    if ruleset in ('nim', 'greedy'):
        return sum(comb(sizes + count - 1, count) for count in counts)
    if ruleset == 'antonim':
        return sum(comb(sizes, count) for count in counts)
    if ruleset in ('tower', 'rotisserie'):
        return sum(sizes ** count for count in counts)
    raise ValueError('no positions to count for %r' % (ruleset,))


def _tower_mismatches(position, engine, parity):
    oracle_nimber = engine.grundy_value(position)
    oracle = OutcomeClass.impartial(oracle_nimber != 0)
    closed = tower_outcome_closed(position)
    if closed is not oracle:
        yield Mismatch(str(position), str(closed), str(oracle))
    nimber = tower_nimber_closed(position, parity)
    if nimber is not None and nimber != oracle_nimber:
        yield Mismatch(str(position), 'nimber %d' % (nimber,),
                       'nimber %d' % (oracle_nimber,))


def _outcome_mismatches(closed, position, engine):
    if closed is None:
        logger.debug('no closed form for %s', position)
        return
    oracle = engine.outcome_impartial(position)
    if closed is not oracle:
        yield Mismatch(str(position), str(closed), str(oracle))


def _col_path_mismatches(position, engine):
    oracle = engine.canonical_value(position)
    _, closed = col_decompose_paths(position)
    if closed is not oracle:
        yield Mismatch(str(position), str(closed), str(oracle))
    colors = position.colors
    uncolored = colors.count(U)
    if colors[:uncolored] == (U,) * uncolored and \
            len(colors) - uncolored <= 1:
        end = colors[-1] if len(colors) > uncolored else None
        lemma = col_path_value(uncolored, end)
        if lemma is not oracle:
            yield Mismatch(str(position), str(lemma), str(oracle))


def verify_closed_forms(ruleset, bounds, *, adjnim_indexing=ONE_BASED,
                        tower_parity=CORRECTED, engine=None, progress=False):
    """
    Compares each closed form with the oracle on every enumerated position.
    Positions no theorem covers are skipped and not counted.

    >>> verify_closed_forms('tower', Bounds(4, 4), tower_parity='literal').status
    'fail'
    >>> verify_closed_forms('nim', Bounds(2, 3)).positions_checked
    10
    """
    engine = engine_or_default(engine)
    total = count_positions(ruleset, bounds)
    if total > engine.memo_cap:
        raise ResourceLimitError('%d positions cannot fit a memo table capped '
                                 'at %d entries' % (total, engine.memo_cap))
    logger.info('checking %s over %d positions', ruleset, total)

    checked = 0
    mismatches = []
    positions = tqdm(enumerate_positions(ruleset, bounds), total=total,
                     desc=ruleset, unit='position', disable=not progress)
    for position in positions:
        if ruleset == 'nim':
            closed, oracle = nim_grundy_closed(position), \
                engine.grundy_value(position)
            found = [] if closed == oracle else \
                [Mismatch(str(position), str(closed), str(oracle))]
        elif ruleset == 'antonim':
            if len(position.heaps) > 3:
                continue
            found = list(_outcome_mismatches(
                antonim_outcome_closed(position), position, engine))
        elif ruleset == 'tower':
            found = list(_tower_mismatches(position, engine, tower_parity))
        elif ruleset == 'rotisserie':
            closed = rotisserie_outcome_closed(position, adjnim_indexing)
            if closed is None:
                continue
            found = list(_outcome_mismatches(closed, position, engine))
        elif ruleset == 'greedy':
            found = list(_outcome_mismatches(
                greedy_outcome_closed(position), position, engine))
        elif ruleset == 'col-paths':
            found = list(_col_path_mismatches(position, engine))
        else:
            raise ValueError('no closed form to verify for %r' % (ruleset,))
        checked += 1
        for mismatch in found:
            logger.warning('%s: %s closed form says %s, oracle says %s',
                           ruleset, *mismatch)
        mismatches.extend(found)

    report = VerificationReport(ruleset, bounds, checked,
                                _theorem_status(mismatches), mismatches)
    logger.info('%s: %s after %d positions', ruleset, report.status, checked)
    return report


def check_adj_strategy(bounds, engine=None, progress=False):
    """
    For queues that are N positions with an N tail: moving the front heap to
    1 (odd heap count) or to one less (even heap count) should reach P.
    Failures are listed as candidates; the status never says fail.

    >>> report = check_adj_strategy(Bounds(3, 4))
    >>> report.status, report.mismatches
    ('pass', [])
    >>> report.positions_checked > 0
    True
    """
    engine = engine_or_default(engine)
    checked = 0
    candidates = []
    queues = [queue for queue in enumerate_positions('rotisserie', bounds)
              if len(queue.queue) >= 2]
    for position in tqdm(queues, desc='adj-strategy', disable=not progress):
        front, tail = position.queue[0], position.queue[1:]
        if engine.grundy_value(position) == 0 or \
                engine.grundy_value(RotisseriePosition(tail)) == 0:
            continue
        if len(position.queue) % 2 == 1:
            target = RotisseriePosition(tail + (1,))
        elif front >= 2:
            target = RotisseriePosition(tail + (front - 1,))
        else:
            continue
        checked += 1
        if engine.grundy_value(target) != 0:
            candidates.append(Mismatch(str(position), 'move to %s' % (target,),
                                       str(engine.outcome_impartial(target))))
    for candidate in candidates:
        logger.warning('adj-strategy candidate: %s', candidate.position)
    status = INFORMATIONAL if candidates else PASS
    return VerificationReport('adj-strategy', bounds, checked, status,
                              candidates)


def _compared_queues(queue, max_heap_size):
    choices = [range(1, heap + 1) if index % 2 == 0
               else range(heap, max_heap_size + 1)
               for index, heap in enumerate(queue)]
    return (RotisseriePosition(heaps) for heaps in product(*choices))


def check_adj_compare(bounds, engine=None, progress=False):
    """
    From a P queue, shrinking even-indexed heaps and growing odd-indexed
    heaps keeps it P.

    >>> check_adj_compare(Bounds(3, 4)).status
    'pass'
    >>> [str(q) for q in _compared_queues((2, 3), 4)]
    ['(1,3)', '(1,4)', '(2,3)', '(2,4)']
    """
    engine = engine_or_default(engine)
    checked = 0
    mismatches = []
    queues = [queue for queue in enumerate_positions('rotisserie', bounds)
              if queue.queue]
    for position in tqdm(queues, desc='adj-compare', disable=not progress):
        if engine.grundy_value(position) != 0:
            continue
        for compared in _compared_queues(position.queue, bounds.max_heap_size):
            checked += 1
            if engine.grundy_value(compared) != 0:
                mismatches.append(Mismatch(str(compared), str(P),
                                           str(engine.outcome_impartial(
                                               compared))))
    return VerificationReport('adj-compare', bounds, checked,
                              _theorem_status(mismatches), mismatches)


def check_star_lemma(magnitude_max=4, denominator_max=8):
    """
    x + * = {x|x} and x = {x + *|x + *} for every number x in range.

    >>> report = check_star_lemma(1, 2)
    >>> report.status, report.positions_checked
    ('pass', 5)
    """
    bounds = Bounds(magnitude_max=magnitude_max,
                    denominator_max=denominator_max)
    checked = 0
    mismatches = []
    for x in dyadics_between(magnitude_max, denominator_max):
        value = number(x)
        plus_star = add(value, STAR)
        checked += 1
        switch = make_game([value], [value])
        if switch is not plus_star:
            mismatches.append(Mismatch(str(x), str(plus_star), str(switch)))
        back = make_game([plus_star], [plus_star])
        if back is not value:
            mismatches.append(Mismatch(str(x), str(value), str(back)))
    return VerificationReport('star-lemma', bounds, checked,
                              _theorem_status(mismatches), mismatches)


def check_head_optimality(n_max=6, engine=None):
    """
    On an uncoloured path, colouring the head is at least as good as any
    other move, for both players.

    >>> check_head_optimality(4).positions_checked
    8
    """
    engine = engine_or_default(engine)
    checked = 0
    mismatches = []
    for n in range(1, n_max + 1):
        path = ColPosition.path(','.join('U' * n))
        for player in Player:
            checked += 1
            head = engine.canonical_value(path.apply(0, player))
            for vertex in path.moves(player)[1:]:
                other = engine.canonical_value(path.apply(vertex, player))
                better = leq(other, head) if player is Player.LEFT \
                    else leq(head, other)
                if not better:
                    mismatches.append(Mismatch(
                        '%s %s' % (path, player), 'colour vertex 0',
                        'colour vertex %d' % (vertex,)))
    return VerificationReport('head-optimality', Bounds(max_vertices=n_max),
                              checked, _theorem_status(mismatches),
                              mismatches)


def check_tree_conjecture(v_max=7, engine=None, progress=False):
    """
    Sweeps uncoloured binary trees whose root has two children. Reported,
    never asserted.

    >>> report = check_tree_conjecture(3)
    >>> report.status, report.positions_checked
    ('informational', 1)
    >>> [dict(row) for row in report.details]
    [{'tree': '(()())', 'vertices': 3, 'holds': True, 'lhs': '*', 'rhs': '*', 'form': 'nimber'}]
    >>> check_tree_conjecture(7).positions_checked
    22
    >>> check_tree_conjecture(2)
    Traceback (most recent call last):
      ...
    ValueError: a tree needs at least 3 vertices, not 2
    """
    if v_max < 3:
        raise ValueError('a tree needs at least 3 vertices, not %d' % (v_max,))
    shapes = [shape for size in range(3, v_max + 1)
              for shape in forked_shapes(size)]
    rows = []
    counterexamples = []
    for shape in tqdm(shapes, desc='tree-conjecture', disable=not progress):
        result = col_tree_conjecture_check(shape_to_position(shape), engine)
        rows.append(OrderedDict([
            ('tree', format_shape(shape)),
            ('vertices', len(shape_to_position(shape).colors)),
            ('holds', result.holds),
            ('lhs', str(result.lhs)),
            ('rhs', str(result.rhs)),
            ('form', value_form(result.lhs)),
        ]))
        if not result.holds:
            counterexamples.append(Mismatch(format_shape(shape),
                                            str(result.rhs), str(result.lhs)))
    return VerificationReport('tree-conjecture', Bounds(max_vertices=v_max),
                              len(shapes), INFORMATIONAL, counterexamples,
                              rows)


def check_adjnim_indexing(bounds, engine=None, progress=False):
    """
    Counts, for each reading of the heap index in the all-heaps-at-least-two
    theorem, how many queues disagree with the oracle.

    >>> report = check_adjnim_indexing(Bounds(3, 3, min_heap_size=2))
    >>> [(row['indexing'], row['mismatches'] > 0) for row in report.details]
    [('one-based', False), ('zero-based', True)]
    """
    rows = []
    checked = 0
    for indexing in (ONE_BASED, ZERO_BASED):
        report = verify_closed_forms('rotisserie', bounds,
                                     adjnim_indexing=indexing, engine=engine,
                                     progress=progress)
        checked = report.positions_checked
        first = report.mismatches[0].position if report.mismatches else None
        rows.append(OrderedDict([('indexing', indexing),
                                 ('mismatches', len(report.mismatches)),
                                 ('first_mismatch', first)]))
    return VerificationReport('adjnim-indexing', bounds, checked,
                              INFORMATIONAL, details=rows)


def survey_tree_values(v_max=5, engine=None, progress=False):
    """
    Colours every tree shape in every way and records the smallest tree
    realizing each value that is a non-integer number or lies outside the
    number, number plus star and nimber families.

    >>> report = survey_tree_values(3)
    >>> report.status, report.positions_checked
    ('informational', 66)
    """
    engine = engine_or_default(engine)
    seen = set()
    rows = []
    checked = 0
    shapes = [shape for size in range(1, v_max + 1)
              for shape in rooted_shapes(size)]
    for shape in tqdm(shapes, desc='tree-values', disable=not progress):
        size = len(shape_to_position(shape).colors)
        for colors in product((U, B, R), repeat=size):
            position = shape_to_position(shape, colors)
            value = engine.canonical_value(position)
            checked += 1
            form = value_form(value)
            interesting = form == 'other' or \
                (form == 'number' and not value.number.is_integer)
            if interesting and value not in seen:
                seen.add(value)
                rows.append(OrderedDict([('value', str(value)),
                                         ('form', form),
                                         ('vertices', size),
                                         ('tree', str(position))]))
    return VerificationReport('tree-values', Bounds(max_vertices=v_max),
                              checked, INFORMATIONAL, details=rows)


ALL_BIG_QUEUES = Bounds(max_heaps=5, max_heap_size=4, min_heap_size=2)

SUITES = OrderedDict([
    ('nim', Bounds(max_heaps=4, max_heap_size=8)),
    ('antonim', Bounds(max_heaps=3, max_heap_size=15)),
    ('tower', Bounds(max_heaps=6, max_heap_size=5)),
    ('rotisserie', Bounds(max_heaps=4, max_heap_size=6)),
    ('greedy', Bounds(max_heaps=5, max_heap_size=6)),
    ('col-paths', Bounds(max_vertices=7)),
    ('star-lemma', Bounds(magnitude_max=4, denominator_max=8)),
    ('adj-strategy', Bounds(max_heaps=4, max_heap_size=5)),
    ('adj-compare', Bounds(max_heaps=4, max_heap_size=5)),
    ('head-optimality', Bounds(max_vertices=6)),
    ('adjnim-indexing', Bounds(max_heaps=4, max_heap_size=6,
                               min_heap_size=2)),
    ('tree-values', Bounds(max_vertices=5)),
])


def suite_bounds(name, **overrides):
    """
    >>> suite_bounds('nim', max_heap_size=3, max_vertices=None)
    Bounds(max_heaps=4, max_heap_size=3, max_vertices=None, min_heap_size=1, magnitude_max=None, denominator_max=None)
    """
    overrides = {field: value for field, value in overrides.items()
                 if value is not None}
    return Bounds(*SUITES[name]._replace(**overrides))


def run_suite(name, *, engine=None, adjnim_indexing=ONE_BASED,
              tower_parity=CORRECTED, progress=False, **overrides):
    """
    Runs one named suite with its default bounds, overridden field by field.

    >>> run_suite('fuzz')
    Traceback (most recent call last):
      ...
    KeyError: 'unknown suite: fuzz'
    """
    if name not in SUITES:
        raise KeyError('unknown suite: %s' % (name,))
    bounds = suite_bounds(name, **overrides)
    engine = engine_or_default(engine)
    if name in ('nim', 'antonim', 'tower', 'greedy', 'col-paths'):
        return [verify_closed_forms(name, bounds, tower_parity=tower_parity,
                                    engine=engine, progress=progress)]
    if name == 'rotisserie':
        big = Bounds(*ALL_BIG_QUEUES._replace(**{
            field: value for field, value in overrides.items()
            if value is not None and field != 'min_heap_size'}))
        return [verify_closed_forms(name, queues,
                                    adjnim_indexing=adjnim_indexing,
                                    engine=engine, progress=progress)
                for queues in (bounds, big)]
    if name == 'star-lemma':
        return [check_star_lemma(bounds.magnitude_max,
                                 bounds.denominator_max)]
    if name == 'adj-strategy':
        return [check_adj_strategy(bounds, engine, progress)]
    if name == 'adj-compare':
        return [check_adj_compare(bounds, engine, progress)]
    if name == 'head-optimality':
        return [check_head_optimality(bounds.max_vertices, engine)]
    if name == 'adjnim-indexing':
        return [check_adjnim_indexing(bounds, engine, progress)]
    assert name == 'tree-values'
    return [survey_tree_values(bounds.max_vertices, engine, progress)]
