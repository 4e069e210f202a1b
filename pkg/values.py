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
Canonical forms of short partizan games.

Every value is interned in a content-addressed store, so two values are
equal exactly when they are the same object.

>>> add(STAR, STAR)
0
>>> add(number('1/2'), number('1/2'))
1
>>> add(number(-1), STAR)
-1*
>>> make_game([number(1)], [number(-1)])
{1|-1}
>>> outcome_of_value(add(number(-1), STAR))
<OutcomeClass.R: 'R'>
>>> parse_value('{0,*|0,*}') is nimber_value(2)
True

Algebraic laws, checked over every game born by day 2:

>>> sample = games_born_by(2)
>>> len(sample)
22
>>> all(make_game(g.left, g.right) is g for g in sample)
True
>>> all(add(g, h) is add(h, g) for g in sample for h in sample)
True
>>> all(add(g, negate(g)) is ZERO for g in sample)
True
>>> all(negate(negate(g)) is g for g in sample)
True
>>> all((leq(g, h) and leq(h, g)) == (g is h) for g in sample for h in sample)
True
>>> all(leq(f, h) for f in sample for g in sample for h in sample
...     if leq(f, g) and leq(g, h))
True
>>> all(leq(g, h) == leq(negate(h), negate(g))
...     for g in sample for h in sample)
True
>>> extra = (number('1/2'), number('-3/4'), nimber_value(2),
...          make_game([number(1)], [number(-1)]), make_game([ZERO], [STAR]))
>>> trio = games_born_by(1) + extra
>>> all(add(add(f, g), h) is add(f, add(g, h))
...     for f in trio for g in trio for h in trio)
True
>>> all(parse_value(format_value(g)) is g for g in sample + extra)
True
"""

import logging
import threading
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import product
from operator import attrgetter

from more_itertools import powerset, unique_everseen

from dyadic import Dyadic
from outcome import OutcomeClass

logger = logging.getLogger(__name__)

NIMBER_CAP = 1024


class ValueSyntaxError(ValueError):
    """
    Malformed value text; `position` is the offending character offset.
    """

    def __init__(self, message, text, position):
        super().__init__('%s at position %d of %r' % (message, position, text))
        self.text = text
        self.position = position


class ValueBoundError(ValueError):
    pass


class CanonicalGame:
    """
    A short game in canonical form. Never construct one directly: use
    make_game(), number() or nimber_value().

    Numbers keep their dyadic value and only grow options when asked:

    >>> two = number(2)
    >>> two.left, two.right
    ((1,), ())
    >>> number('1/2').left, number('1/2').right
    ((0,), (1,))
    """

    __slots__ = ('_left', '_right', 'number', 'nimber', 'text', 'sort_key')

    def __init__(self, left, right, number=None):
        self._left = left
        self._right = right
        self.number = number
        if number is not None:
            self.nimber = 0 if number == 0 else None
            self.text = str(number)
            self.sort_key = (0, number.as_fraction())
        else:
            self.nimber = _nimber_of(left, right)
            self.text = _format(left, right, self.nimber)
            self.sort_key = (1, self.text)

    @property
    def left(self):
        if self._left is None:
            self._left, self._right = _number_options(self.number)
        return self._left

    @property
    def right(self):
        if self._right is None:
            self._left, self._right = _number_options(self.number)
        return self._right

    @property
    def is_number(self):
        return self.number is not None

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return add(self, negate(other))

    def __le__(self, other):
        return leq(self, other)

    def __ge__(self, other):
        return leq(other, self)

    def __lt__(self, other):
        return self is not other and leq(self, other)

    def __gt__(self, other):
        return self is not other and leq(other, self)

    def __str__(self):
        return self.text

    __repr__ = __str__


# A game that is still being canonicalized; its options are canonical.
_Form = namedtuple('_Form', 'left right')

_store = {}
_store_lock = threading.Lock()
_sort_key = attrgetter('sort_key')


def _sorted_options(games):
    return tuple(sorted(unique_everseen(games), key=_sort_key))


def _number_of(left, right):
    """
    The number a canonical form equals, or None. Only valid on forms that
    are already canonical.
    """
    if len(left) > 1 or len(right) > 1:
        return None
    if any(g.number is None for g in left + right):
        return None
    if left and right:
        low, high = left[0].number, right[0].number
        if low >= high:
            return None
        return Dyadic.from_fraction(
            (low.as_fraction() + high.as_fraction()) / 2)
    if left:
        return left[0].number + 1
    if right:
        return right[0].number - 1
    return Dyadic(0)


def _nimber_of(left, right):
    if left != right or any(g.nimber is None for g in left):
        return None
    if sorted(g.nimber for g in left) == list(range(len(left))):
        return len(left)
    return None


def _format(left, right, nimber):
    if nimber == 1:
        return '*'
    if nimber:
        return '*%d' % (nimber,)
    if len(left) == 1 and left == right and left[0].number is not None:
        return left[0].text + '*'
    return '{%s|%s}' % (','.join(g.text for g in left),
                        ','.join(g.text for g in right))


def _number_options(d):
    if d.is_integer:
        n = d.numerator
        if n > 0:
            return (number(n - 1),), ()
        if n < 0:
            return (), (number(n + 1),)
        return (), ()
    step = d.ulp()
    return (number(d - step),), (number(d + step),)


def _intern(left, right):
    left = _sorted_options(left)
    right = _sorted_options(right)
    d = _number_of(left, right)
    if d is not None:
        return number(d)
    key = (left, right)
    with _store_lock:
        game = _store.get(key)
        if game is None:
            game = _store[key] = CanonicalGame(left, right)
    return game


def number(d):
    """
    The canonical form of a dyadic rational (Dyadic, int, Fraction or text).

    >>> number(0).left, number(0).right
    ((), ())
    >>> number(3).is_number
    True
    >>> number(Fraction(-5, 4))
    -5/4
    """
    d = Dyadic.coerce(d)
    key = ('number', d)
    with _store_lock:
        game = _store.get(key)
        if game is None:
            game = _store[key] = CanonicalGame(None, None, d)
    return game


ZERO = number(0)
_nimbers = [ZERO]
_nimbers_lock = threading.Lock()


def nimber_value(k):
    """
    >>> nimber_value(0) is ZERO
    True
    >>> nimber_value(1).left
    (0,)
    >>> nimber_value(2).left, nimber_value(2).right
    ((0, *), (0, *))
    >>> nimber_value(3)
    *3
    >>> nimber_value(NIMBER_CAP + 1)
    Traceback (most recent call last):
      ...
    values.ValueBoundError: nimber 1025 is above the table cap of 1024

    Threads extending the table at once each get the nimber they asked for:

    >>> from concurrent.futures import ThreadPoolExecutor
    >>> wanted = [k for k in range(48, 0, -1) for _ in range(4)]
    >>> with ThreadPoolExecutor(max_workers=8) as pool:
    ...     built = list(pool.map(nimber_value, wanted))
    >>> [g.nimber for g in built] == wanted
    True
    >>> all(g.nimber == k for k, g in enumerate(_nimbers))
    True
    """
    if not 0 <= k <= NIMBER_CAP:
        raise ValueBoundError('nimber %d is above the table cap of %d'
                              % (k, NIMBER_CAP))
    if k < len(_nimbers):
        return _nimbers[k]
    with _nimbers_lock:
        while len(_nimbers) <= k:
            options = tuple(_nimbers)
            _nimbers.append(_intern(options, options))
    return _nimbers[k]


STAR = nimber_value(1)


def leq(g, h):
    """
    g <= h: Left, moving second in g - h, never loses.

    >>> leq(ZERO, STAR), leq(STAR, ZERO)
    (False, False)
    >>> leq(add(number(-1), STAR), ZERO)
    True
    >>> leq(ZERO, number(1))
    True
    """
    if g is h:
        return True
    return _leq(g, h)


@lru_cache(maxsize=None)
def _leq(g, h):
    if g.number is not None and h.number is not None:
        return g.number <= h.number
    return _leq_forms(g, h)


def _le(g, h):
    if isinstance(g, CanonicalGame) and isinstance(h, CanonicalGame):
        return leq(g, h)
    return _leq_forms(g, h)


def _leq_forms(g, h):
    return (not any(_le(h, gl) for gl in g.left) and
            not any(_le(hr, g) for hr in h.right))


def _undominated(options, worse):
    return tuple(o for o in options
                 if not any(o is not other and worse(o, other)
                            for other in options))


def _bypass_left(left, form):
    result = []
    changed = False
    for gl in left:
        reverse = next((glr for glr in gl.right if _le(glr, form)), None)
        if reverse is None:
            result.append(gl)
        else:
            result.extend(reverse.left)
            changed = True
    return result if changed else None


def _bypass_right(right, form):
    result = []
    changed = False
    for gr in right:
        reverse = next((grl for grl in gr.left if _le(form, grl)), None)
        if reverse is None:
            result.append(gr)
        else:
            result.extend(reverse.right)
            changed = True
    return result if changed else None


def make_game(left=(), right=()):
    """
    The canonical form of {left | right}, for canonical options.

    >>> make_game()
    0
    >>> make_game([ZERO], [ZERO])
    *
    >>> make_game([STAR], [STAR])
    0
    >>> make_game([ZERO], [number(2)])
    1
    >>> make_game([ZERO, STAR], [ZERO])
    {0,*|0}
    """
    return _make_game(_sorted_options(left), _sorted_options(right))


@lru_cache(maxsize=None)
def _make_game(left, right):
    while True:
        left = _undominated(left, leq)
        right = _undominated(right, lambda a, b: leq(b, a))
        form = _Form(left, right)
        new_left = _bypass_left(left, form)
        new_right = _bypass_right(right, form)
        if new_left is None and new_right is None:
            return _intern(left, right)
        if new_left is not None:
            left = _sorted_options(new_left)
        if new_right is not None:
            right = _sorted_options(new_right)


def add(g, h):
    """
    The disjunctive sum.

    >>> add(number('1/2'), STAR)
    1/2*
    >>> add(nimber_value(2), nimber_value(3))
    *
    """
    if id(g) > id(h):
        g, h = h, g
    return _add(g, h)


@lru_cache(maxsize=None)
def _add(g, h):
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    if g.number is not None and h.number is not None:
        return number(g.number + h.number)
    # Adding a number to a non-number only translates the other game.
    if g.number is not None:
        return make_game([add(g, hl) for hl in h.left],
                         [add(g, hr) for hr in h.right])
    if h.number is not None:
        return make_game([add(gl, h) for gl in g.left],
                         [add(gr, h) for gr in g.right])
    return make_game([add(gl, h) for gl in g.left] +
                     [add(g, hl) for hl in h.left],
                     [add(gr, h) for gr in g.right] +
                     [add(g, hr) for hr in h.right])


@lru_cache(maxsize=None)
def negate(g):
    """
    >>> negate(ZERO), negate(STAR), negate(make_game([number(1)], [number(-1)]))
    (0, *, {1|-1})
    >>> negate(make_game([ZERO], [STAR]))
    {*|0}
    """
    if g.number is not None:
        return number(-g.number)
    return _intern([negate(gr) for gr in g.right],
                   [negate(gl) for gl in g.left])


def outcome_of_value(g):
    """
    >>> [str(outcome_of_value(g)) for g in (ZERO, STAR, number(1), number(-2))]
    ['P', 'N', 'L', 'R']
    """
    return OutcomeClass.from_wins(left_first=not leq(g, ZERO),
                                  right_first=not leq(ZERO, g))


def star_multiple(n, offset=0):
    """
    n copies of * plus a number.

    >>> star_multiple(2), star_multiple(3), star_multiple(1, -1)
    (0, *, -1*)
    """
    assert isinstance(n, int) and n >= 0
    base = number(offset)
    return add(base, STAR) if n % 2 else base


def value_form(g):
    """
    >>> [value_form(g) for g in (number(3), STAR, number(2) + STAR,
    ...                          make_game([number(1)], [number(-1)]))]
    ['number', 'nimber', 'number+star', 'other']
    """
    if g.number is not None:
        return 'number'
    if g.nimber is not None:
        return 'nimber'
    if len(g.left) == 1 and g.left == g.right and g.left[0].is_number:
        return 'number+star'
    return 'other'


@lru_cache(maxsize=None)
def games_born_by(day):
    """
    Every canonical game born on or before the given day.

    >>> games_born_by(1)
    (-1, 0, 1, *)
    """
    if day == 0:
        return (ZERO,)
    if day > 2:
        raise ValueBoundError('games born by day %d are too many to list'
                              % (day,))
    previous = games_born_by(day - 1)
    games = (make_game(left, right)
             for left, right in product(powerset(previous), repeat=2))
    return _sorted_options(games)


def format_value(g):
    """
    >>> format_value(make_game([ZERO], [ZERO]))
    '*'
    >>> format_value(number('-5/4'))
    '-5/4'
    >>> format_value(make_game([ZERO], [STAR]))
    '{0|*}'
    """
    return g.text


class _ValueParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ValueSyntaxError(message, self.text, self.pos)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos:self.pos + 1]

    def expect(self, char):
        if self.peek() != char:
            self.error('expected %r' % (char,))
        self.pos += 1

    def digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self):
        value = self.value()
        if self.peek():
            self.error('unexpected text')
        return value

    def value(self):
        char = self.peek()
        if char == '{':
            return self.brace()
        if char == '*':
            self.pos += 1
            start = self.pos
            digits = self.digits()
            if not digits:
                return STAR
            self.pos = start
            if digits == '1' or digits.startswith('0'):
                self.error('non-canonical nimber *%s' % (digits,))
            if int(digits) > NIMBER_CAP:
                self.error('nimber above the table cap of %d' % (NIMBER_CAP,))
            self.pos += len(digits)
            return nimber_value(int(digits))
        if char == '-' or char.isdigit():
            value = number(self.number())
            if self.peek() == '*':
                self.pos += 1
                if self.text[self.pos:self.pos + 1].isdigit():
                    self.error('a number plus a nimber needs brace form')
                value = add(value, STAR)
            return value
        self.error('expected a value')

    def number(self):
        negative = self.text[self.pos] == '-'
        if negative:
            self.pos += 1
        numerator = self.digits()
        if not numerator:
            self.error('expected digits')
        denominator = '1'
        if self.text[self.pos:self.pos + 1] == '/':
            self.pos += 1
            denominator = self.digits()
            if not denominator:
                self.error('expected a denominator')
        denominator = int(denominator)
        if denominator == 0 or denominator & (denominator - 1):
            self.error('denominator must be a power of two')
        value = Fraction(int(numerator), denominator)
        return Dyadic.from_fraction(-value if negative else value)

    def brace(self):
        self.expect('{')
        left = self.options('|')
        self.expect('|')
        right = self.options('}')
        self.expect('}')
        return make_game(left, right)

    def options(self, stop):
        if self.peek() == stop:
            return []
        options = [self.value()]
        while self.peek() == ',':
            self.pos += 1
            options.append(self.value())
        return options


def parse_value(text):
    """
    >>> parse_value('-1*') is add(number(-1), STAR)
    True
    >>> parse_value(' { 1 | -1 } ')
    {1|-1}
    >>> parse_value('{0|')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: expected a value at position 3 of '{0|'
    >>> parse_value('3/5')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: denominator must be a power of two at position 3 of '3/5'

    Each value has one spelling:

    >>> parse_value('*0')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: non-canonical nimber *0 at position 1 of '*0'
    >>> parse_value('*1')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: non-canonical nimber *1 at position 1 of '*1'
    >>> parse_value('{0|*03}')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: non-canonical nimber *03 at position 4 of '{0|*03}'
    >>> parse_value('*99999')
    Traceback (most recent call last):
      ...
    values.ValueSyntaxError: nimber above the table cap of 1024 at position 1 of '*99999'
    >>> parse_value('*'), parse_value('*12') is nimber_value(12)
    (*, True)
    """
    return _ValueParser(text).parse()
