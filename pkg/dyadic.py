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
Exact dyadic rationals: numbers of the form numerator / 2**exponent.

>>> Dyadic(6, 2)
Dyadic(3, 1)
>>> str(Dyadic(-5, 2))
'-5/4'
>>> Dyadic.parse('1/2') + Dyadic.parse('1/2')
Dyadic(1, 0)
>>> Dyadic.parse('-3/4') < 0
True
"""

import re
from fractions import Fraction
from functools import total_ordering

MAX_EXPONENT = 62
MIN_NUMERATOR = -2 ** 63
MAX_NUMERATOR = 2 ** 63 - 1

_NUMBER = re.compile(r'^(-?\d+)(?:/(\d+))?$')


@total_ordering
class Dyadic:
    """
    A dyadic rational in lowest terms (odd numerator or exponent 0).

    >>> Dyadic(0, 5)
    Dyadic(0, 0)
    >>> Dyadic(1, 63)
    Traceback (most recent call last):
      ...
    OverflowError: dyadic exponent 63 exceeds 62
    >>> Dyadic(2 ** 63)
    Traceback (most recent call last):
      ...
    OverflowError: dyadic numerator 9223372036854775808 does not fit 64 bits
    """

    __slots__ = ('numerator', 'exponent')

    def __init__(self, numerator=0, exponent=0):
        assert isinstance(numerator, int) and isinstance(exponent, int)
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        while exponent > 0 and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        if exponent > MAX_EXPONENT:
            raise OverflowError('dyadic exponent %d exceeds %d'
                                % (exponent, MAX_EXPONENT))
        if not MIN_NUMERATOR <= numerator <= MAX_NUMERATOR:
            raise OverflowError('dyadic numerator %d does not fit 64 bits'
                                % (numerator,))
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def from_fraction(cls, value):
        """
        >>> Dyadic.from_fraction(Fraction(3, 8))
        Dyadic(3, 3)
        >>> Dyadic.from_fraction(Fraction(1, 3))
        Traceback (most recent call last):
          ...
        ValueError: 1/3 is not a dyadic rational
        """
        value = Fraction(value)
        denominator = value.denominator
        if denominator & (denominator - 1):
            raise ValueError('%s is not a dyadic rational' % (value,))
        return cls(value.numerator, denominator.bit_length() - 1)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls.from_fraction(value)

    @classmethod
    def parse(cls, text):
        """
        >>> Dyadic.parse('-7/8')
        Dyadic(-7, 3)
        >>> Dyadic.parse('2/6')
        Traceback (most recent call last):
          ...
        ValueError: 1/3 is not a dyadic rational
        """
        match = _NUMBER.match(text.strip())
        if match is None:
            raise ValueError('not a number: %r' % (text,))
        numerator, denominator = match.groups()
        return cls.from_fraction(Fraction(int(numerator),
                                          int(denominator or 1)))

    def as_fraction(self):
        return Fraction(self.numerator, 2 ** self.exponent)

    @property
    def is_integer(self):
        return self.exponent == 0

    def ulp(self):
        """
        The step between this number and its neighbours in its own
        denominator; the canonical options of a non-integer are one step
        either side.

        >>> Dyadic(3, 2).ulp()
        Dyadic(1, 2)
        """
        return Dyadic(1, self.exponent)

    def __add__(self, other):
        other = Dyadic.coerce(other)
        return Dyadic.from_fraction(self.as_fraction() + other.as_fraction())

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other):
        return Dyadic.coerce(other) - self

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __abs__(self):
        return Dyadic(abs(self.numerator), self.exponent)

    def __eq__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.numerator, self.exponent) == \
            (other.numerator, other.exponent)

    def __lt__(self, other):
        return self.as_fraction() < Dyadic.coerce(other).as_fraction()

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self):
        return 'Dyadic(%d, %d)' % (self.numerator, self.exponent)

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return '%d/%d' % (self.numerator, 2 ** self.exponent)


def dyadics_between(magnitude_max, denominator_max):
    """
    Every dyadic with |value| <= magnitude_max whose denominator is at most
    denominator_max (a power of two), in increasing order.

    >>> [str(d) for d in dyadics_between(1, 2)]
    ['-1', '-1/2', '0', '1/2', '1']
    >>> len(dyadics_between(4, 8))
    65
    """
    d = Dyadic.from_fraction(Fraction(1, denominator_max))
    steps = magnitude_max * denominator_max
    return [Dyadic(k, d.exponent) for k in range(-steps, steps + 1)]
