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
Shapes of rooted trees in which every vertex has at most two children, and
the order of the children does not matter.

A shape is the sorted tuple of its children's shapes, so a leaf is ().

>>> [len(rooted_shapes(n)) for n in range(1, 8)]
[1, 1, 2, 3, 6, 11, 23]
>>> [len(forked_shapes(n)) for n in range(3, 8)]
[1, 1, 3, 5, 12]
>>> format_shape(((), ((),)))
'(()(()))'
"""

from functools import lru_cache
from itertools import combinations_with_replacement, product

from myopic_col import ColPosition, U


@lru_cache(maxsize=None)
def rooted_shapes(n):
    """
    Every shape with exactly n vertices, in sorted order.

    >>> rooted_shapes(3)
    (((), ()), (((),),))
    """
    assert n >= 1
    if n == 1:
        return ((),)
    shapes = [(child,) for child in rooted_shapes(n - 1)]
    for smaller in range(1, (n - 1) // 2 + 1):
        larger = n - 1 - smaller
        if smaller == larger:
            pairs = combinations_with_replacement(rooted_shapes(smaller), 2)
        else:
            pairs = product(rooted_shapes(smaller), rooted_shapes(larger))
        shapes.extend(tuple(sorted(pair)) for pair in pairs)
    return tuple(sorted(shapes))


def forked_shapes(n):
    """
    Shapes with n vertices whose root has two children.
    """
    return tuple(shape for shape in rooted_shapes(n) if len(shape) == 2)


def shape_size(shape):
    return 1 + sum(shape_size(child) for child in shape)


def format_shape(shape):
    return '(' + ''.join(format_shape(child) for child in shape) + ')'


def shape_to_position(shape, colors=None):
    """
    Numbers the vertices in preorder, with arcs from parent to child.

    >>> shape_to_position(((), ((),)))
    ColPosition(colors=(<Color.UNCOLORED: 'uncolored'>, <Color.UNCOLORED: 'uncolored'>, <Color.UNCOLORED: 'uncolored'>, <Color.UNCOLORED: 'uncolored'>), arcs=((0, 1), (0, 2), (2, 3)))
    """
    order, arcs = [], []
    stack = [(shape, None)]
    while stack:
        node, parent = stack.pop()
        if parent is not None:
            arcs.append((parent, len(order)))
        index = len(order)
        order.append(node)
        stack.extend((child, index) for child in reversed(node))
    if colors is None:
        colors = [U] * len(order)
    assert len(colors) == len(order)
    return ColPosition(colors, arcs)
