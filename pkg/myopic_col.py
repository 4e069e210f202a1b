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
Myopic Col: a partizan colouring game on a directed graph.

Blue (Left) and Red (Right) take turns colouring an uncoloured vertex with
their own colour. A player may not colour a vertex that has an outgoing arc
to a vertex already in that player's colour; incoming arcs are never looked
at, hence "myopic".

>>> p = ColPosition.path('U,U,B')
>>> str(p)
'U,U,B'
>>> col_moves(p, Player.LEFT), col_moves(p, Player.RIGHT)
([0], [0, 1])
>>> str(col_apply(p, 1, Player.RIGHT))
'U,R,B'
>>> col_decompose_paths(ColPosition.path('B,R,U,U,B'))
(PathColSummary(a=1, b=0, c=1), -1*)
"""

import json
import logging
from collections import namedtuple, OrderedDict
from enum import Enum

from more_itertools import pairwise

from outcome import Player
from rulesets import PositionSyntaxError
from engine import canonical_value
from values import add, star_multiple, STAR, ZERO

logger = logging.getLogger(__name__)


class IllegalMoveError(ValueError):
    pass


class ShapeError(ValueError):
    """
    The graph does not have the shape an operation needs (a union of paths,
    a rooted binary tree, ...).
    """


class Color(Enum):
    UNCOLORED = 'uncolored'
    BLUE = 'blue'
    RED = 'red'

    @property
    def letter(self):
        return self.value[0].upper()

    @classmethod
    def from_letter(cls, letter):
        for color in cls:
            if color.letter == letter:
                return color
        raise PositionSyntaxError('unknown colour letter: %r' % (letter,))

    @classmethod
    def of(cls, player):
        return cls.BLUE if player is Player.LEFT else cls.RED


U, B, R = Color.UNCOLORED, Color.BLUE, Color.RED


PathColSummary = namedtuple('PathColSummary', 'a b c')
ConjectureCheck = namedtuple('ConjectureCheck', 'holds lhs rhs')


class ColPosition(namedtuple('BaseColPosition', 'colors arcs')):
    """
    Vertices are 0..n-1; `colors[v]` is the colour of vertex v and `arcs` is
    a sorted tuple of (tail, head) pairs.

    >>> ColPosition.path('')
    ColPosition(colors=(), arcs=())
    >>> ColPosition((U, U), [(0, 0)])
    Traceback (most recent call last):
      ...
    rulesets.PositionSyntaxError: self-loop on vertex 0
    >>> ColPosition((U,), [(0, 1)])
    Traceback (most recent call last):
      ...
    rulesets.PositionSyntaxError: arc (0, 1) leaves the graph
    """

    __slots__ = ()
    ruleset = 'col'
    impartial = False

    def __new__(cls, colors=(), arcs=()):
        colors = tuple(colors)
        if not all(isinstance(color, Color) for color in colors):
            raise PositionSyntaxError('vertex colours must be Color values')
        normalized = set()
        for tail, head in arcs:
            if not (0 <= tail < len(colors) and 0 <= head < len(colors)):
                raise PositionSyntaxError('arc %r leaves the graph'
                                          % ((tail, head),))
            if tail == head:
                raise PositionSyntaxError('self-loop on vertex %d' % (tail,))
            if (tail, head) in normalized:
                raise PositionSyntaxError('duplicate arc %r'
                                          % ((tail, head),))
            normalized.add((tail, head))
        return super().__new__(cls, colors, tuple(sorted(normalized)))

    @classmethod
    def path(cls, text):
        """
        A directed path read from colour letters, arcs left to right.

        >>> ColPosition.path('U, R').arcs
        ((0, 1),)
        >>> ColPosition.path('U,X')
        Traceback (most recent call last):
          ...
        rulesets.PositionSyntaxError: unknown colour letter: 'X'
        """
        letters = [letter.strip().upper() for letter in text.split(',')]
        if letters == ['']:
            letters = []
        colors = [Color.from_letter(letter) for letter in letters]
        return cls(colors, pairwise(range(len(colors))))

    @classmethod
    def from_json(cls, obj):
        """
        >>> ColPosition.from_json({'vertices': [{'id': 1, 'color': 'red'},
        ...                                     {'id': 0, 'color': 'uncolored'}],
        ...                        'arcs': [[0, 1]]})
        ColPosition(colors=(<Color.UNCOLORED: 'uncolored'>, <Color.RED: 'red'>), arcs=((0, 1),))
        >>> ColPosition.from_json({'vertices': [{'id': 3, 'color': 'red'}],
        ...                        'arcs': []})
        Traceback (most recent call last):
          ...
        rulesets.PositionSyntaxError: vertex ids must be 0..0
        """
        try:
            vertices = sorted(obj['vertices'], key=lambda vertex: vertex['id'])
            if [vertex['id'] for vertex in vertices] != \
                    list(range(len(vertices))):
                raise PositionSyntaxError('vertex ids must be 0..%d'
                                          % (len(vertices) - 1,))
            colors = [Color(vertex['color']) for vertex in vertices]
            arcs = [(int(tail), int(head)) for tail, head in obj['arcs']]
        except (KeyError, TypeError, ValueError) as error:
            if isinstance(error, PositionSyntaxError):
                raise
            raise PositionSyntaxError('malformed graph document: %s'
                                      % (error,))
        return cls(colors, arcs)

    @classmethod
    def parse(cls, text):
        """
        Colour letters for a path, or a JSON graph document.
        """
        if text.lstrip().startswith('{'):
            try:
                obj = json.loads(text)
            except ValueError as error:
                raise PositionSyntaxError('malformed graph document: %s'
                                          % (error,))
            return cls.from_json(obj)
        return cls.path(text)

    def to_json(self):
        return OrderedDict([
            ('vertices', [OrderedDict([('id', vertex), ('color', color.value)])
                          for vertex, color in enumerate(self.colors)]),
            ('arcs', [[tail, head] for tail, head in self.arcs]),
        ])

    def is_path(self):
        """
        Whether this is a single path with arcs from each vertex to the next.
        """
        return self.arcs == tuple(pairwise(range(len(self.colors))))

    def __str__(self):
        """
        >>> str(ColPosition((U, B), [(1, 0)]))
        '{"vertices":[{"id":0,"color":"uncolored"},{"id":1,"color":"blue"}],"arcs":[[1,0]]}'
        """
        if self.is_path():
            return ','.join(color.letter for color in self.colors)
        return json.dumps(self.to_json(), separators=(',', ':'))

    def successors(self, vertex):
        return [head for tail, head in self.arcs if tail == vertex]

    def moves(self, player):
        """
        The vertices `player` may colour, in increasing order.
        """
        own = Color.of(player)
        blocked = {tail for tail, head in self.arcs if self.colors[head] is own}
        return [vertex for vertex, color in enumerate(self.colors)
                if color is U and vertex not in blocked]

    def apply(self, vertex, player):
        if vertex not in self.moves(player):
            raise IllegalMoveError('%s may not colour vertex %r of %s'
                                   % (player, vertex, self))
        colors = list(self.colors)
        colors[vertex] = Color.of(player)
        return ColPosition(colors, self.arcs)

    def options(self, player):
        return [self.apply(vertex, player) for vertex in self.moves(player)]

    def key(self):
        return (self.colors, self.arcs)

    def measure(self):
        return self.colors.count(U)


def col_moves(position, mover):
    """
    >>> col_moves(ColPosition.path('U'), Player.LEFT)
    [0]
    >>> col_moves(ColPosition.path('U,B'), Player.LEFT)
    []
    >>> col_moves(ColPosition.path('U,B'), Player.RIGHT)
    [0]
    >>> col_moves(ColPosition.path('U,U'), Player.RIGHT)
    [0, 1]
    """
    return position.moves(mover)


def col_apply(position, vertex, mover):
    """
    >>> col_apply(ColPosition.path('U,B'), 0, Player.LEFT)
    Traceback (most recent call last):
      ...
    myopic_col.IllegalMoveError: left may not colour vertex 0 of U,B
    """
    return position.apply(vertex, mover)


def col_path_value(n, end=None):
    """
    The value of a path of n uncoloured vertices, optionally followed by one
    coloured vertex.

    >>> col_path_value(1), col_path_value(2, B), col_path_value(3, R)
    (*, -1*, 1)
    >>> col_path_value(0, R)
    0
    """
    assert n >= 0 and end in (None, B, R)
    if end is None:
        return star_multiple(n)
    if n == 0:
        return ZERO
    return star_multiple(n - 1, -1 if end is B else 1)


def _degrees(position):
    size = len(position.colors)
    indegree, outdegree = [0] * size, [0] * size
    for tail, head in position.arcs:
        outdegree[tail] += 1
        indegree[head] += 1
    return indegree, outdegree


def is_union_of_paths(position):
    """
    >>> is_union_of_paths(ColPosition((U, U, U), [(2, 0), (0, 1)]))
    True
    >>> is_union_of_paths(ColPosition((U, U), [(0, 1), (1, 0)]))
    False
    """
    indegree, outdegree = _degrees(position)
    if max(indegree + outdegree, default=0) > 1:
        return False
    # Walk from every head; anything left over sits on a cycle.
    successor = dict(position.arcs)
    seen = 0
    for start, degree in enumerate(indegree):
        vertex = start if degree == 0 else None
        while vertex is not None:
            seen += 1
            vertex = successor.get(vertex)
    return seen == len(position.colors)


def col_decompose_paths(position):
    """
    Classifies every uncoloured vertex by where its outgoing arc leads and
    sums the pieces.

    >>> col_decompose_paths(ColPosition.path('U,U,U'))
    (PathColSummary(a=3, b=0, c=0), *)
    >>> col_decompose_paths(ColPosition.path('U,R'))
    (PathColSummary(a=0, b=1, c=0), 1)
    >>> col_decompose_paths(ColPosition((U, U), [(0, 1), (1, 0)]))
    Traceback (most recent call last):
      ...
    myopic_col.ShapeError: not a disjoint union of directed paths
    """
    if not is_union_of_paths(position):
        raise ShapeError('not a disjoint union of directed paths')
    successor = dict(position.arcs)
    counts = {U: 0, R: 0, B: 0}
    for vertex, color in enumerate(position.colors):
        if color is not U:
            continue
        head = successor.get(vertex)
        counts[U if head is None else position.colors[head]] += 1
    summary = PathColSummary(a=counts[U], b=counts[R], c=counts[B])
    return summary, star_multiple(summary.a, summary.b - summary.c)


def subtree(position, root):
    """
    The graph induced by the vertices reachable from `root`, renumbered in
    preorder.

    >>> str(subtree(ColPosition.path('U,B,R'), 1))
    'B,R'
    """
    order, stack = [], [root]
    while stack:
        vertex = stack.pop()
        if vertex in order:
            continue
        order.append(vertex)
        stack.extend(reversed(position.successors(vertex)))
    index = {vertex: i for i, vertex in enumerate(order)}
    return ColPosition([position.colors[vertex] for vertex in order],
                       [(index[tail], index[head])
                        for tail, head in position.arcs
                        if tail in index and head in index])


def tree_root(position):
    """
    The root of a rooted tree with arcs pointing away from it, with at most
    two children per vertex.
    """
    indegree, outdegree = _degrees(position)
    roots = [vertex for vertex, degree in enumerate(indegree) if degree == 0]
    if len(roots) != 1 or max(indegree, default=0) > 1 \
            or max(outdegree, default=0) > 2:
        raise ShapeError('not a rooted binary tree')
    if len(subtree(position, roots[0]).colors) != len(position.colors):
        raise ShapeError('not a rooted binary tree')
    return roots[0]


def col_tree_conjecture_check(position, engine=None):
    """
    Compares the value of an uncoloured binary tree whose root has two
    children with * plus the values of the two child subtrees.

    >>> from tree_shapes import shape_to_position
    >>> col_tree_conjecture_check(shape_to_position(((), ())))
    ConjectureCheck(holds=True, lhs=*, rhs=*)
    >>> check = col_tree_conjecture_check(shape_to_position((((),), ((),))))
    >>> check.holds == (check.lhs is check.rhs)
    True
    >>> col_tree_conjecture_check(ColPosition.path('U,U'))
    Traceback (most recent call last):
      ...
    myopic_col.ShapeError: the root must have exactly two children
    """
    if not position.colors or any(color is not U
                                  for color in position.colors):
        raise ShapeError('the tree must be nonempty and uncoloured')
    root = tree_root(position)
    children = position.successors(root)
    if len(children) != 2:
        raise ShapeError('the root must have exactly two children')
    lhs = canonical_value(position, engine)
    rhs = add(STAR, add(canonical_value(subtree(position, children[0]), engine),
                        canonical_value(subtree(position, children[1]), engine)))
    holds = lhs is rhs
    if not holds:
        logger.info('tree %s has value %s, not %s', position, lhs, rhs)
    return ConjectureCheck(holds=holds, lhs=lhs, rhs=rhs)
