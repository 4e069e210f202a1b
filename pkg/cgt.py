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
Command line front end.

    cgt <solve|value|moves|verify|conjecture> <ruleset|suite> [position|file]

Exit codes: 0 ok, 1 a theorem check failed, 2 usage or parse error, 3 the
memo table hit its cap, 4 the graph has the wrong shape.

>>> main(['solve', 'nim', '3,5,7'])
N (grundy 1, closed-form)
0
>>> main(['solve', 'greedy', '2,2'])
P (closed-form)
0
>>> main(['solve', 'tower', '1,1,5', '--force-oracle'])
N (grundy 5, oracle)
0
>>> main(['solve', 'antonim', '{1,2,3,4}'])
P (oracle)
note: no closed form for Antonim with 4 piles
0
>>> main(['value', 'col-path', 'U,U,B'])
-1* (R)
0
>>> main(['value', 'col-path', 'B,R,U,U,B', '--force-oracle'])
-1* (R)
0
>>> main(['moves', 'nim', '1,2'])
(1,1)
0
>>> main(['moves', 'tower', '1,1,5'])
(1,1)
0
>>> main(['moves', 'col-path', 'U', '--player', 'blue'])
color vertex 0
0
>>> main(['moves', 'col-path', 'U', '--player', 'red', '--format', 'json'])
{"ruleset": "col-path", "position": "U", "moves": ["color vertex 0"], "player": "red"}
0
>>> main(['moves', 'rotisserie', '1,4', '--all'])
(4)
0
>>> main(['solve', 'nim', '3,x'])
2
>>> main(['verify', 'star-lemma', '--denominator-max', '8'])
star-lemma: pass (65 positions)
0
>>> main(['conjecture', '--max-vertices', '3'])
(()()): holds, value *
no tree has a value outside number, number+* and nimber
0
>>> main(['conjecture', '--max-vertices', '2'])
2
>>> main(['conjecture', '--max-vertices', '0'])
2
"""

import argparse
import json
import logging
import os
import sys
from collections import namedtuple, OrderedDict

from blessings import Terminal
from path import Path

from engine import DEFAULT_MEMO_CAP, GameEngine, ResourceLimitError
from myopic_col import (col_decompose_paths, is_union_of_paths, ColPosition,
                        ShapeError)
from outcome import OutcomeClass, Player
from rulesets import (AntonimPosition, GreedyNimPosition, NimPosition,
                      RotisseriePosition, TowerNimPosition,
                      antonim_outcome_closed, greedy_outcome_closed,
                      nim_grundy_closed, rotisserie_outcome_closed,
                      tower_nimber_closed, tower_outcome_closed,
                      CORRECTED, LITERAL, NoClosedFormError, ONE_BASED,
                      ZERO_BASED)
from values import nimber_value, outcome_of_value
from verify import check_tree_conjecture, run_suite, SUITES

logger = logging.getLogger(__name__)

MEMO_CAP_VARIABLE = 'CGT_MEMO_CAP'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_SHAPE = 4

POSITION_PARSERS = OrderedDict([
    ('nim', NimPosition.parse),
    ('antonim', AntonimPosition.parse),
    ('tower', TowerNimPosition.parse),
    ('rotisserie', RotisseriePosition.parse),
    ('greedy', GreedyNimPosition.parse),
    ('col-path', ColPosition.path),
    ('col-graph', None),
])

# Only these show their Grundy value when solved.
SHOWS_GRUNDY = (NimPosition, TowerNimPosition)

PLAYERS = {'blue': Player.LEFT, 'red': Player.RIGHT}
PLAYER_NAMES = {player: name for name, player in PLAYERS.items()}

BOUND_FLAGS = ('max_heaps', 'max_heap_size', 'min_heap_size', 'max_vertices',
               'magnitude_max', 'denominator_max')


CliConfig = namedtuple('CliConfig',
                       'ruleset input output_format bounds memo_cap '
                       'force_oracle player show_all paths_formula '
                       'adjnim_indexing tower_parity output progress')


def config_from_args(args):
    """
    >>> args = parser.parse_args(['solve', 'nim', '1,2', '--memo-cap', '9'])
    >>> config = config_from_args(args)
    >>> config.ruleset, config.input, config.memo_cap, config.output_format
    ('nim', '1,2', 9, 'text')
    """
    memo_cap = args.memo_cap
    if memo_cap is None:
        memo_cap = int(os.environ.get(MEMO_CAP_VARIABLE, DEFAULT_MEMO_CAP))
    bounds = OrderedDict((flag, getattr(args, flag, None))
                         for flag in BOUND_FLAGS)
    return CliConfig(ruleset=getattr(args, 'ruleset', None),
                     input=getattr(args, 'position', None),
                     output_format=args.format,
                     bounds=bounds,
                     memo_cap=memo_cap,
                     force_oracle=getattr(args, 'force_oracle', False),
                     player=PLAYERS.get(getattr(args, 'player', None)),
                     show_all=getattr(args, 'all', False),
                     paths_formula=getattr(args, 'paths_formula', False),
                     adjnim_indexing=getattr(args, 'adjnim_indexing',
                                             ONE_BASED),
                     tower_parity=getattr(args, 'tower_parity', CORRECTED),
                     output=getattr(args, 'output', None),
                     progress=getattr(args, 'progress', False))


def read_position(config):
    if config.ruleset == 'col-graph':
        with Path(config.input).open('rt', encoding='UTF-8') as graph:
            return ColPosition.from_json(json.load(graph))
    return POSITION_PARSERS[config.ruleset](config.input)


def emit(config, document, text):
    if config.output_format == 'json':
        print(json.dumps(document))
    else:
        print(text)


def closed_solution(position, config):
    """
    (outcome, grundy value or None) from a closed form, or None when no
    closed form covers the position.
    """
    if isinstance(position, NimPosition):
        grundy = nim_grundy_closed(position)
        return OutcomeClass.impartial(grundy != 0), grundy
    if isinstance(position, AntonimPosition):
        return antonim_outcome_closed(position), None
    if isinstance(position, TowerNimPosition):
        return (tower_outcome_closed(position),
                tower_nimber_closed(position, config.tower_parity))
    if isinstance(position, RotisseriePosition):
        outcome = rotisserie_outcome_closed(position, config.adjnim_indexing)
        return None if outcome is None else (outcome, None)
    if isinstance(position, GreedyNimPosition):
        return greedy_outcome_closed(position), None
    if is_union_of_paths(position):
        _, path_value = col_decompose_paths(position)
        return outcome_of_value(path_value), None
    return None


def solve(config, engine):
    position = read_position(config)
    note = None
    solution = None
    if not config.force_oracle:
        try:
            solution = closed_solution(position, config)
        except NoClosedFormError as error:
            note = str(error)
    method = 'closed-form'
    if solution is None:
        method = 'oracle'
        if position.impartial:
            grundy = engine.grundy_value(position)
            solution = OutcomeClass.impartial(grundy != 0), grundy
        else:
            solution = engine.outcome_partizan(position), None
    outcome, grundy = solution
    if not isinstance(position, SHOWS_GRUNDY):
        grundy = None

    document = OrderedDict([('ruleset', config.ruleset),
                            ('position', str(position)),
                            ('outcome', str(outcome))])
    if grundy is not None:
        document['grundy'] = grundy
    document['method'] = method
    if note:
        document['note'] = note

    t = Terminal(stream=sys.stdout)
    if grundy is not None:
        text = '{t.bold}{outcome}{t.normal} (grundy {grundy}, {method})'
    else:
        text = '{t.bold}{outcome}{t.normal} ({method})'
    text = text.format_map(locals())
    if note:
        text += '\nnote: ' + note
    emit(config, document, text)
    return EXIT_OK


def value(config, engine):
    position = read_position(config)
    if config.paths_formula and (position.impartial
                                 or not is_union_of_paths(position)):
        raise ShapeError('--paths-formula needs a disjoint union of paths')
    if position.impartial:
        result, method = nimber_value(engine.grundy_value(position)), 'oracle'
    elif (config.paths_formula or config.ruleset == 'col-path') \
            and not config.force_oracle:
        (_, result), method = col_decompose_paths(position), 'closed-form'
    else:
        result, method = engine.canonical_value(position), 'oracle'
    outcome = outcome_of_value(result)
    document = OrderedDict([('ruleset', config.ruleset),
                            ('position', str(position)),
                            ('value', str(result)),
                            ('outcome', str(outcome)),
                            ('method', method)])
    t = Terminal(stream=sys.stdout)
    emit(config, document, '{t.bold}{result}{t.normal} ({outcome})'
         .format_map(locals()))
    return EXIT_OK


def moves(config, engine):
    position = read_position(config)
    if position.impartial:
        options = position.options() if config.show_all \
            else engine.winning_moves(position)
        listed = [str(option) for option in options]
    else:
        if config.player is None:
            raise ValueError('moves on a partizan position need --player')
        player = config.player
        vertices = [vertex for vertex in position.moves(player)
                    if config.show_all or not engine.wins_moving_first(
                        position.apply(vertex, player), player.opponent)]
        listed = ['color vertex %d' % (vertex,) for vertex in vertices]
    document = OrderedDict([('ruleset', config.ruleset),
                            ('position', str(position)),
                            ('moves', listed)])
    if config.player is not None:
        document['player'] = PLAYER_NAMES[config.player]
    text = '\n'.join(listed) if listed else 'no %s moves' % (
        'legal' if config.show_all else 'winning')
    emit(config, document, text)
    return EXIT_OK


def print_report(report, t):
    colour = {'pass': t.green, 'fail': t.red}.get(report.status, t.yellow)
    print('{check}: {status} ({count} positions)'.format(
        check=report.check, status=colour(report.status),
        count=report.positions_checked))
    for mismatch in report.mismatches:
        print('  {0.position}: closed-form {0.closed}, oracle {0.oracle}'
              .format(mismatch))
    for row in report.details:
        print('  ' + ', '.join('%s=%s' % item for item in row.items()))


def dump_reports(reports):
    return '\n'.join(report.dumps() for report in reports) + '\n'


def save_reports(config, reports):
    if config.output:
        Path(config.output).write_text(dump_reports(reports),
                                       encoding='UTF-8')
        logger.info('wrote %d reports to %s', len(reports), config.output)


def verify(config, engine):
    reports = run_suite(config.ruleset, engine=engine,
                        adjnim_indexing=config.adjnim_indexing,
                        tower_parity=config.tower_parity,
                        progress=config.progress, **config.bounds)
    save_reports(config, reports)
    if config.output_format == 'json':
        sys.stdout.write(dump_reports(reports))
    else:
        t = Terminal(stream=sys.stdout)
        for report in reports:
            print_report(report, t)
    return EXIT_FAILED if any(report.failed for report in reports) \
        else EXIT_OK


def conjecture(config, engine):
    v_max = config.bounds['max_vertices']
    report = check_tree_conjecture(7 if v_max is None else v_max, engine,
                                   config.progress)
    save_reports(config, [report])
    if config.output_format == 'json':
        sys.stdout.write(dump_reports([report]))
        return EXIT_OK
    t = Terminal(stream=sys.stdout)
    for row in report.details:
        if row['holds']:
            print('{tree}: {t.green}holds{t.normal}, value {lhs}'
                  .format(t=t, **row))
        else:
            print('{tree}: {t.red}counterexample{t.normal}, value {lhs}, '
                  'sum {rhs}'.format(t=t, **row))
    unusual = [row for row in report.details if row['form'] == 'other']
    if not unusual:
        print('no tree has a value outside number, number+* and nimber')
    for row in unusual:
        print('outside the known families: {tree} has value {lhs}'
              .format(**row))
    return EXIT_OK


def add_common_args(parser):
    parser.add_argument('--format', choices=('text', 'json'), default='text')
    parser.add_argument('--memo-cap', type=int, default=None)
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--log-file', type=Path, default=None)


def add_reading_args(parser):
    parser.add_argument('--adjnim-indexing', choices=(ONE_BASED, ZERO_BASED),
                        default=ONE_BASED)
    parser.add_argument('--tower-parity', choices=(CORRECTED, LITERAL),
                        default=CORRECTED)


def add_position_args(parser):
    parser.add_argument('ruleset', choices=tuple(POSITION_PARSERS))
    parser.add_argument('position',
                        help='position text, or a JSON file for col-graph')
    parser.add_argument('--force-oracle', action='store_true')
    add_reading_args(parser)
    add_common_args(parser)


def add_sweep_args(parser):
    for flag in BOUND_FLAGS:
        parser.add_argument('--' + flag.replace('_', '-'), type=int,
                            default=None)
    parser.add_argument('--output', type=Path, default=None)
    parser.add_argument('--progress', action='store_true')
    add_common_args(parser)


parser = argparse.ArgumentParser(prog='cgt')
subparsers = parser.add_subparsers(title='subcommands',
                                   description='valid subcommands')

solve_parser = subparsers.add_parser('solve')
add_position_args(solve_parser)
solve_parser.set_defaults(func=solve)

value_parser = subparsers.add_parser('value')
add_position_args(value_parser)
value_parser.add_argument('--paths-formula', action='store_true')
value_parser.set_defaults(func=value)

moves_parser = subparsers.add_parser('moves')
add_position_args(moves_parser)
moves_parser.add_argument('--player', choices=tuple(PLAYERS))
moves_parser.add_argument('--all', action='store_true')
moves_parser.set_defaults(func=moves)

verify_parser = subparsers.add_parser('verify')
verify_parser.add_argument('ruleset', metavar='suite', choices=tuple(SUITES))
add_reading_args(verify_parser)
add_sweep_args(verify_parser)
verify_parser.set_defaults(func=verify)

conjecture_parser = subparsers.add_parser('conjecture')
add_sweep_args(conjecture_parser)
conjecture_parser.set_defaults(func=conjecture)

parser.set_defaults(func=None)


def main(argv=None):
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code
    if args.func is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        filename=str(args.log_file) if args.log_file else None)

    try:
        config = config_from_args(args)
        engine = GameEngine(memo_cap=config.memo_cap)
        return args.func(config, engine)
    except ResourceLimitError as error:
        print('cgt: %s' % (error,), file=sys.stderr)
        return EXIT_RESOURCE
    except ShapeError as error:
        print('cgt: %s' % (error,), file=sys.stderr)
        return EXIT_SHAPE
    except (ValueError, OverflowError, OSError) as error:
        print('cgt: %s' % (error,), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
