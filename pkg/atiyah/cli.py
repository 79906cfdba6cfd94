# Copyright 2026 The atiyah developers
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Command-line interface.

JSON goes to standard output, the summary and diagnostics to standard error.

Exit codes:

* 0: success
* 2: invalid input (malformed or missing files, violated preconditions)
* 3: an enumeration cap was exceeded
* 4: a configuration search found nothing

Examples:

.. code-block:: bash

    $ atiyah points curve.json
    $ atiyah sections curve.json --r 2 --m 3 --table
    $ atiyah code curve.json --r 2 --m 2 --points points.json --distance
    $ atiyah search curve.json --mode mds2 --r 2 --m 2 --n 3 --verify

"""
import argparse
import json
import logging
import sys

from atiyah.bundle import extreme_family_dimension, h0_h1, pole_table, section_basis
from atiyah.code import EvalConfig, code_build, verify_mds2, verify_theorem9
from atiyah.config import options
from atiyah.exceptions import AtiyahInputError, ConfigNotFound, ResourceCapError
from atiyah.modes import MDS2, SearchMode
from atiyah.package_info import __version__
from atiyah.search import ConfigQuery, search
from atiyah.serialization import generator
from atiyah.serialization.json import AtiyahEncoder, encode_point, load_curve, load_points

__all__ = ['main', 'make_parser']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_NOT_FOUND = 4


def _read_json(path):
    with open(path) as fp:
        return json.load(fp)


def _emit(obj, out):
    out.write(json.dumps(obj, cls=AtiyahEncoder, indent=2))
    out.write('\n')


def cmd_points(args, out):
    curve = load_curve(_read_json(args.curve))
    points = curve.points()
    logger.info("%s has %d rational points", curve, len(points))
    _emit(dict(count=len(points),
               structure={str(k): v for k, v in curve.group_structure().items()},
               points=[encode_point(curve.spec, P) for P in points]), out)


def cmd_sections(args, out):
    curve = load_curve(_read_json(args.curve))
    basis = section_basis(curve, args.r, args.m)
    h0, h1 = h0_h1(curve, args.r, args.m)
    result = dict(r=args.r, m=args.m, h0=h0, h1=h1, basis=basis)
    if args.table:
        table = pole_table(curve, args.r, args.m, method=args.method)
        result['pole_table'] = table
        result['extreme_family_dimension'] = extreme_family_dimension(basis)
        logger.info("pole table of I_%d(%dO) (%s method):\n%s",
                    args.r, args.m, table.method, table.to_text())
    logger.info("H^0(I_%d(%dO)) has dimension %d", args.r, args.m, h0)
    _emit(result, out)


def cmd_code(args, out):
    curve = load_curve(_read_json(args.curve))
    points = load_points(curve, _read_json(args.points))
    cfg = EvalConfig.from_points(curve, args.r, args.m, points)
    code = code_build(cfg)
    result = dict(ell=code.ell, k=code.k)
    if args.distance:
        d, index, section = code.weight_distribution_min()
        result.update(d=d, defect=code.ell + 1 - code.k - d, witness_section=section)
        logger.info("[%d, %d, %d] code, Singleton defect %d",
                    code.ell, code.k, d, result['defect'])
    else:
        logger.info("[%d, %d] code", code.ell, code.k)
    if args.export:
        with open(args.export, 'w') as fp:
            generator.dump(code, fp)
        logger.info("generator matrix written to %s", args.export)
    _emit(result, out)


def cmd_search(args, out):
    curve = load_curve(_read_json(args.curve))
    query = ConfigQuery(curve, args.r, args.m, args.n, args.mode)
    found = search(query, depth=args.depth)
    result = dict(result=found)
    logger.info("found a %s configuration via the %s path after %d candidates",
                found.mode.value, found.path, found.explored)
    if args.verify:
        verify = verify_mds2 if found.mode is MDS2 else verify_theorem9
        report = verify(found.config)
        result['report'] = report
        logger.info("verification %s: computed %s, predicted %s",
                    'passed' if report['passed'] else 'FAILED',
                    report['computed'], report['predicted'])
    _emit(result, out)


def make_parser():
    """The argument parser of the ``atiyah`` command."""
    parser = argparse.ArgumentParser(
        prog='atiyah',
        description="Atiyah bundles on elliptic curves over finite fields and "
                    "their evaluation codes.")
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="log debug messages to standard error")
    parser.add_argument('--cap', type=int, default=None,
                        help="enumeration cap, overrides ATIYAH_ENUMERATION_CAP")
    parser.add_argument('--jobs', type=int, default=None,
                        help="worker threads for partitioned enumerations")
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    points = sub.add_parser('points', help="enumerate the rational points")
    points.add_argument('curve', help="curve-spec JSON file")
    points.set_defaults(func=cmd_points)

    sections = sub.add_parser('sections', help="basis of the global sections")
    sections.add_argument('curve', help="curve-spec JSON file")
    sections.add_argument('--r', type=int, required=True, help="rank")
    sections.add_argument('--m', type=int, required=True, help="twist")
    sections.add_argument('--table', action='store_true', help="include the pole table")
    sections.add_argument('--method', choices=['rank', 'exhaustive'], default='rank',
                          help="pole table method")
    sections.set_defaults(func=cmd_sections)

    code = sub.add_parser('code', help="evaluation code of a configuration")
    code.add_argument('curve', help="curve-spec JSON file")
    code.add_argument('--r', type=int, required=True, help="rank")
    code.add_argument('--m', type=int, required=True, help="twist")
    code.add_argument('--points', required=True, help="points JSON file")
    code.add_argument('--distance', action='store_true',
                      help="compute the minimum distance by enumeration")
    code.add_argument('--export', default=None, help="write the generator matrix here")
    code.set_defaults(func=cmd_code)

    srch = sub.add_parser('search', help="search for a configuration")
    srch.add_argument('curve', help="curve-spec JSON file")
    srch.add_argument('--mode', choices=[mode.value for mode in SearchMode],
                      default='theorem9', help="search mode")
    srch.add_argument('--r', type=int, required=True, help="rank")
    srch.add_argument('--m', type=int, required=True, help="twist")
    srch.add_argument('--n', type=int, required=True, help="number of points")
    srch.add_argument('--depth', type=int, default=None, help="search depth cap")
    srch.add_argument('--verify', action='store_true',
                      help="embed the verification report of the found configuration")
    srch.set_defaults(func=cmd_search)

    return parser


def _configure_logging(verbose):
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)
    if not verbose:
        logger.setLevel(logging.INFO)


def main(argv=None, out=None):
    """Run the ``atiyah`` command.

    Args:
        argv (list[str], optional):
            Arguments, defaults to ``sys.argv[1:]``.

        out (file, optional):
            Stream receiving the JSON output, defaults to standard output.

    Returns:
        int: the exit code.

    """
    args = make_parser().parse_args(argv)
    _configure_logging(args.verbose)
    out = sys.stdout if out is None else out

    overrides = {}
    if args.cap is not None:
        overrides['enumeration_cap'] = args.cap
    if args.jobs is not None:
        overrides['jobs'] = args.jobs

    try:
        with options(**overrides):
            args.func(args, out)
    except ConfigNotFound as err:
        logger.error("%s", err)
        _emit(dict(error=type(err).__name__, message=str(err),
                   certificate=err.certificate()), out)
        return EXIT_NOT_FOUND
    except ResourceCapError as err:
        logger.error("%s: %s", type(err).__name__, err)
        return EXIT_CAP
    except (AtiyahInputError, ValueError, OSError) as err:
        logger.error("%s: %s", type(err).__name__, err)
        return EXIT_INPUT
    return EXIT_OK
