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

"""Searches for evaluation points satisfying group-law conditions.

Two modes are supported, see :class:`~atiyah.modes.SearchMode`.

``theorem9``
    p_1 + ... + p_{m+r-1} = O and every suffix sum p_j + ... + p_{m+r-1},
    j = m..m+r-2, is one of p_{m+r}, ..., p_n. The first m+r-2 points are
    enumerated as ordered tuples, p_{m+r-1} is solved for, the required suffix
    sums are placed at the head of the tail and the tail is completed with
    the smallest unused points.

``mds2``
    r = 2, p_{m-1} = [2]p_m and p_1 + ... + p_{m-2} = -[4]p_m. Points p_m of
    order 4 are tried first, for which the sum condition reads
    p_1 + ... + p_{m-2} = O; then every other p_m of order at least 3.

Candidates are explored in the order of :meth:`~atiyah.curve.Curve.points`,
so the result of a query is deterministic. A search that finds nothing raises
:exc:`~atiyah.exceptions.ConfigNotFound`, which records how many candidates
were explored and whether the space was exhausted.

Examples:
    >>> from atiyah import field_make, curve_make, ConfigQuery, find_mds2
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 2)
    >>> find_mds2(ConfigQuery(E, 2, 2, 3, 'mds2')).points
    (CurvePoint(4, 0), CurvePoint(1, 2), CurvePoint(1, 3))

"""
import dataclasses
import itertools
import logging
import typing

from atiyah.code import EvalConfig, check_mds2_conditions, check_theorem9_conditions
from atiyah.config import resolve
from atiyah.curve import Curve
from atiyah.exceptions import ConfigNotFound, HypothesisViolated
from atiyah.modes import MDS2, THEOREM9, SearchMode, as_mode

__all__ = ['ConfigQuery', 'SearchResult', 'search', 'find_config', 'find_mds2',
           'check_theorem9_conditions', 'check_mds2_conditions',
           ]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ConfigQuery:
    """A configuration query.

    Attributes:
        curve (:class:`~atiyah.curve.Curve`): the curve.
        r (int): the rank.
        m (int): the twist.
        n (int): the number of evaluation points.
        mode (:class:`~atiyah.modes.SearchMode`): the search mode; strings
            are accepted and cast with :func:`~atiyah.modes.as_mode`.

    """
    curve: Curve
    r: int
    m: int
    n: int
    mode: SearchMode = THEOREM9

    def __post_init__(self):
        object.__setattr__(self, 'mode', as_mode(self.mode))

    def check(self):
        """Raise :exc:`.HypothesisViolated` if the query is outside its mode."""
        r, m, n = self.r, self.m, self.n
        if r < 1 or m < 1 or n < 1:
            raise HypothesisViolated("r, m and n must be positive, received "
                                     "r = {}, m = {}, n = {}".format(r, m, n))
        if self.mode is THEOREM9:
            if n < m + 2 * r - 2:
                raise HypothesisViolated("theorem9 mode needs n >= m + 2r - 2 = {}, "
                                         "received n = {}".format(m + 2 * r - 2, n))
        elif r != 2 or m < 2 or n < m:
            raise HypothesisViolated("mds2 mode needs r = 2, m >= 2 and n >= m, received "
                                     "r = {}, m = {}, n = {}".format(r, m, n))

    def to_serializable(self):
        return dict(type='ConfigQuery',
                    curve=self.curve.to_serializable(),
                    r=self.r, m=self.m, n=self.n,
                    mode=self.mode.value)


@dataclasses.dataclass(frozen=True)
class SearchResult:
    """A found configuration with the way it was found.

    Attributes:
        config (:class:`~atiyah.code.EvalConfig`): the configuration.
        mode (:class:`~atiyah.modes.SearchMode`): the search mode.
        path (str): ``'prefix'`` for theorem9 searches, ``'order4'`` or
            ``'general'`` for mds2 searches.
        explored (int): number of candidate tuples explored.
        conditions (dict): the conditions re-evaluated on the result.

    """
    config: EvalConfig
    mode: SearchMode
    path: str
    explored: int
    conditions: typing.Dict[str, bool]

    def to_serializable(self):
        return dict(type='SearchResult',
                    config=self.config.to_serializable(),
                    mode=self.mode.value,
                    path=self.path,
                    explored=self.explored,
                    conditions=dict(self.conditions))


class _Budget:
    def __init__(self, depth):
        self.depth = depth
        self.explored = 0
        # a candidate was turned away
        self.refused = False

    def spend(self):
        if self.explored >= self.depth:
            self.refused = True
            return False
        self.explored += 1
        return True


def _fill(affine, used, count):
    tail = [P for P in affine if P not in used][:count]
    return tail if len(tail) == count else None


def _theorem9_candidates(query, affine, budget):
    E, r, m, n = query.curve, query.r, query.m, query.n
    L = m + r - 1
    for prefix in itertools.permutations(affine, L - 1):
        if not budget.spend():
            return
        last = E.neg(E.sum(prefix))
        if last.is_infinity or last in prefix:
            continue
        head = prefix + (last,)
        used = set(head)

        sums = []
        for j in range(m, L):
            S = E.sum(head[j - 1:])
            if S not in sums:
                sums.append(S)
        if any(S.is_infinity or S in used for S in sums) or len(sums) > n - L:
            continue

        used.update(sums)
        rest = _fill(affine, used, n - L - len(sums))
        if rest is None:
            continue
        yield head + tuple(sums) + tuple(rest)


def _prefix_summing_to(E, pool, size, target, budget):
    # unordered tuples of `size` distinct points of `pool` with the given sum
    if size == 0:
        if budget.spend() and target.is_infinity:
            yield ()
        return
    for free in itertools.combinations(pool, size - 1):
        if not budget.spend():
            return
        last = E.sub(target, E.sum(free))
        if last.is_infinity or last in free or last not in pool:
            continue
        if free and last < free[-1]:
            # each set once, with the solved point largest
            continue
        yield free + (last,)


def _mds2_candidates(query, affine, budget, order4):
    E, m, n = query.curve, query.m, query.n
    for pm in affine:
        order = E.point_order(pm)
        if order4 != (order == 4) or order < 3:
            continue
        pm1 = E.mul(2, pm)
        target = E.neg(E.mul(4, pm))
        pool = [P for P in affine if P != pm and P != pm1]
        for head in _prefix_summing_to(E, pool, m - 2, target, budget):
            used = set(head) | {pm, pm1}
            rest = _fill(affine, used, n - m)
            if rest is None:
                continue
            yield head + (pm1, pm) + tuple(rest)
        if budget.refused:
            return


def search(query, depth=None):
    """Run a configuration search.

    Args:
        query (:class:`.ConfigQuery`):
            The query.

        depth (int, optional):
            Overrides the ``search_depth`` option, the maximum number of
            candidate tuples explored.

    Returns:
        :class:`.SearchResult`

    Raises:
        :exc:`.HypothesisViolated`: if the query is outside its mode.
        :exc:`.ConfigNotFound`: if no configuration is found.
        :exc:`.FieldTooLarge`: if the points cannot be enumerated.

    """
    query.check()
    depth = resolve('search_depth', depth)
    E = query.curve
    affine = E.affine_points()
    budget = _Budget(depth)

    if query.mode is THEOREM9:
        paths = [('prefix', lambda: _theorem9_candidates(query, affine, budget))]
        checker = check_theorem9_conditions
    else:
        paths = [('order4', lambda: _mds2_candidates(query, affine, budget, True)),
                 ('general', lambda: _mds2_candidates(query, affine, budget, False))]
        checker = check_mds2_conditions

    description = "{} query r={}, m={}, n={} on {}".format(
        query.mode.value, query.r, query.m, query.n, E)
    if query.n > len(affine):
        raise ConfigNotFound("no {}: the curve has only {} affine points".format(
            description, len(affine)), depth=0, cap=depth, exhaustive=True)

    for path, candidates in paths:
        for points in candidates():
            cfg = EvalConfig(E, query.r, query.m, points)
            conditions = checker(cfg)
            if not all(conditions.values()):
                raise AssertionError("search produced a config failing "
                                     "{}".format(conditions))  # pragma: no cover
            logger.info("found %s via %s after %d candidates", description, path,
                        budget.explored)
            return SearchResult(cfg, query.mode, path, budget.explored, conditions)

    exhaustive = not budget.refused
    logger.info("no %s after %d candidates (%s)", description, budget.explored,
                'exhaustive' if exhaustive else 'depth cap reached')
    raise ConfigNotFound("no {}".format(description),
                         depth=budget.explored, cap=depth, exhaustive=exhaustive)


def find_config(query, depth=None):
    """The first configuration satisfying the query's conditions.

    Args:
        query (:class:`.ConfigQuery`):
            The query, of either mode.

        depth (int, optional):
            Overrides the ``search_depth`` option.

    Returns:
        :class:`~atiyah.code.EvalConfig`

    Raises:
        :exc:`.HypothesisViolated`: if n < m + 2r - 2 in theorem9 mode.
        :exc:`.ConfigNotFound`: if no configuration is found.

    Examples:
        >>> from atiyah import field_make, curve_make, ConfigQuery, find_config
        >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
        >>> cfg = find_config(ConfigQuery(E, 2, 2, 6))
        >>> E.sum(cfg.points[:3])
        INFINITY

    """
    return search(query, depth).config


def find_mds2(query, depth=None):
    """The first rank-2 configuration of the MDS recipe.

    The query's mode is ignored; it is searched in ``mds2`` mode.

    Raises:
        :exc:`.HypothesisViolated`: if r != 2, m < 2 or n < m.
        :exc:`.ConfigNotFound`: if no configuration is found.

    """
    if query.mode is not MDS2:
        query = dataclasses.replace(query, mode=MDS2)
    return search(query, depth).config
