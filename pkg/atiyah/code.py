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

"""Rank-r evaluation codes of the Atiyah bundles I_r(mQ).

A codeword is the list of values

    (f_r(p_1), ..., f_1(p_1); ...; f_r(p_n), ..., f_1(p_n))

of a global section (f_r, ..., f_1) of I_r(mQ) at the evaluation points, so
the code has length r*n. Weights count nonzero coordinates.

Minimum distances and zero counts are computed by exhaustive enumeration of
the message space in lexicographic order, split in contiguous chunks that can
be processed by a thread pool. The reduction is deterministic: the first
message in enumeration order attaining the optimum wins.

Examples:
    >>> from atiyah import field_make, curve_make, EvalConfig, code_build, code_params
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
    >>> cfg = EvalConfig.from_points(E, 1, 1, E.affine_points()[:3])
    >>> code_params(code_build(cfg))
    (3, 1, 3)

"""
import concurrent.futures
import dataclasses
import logging
import typing
import warnings

import numpy as np

from atiyah.bundle import Section, is_section, section_basis
from atiyah.config import resolve
from atiyah.curve import INFINITY, Curve, CurvePoint, Divisor, is_principal
from atiyah.exceptions import (DBalancedAssumptionWarning, DuplicatePoints,
                               HypothesisViolated, PointAtQ, SpaceTooLarge)
from atiyah.functions import func_eval, miller_build
from atiyah.linalg import coefficient_vectors, rref
from atiyah.typing import PointLike

__all__ = ['EvalConfig', 'LinearCode',
           'code_build', 'min_distance_exact', 'zero_count_max',
           'code_params', 'singleton_defect',
           'verify_theorem9', 'verify_mds2', 'mds2_witness',
           'check_theorem9_conditions', 'check_mds2_conditions',
           ]

logger = logging.getLogger(__name__)

_CHUNK = 1 << 14


@dataclasses.dataclass(frozen=True)
class EvalConfig:
    """Evaluation data of a code: a curve, the rank, the twist and the points.

    Attributes:
        curve (:class:`~atiyah.curve.Curve`): the curve.
        r (int): the rank of the bundle.
        m (int): the twist.
        points (tuple[:class:`~atiyah.curve.CurvePoint`]): the evaluation
            points p_1, ..., p_n; pairwise distinct, affine and on the curve.

    Raises:
        :exc:`.PointAtQ`: if a point is O.
        :exc:`.DuplicatePoints`: if two points coincide.
        :exc:`.PointNotOnCurve`: if a point is not on the curve.

    """
    curve: Curve
    r: int
    m: int
    points: typing.Tuple[CurvePoint, ...]

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, 'points', points)
        if not points:
            raise ValueError("at least one evaluation point is required")
        for i, P in enumerate(points):
            self.curve.check_point(P)
            if P.is_infinity:
                raise PointAtQ("evaluation point {} is the point at infinity".format(i + 1))
        if len(set(points)) != len(points):
            raise DuplicatePoints("evaluation points must be pairwise distinct")

    @classmethod
    def from_points(cls, curve: Curve, r: int, m: int,
                    points: typing.Iterable[PointLike]) -> 'EvalConfig':
        """Build a config, reading points as CurvePoints or (x, y) pairs."""
        pts = []
        for P in points:
            if isinstance(P, CurvePoint):
                pts.append(P)
            else:
                pts.append(curve.point(*P))
        return cls(curve, int(r), int(m), tuple(pts))

    @property
    def n(self):
        return len(self.points)

    @property
    def ell(self):
        return self.r * self.n

    def divisor(self):
        """D = p_1 + ... + p_n."""
        return Divisor.from_points(self.points)

    def permute(self, order):
        """The same config with points reordered, p'_i = p_{order[i]}."""
        return EvalConfig(self.curve, self.r, self.m, tuple(self.points[i] for i in order))

    def to_serializable(self):
        from atiyah.serialization.json import encode_point
        return dict(type='EvalConfig',
                    curve=self.curve.to_serializable(),
                    r=self.r,
                    m=self.m,
                    points=[encode_point(self.curve.spec, P) for P in self.points])


class LinearCode:
    """A linear code with its generator matrix and evaluation data.

    Attributes:
        generator (:class:`numpy.ndarray`): k x (r*n) array of element codes,
            linearly independent rows.
        config (:class:`.EvalConfig`): the evaluation data.
        basis (:class:`~atiyah.bundle.SectionBasis`): the section basis.
        rows (list[int]): index into `basis` of the section of each row.

    """
    def __init__(self, generator, config, basis, rows):
        self.generator = np.asarray(generator, dtype=np.int64)
        self.config = config
        self.basis = basis
        self.rows = list(rows)

    def __repr__(self):
        return 'LinearCode(ell={}, k={})'.format(self.ell, self.k)

    @property
    def spec(self):
        return self.config.curve.spec

    @property
    def ell(self):
        return self.generator.shape[1]

    @property
    def k(self):
        return self.generator.shape[0]

    def section(self, message):
        """The section whose evaluation is the codeword of `message`."""
        vector = np.zeros(len(self.basis), dtype=np.int64)
        vector[self.rows] = np.asarray(message, dtype=np.int64)
        return self.basis.combination(vector)

    def codewords(self, start=0, stop=None):
        """Codewords of messages start..stop-1 in lexicographic order."""
        total = self.spec.q ** self.k
        stop = total if stop is None else min(stop, total)
        messages = coefficient_vectors(self.spec.q, self.k, start, stop)
        return self.spec.matmul(messages, self.generator)

    def message(self, index):
        """The message of lexicographic index `index`."""
        return coefficient_vectors(self.spec.q, self.k, index, index + 1)[0]

    def weight_distribution_min(self, cap=None, jobs=None):
        """(d, index, section) of the first minimum-weight codeword.

        Raises:
            :exc:`.SpaceTooLarge`: if q**k exceeds the cap.

        """
        zeros, index = _max_zeros(self.spec, self.generator, cap, jobs)
        return self.ell - zeros, index, self.section(self.message(index))

    def to_serializable(self):
        from atiyah.serialization.json import encode_element
        F = self.spec
        return dict(type='LinearCode',
                    config=self.config.to_serializable(),
                    generator=[[encode_element(F, int(c)) for c in row]
                               for row in self.generator])


def code_build(cfg):
    """Generator matrix of the evaluation code of a config.

    Row i evaluates the i-th basis section at all points, point-major, with
    the components in the order f_r, ..., f_1. When n <= m the evaluation
    map has a kernel; the rows are then reduced to an independent subset and
    a warning is logged.

    Returns:
        :class:`.LinearCode`

    """
    basis = section_basis(cfg.curve, cfg.r, cfg.m)
    values = basis.evaluate(cfg.points).reshape(len(basis), cfg.ell)

    _, rows = rref(cfg.curve.spec, values.T)
    if len(rows) < len(basis):
        logger.warning("evaluation at %d points has a kernel: keeping %d of %d sections",
                       cfg.n, len(rows), len(basis))
    return LinearCode(values[rows], cfg, basis, rows)


def _chunk_max_zeros(spec, matrix, start, stop):
    messages = coefficient_vectors(spec.q, matrix.shape[0], start, stop)
    zeros = (spec.matmul(messages, matrix) == 0).sum(axis=1)
    best = int(np.argmax(zeros))
    return int(zeros[best]), start + best


def _max_zeros(spec, matrix, cap=None, jobs=None):
    # maximum number of zero coordinates over the nonzero messages
    matrix = np.asarray(matrix, dtype=np.int64)
    k = matrix.shape[0]
    cap = resolve('enumeration_cap', cap)
    jobs = resolve('jobs', jobs)
    total = spec.q ** k
    if total > cap:
        raise SpaceTooLarge("q^k = {}^{} = {} exceeds the enumeration cap {}".format(
            spec.q, k, total, cap))
    if total <= 1:
        raise ValueError("the message space has no nonzero element")

    ranges = [(start, min(start + _CHUNK, total)) for start in range(1, total, _CHUNK)]
    logger.debug("scanning %d messages in %d chunks with %d worker(s)",
                 total - 1, len(ranges), jobs)
    if jobs > 1 and len(ranges) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda rg: _chunk_max_zeros(spec, matrix, *rg), ranges))
    else:
        results = [_chunk_max_zeros(spec, matrix, *rg) for rg in ranges]
    zeros, index = min(results, key=lambda res: (-res[0], res[1]))
    return zeros, index


def min_distance_exact(code, cap=None, jobs=None):
    """Minimum Hamming weight of the nonzero codewords, by enumeration.

    Args:
        code (:class:`.LinearCode`):
            The code.

        cap (int, optional):
            Overrides the ``enumeration_cap`` option; q**k must not exceed it.

        jobs (int, optional):
            Overrides the ``jobs`` option.

    Returns:
        int: the minimum distance; ell + 1 for the zero code.

    Raises:
        :exc:`.SpaceTooLarge`: if q**k exceeds the cap.

    """
    if code.k == 0:
        return code.ell + 1
    return code.ell - _max_zeros(code.spec, code.generator, cap, jobs)[0]


def zero_count_max(cfg, cap=None, jobs=None):
    """Maximum number of vanishing values f_j(p_i) over nonzero sections.

    The enumeration runs over all q**(r*m) sections of the basis,
    independently of the generator matrix.

    Raises:
        :exc:`.SpaceTooLarge`: if q**(r*m) exceeds the cap.

    """
    basis = section_basis(cfg.curve, cfg.r, cfg.m)
    values = basis.evaluate(cfg.points).reshape(len(basis), cfg.ell)
    return _max_zeros(cfg.curve.spec, values, cap, jobs)[0]


def code_params(code, cap=None, jobs=None):
    """(ell, k, d) of a code, d by exhaustive enumeration."""
    return code.ell, code.k, min_distance_exact(code, cap, jobs)


def singleton_defect(code, cap=None, jobs=None):
    """ell + 1 - k - d, zero exactly for MDS codes."""
    ell, k, d = code_params(code, cap, jobs)
    return ell + 1 - k - d


# conditions

def check_theorem9_conditions(cfg):
    """Evaluate the group-law conditions of the rank-r distance formula.

    Returns:
        dict: ``{'1': ..., '2': ..., '3': ...}`` with

        1. Q is the identity O (always true here),
        2. p_1 + ... + p_{m+r-1} = O,
        3. every suffix sum p_j + ... + p_{m+r-1}, j = m..m+r-2, is one of
           p_{m+r}, ..., p_n.

    """
    E, r, m, pts = cfg.curve, cfg.r, cfg.m, cfg.points
    L = m + r - 1
    if L > len(pts) or L < 1:
        return {'1': True, '2': False, '3': False}
    cond2 = E.sum(pts[:L]).is_infinity
    tail = set(pts[L:])
    cond3 = all(E.sum(pts[j - 1:L]) in tail for j in range(m, L))
    return {'1': True, '2': cond2, '3': cond3}


def _mds2_divisors(cfg):
    pts, m = cfg.points, cfg.m
    d1 = Divisor([(P, 1) for P in pts[:m - 2]] + [(pts[m - 2], 2), (INFINITY, -m)])
    d2 = Divisor([(P, 1) for P in pts[:m - 1]] + [(pts[m - 1], 2), (INFINITY, -(m + 1))])
    return d1, d2


def check_mds2_conditions(cfg):
    """Evaluate the conditions of the rank-2 MDS recipe.

    Returns:
        dict: ``{'0': ..., '1': ..., '2': ..., '3': ..., '4': ...}`` with

        0. Q is the identity O (always true here),
        1. p_1 + ... + p_{m-2} + 2p_{m-1} - mO is principal,
        2. p_1 + ... + p_{m-1} + 2p_m - (m+1)O is principal,
        3. p_{m-1} = [2]p_m,
        4. p_1 + ... + p_{m-2} + [2]p_{m-1} = p_1 + ... + p_{m-1} + [2]p_m = O.

    """
    E, m, pts = cfg.curve, cfg.m, cfg.points
    if cfg.r != 2 or m < 2 or len(pts) < m:
        return {str(i): i == 0 for i in range(5)}
    d1, d2 = _mds2_divisors(cfg)
    head = E.sum(pts[:m - 2])
    sum1 = E.add(head, E.mul(2, pts[m - 2]))
    sum2 = E.add(E.add(head, pts[m - 2]), E.mul(2, pts[m - 1]))
    return {'0': True,
            '1': is_principal(E, d1),
            '2': is_principal(E, d2),
            '3': pts[m - 2] == E.mul(2, pts[m - 1]),
            '4': sum1.is_infinity and sum2.is_infinity}


# reports

def _computed(cfg, cap, jobs):
    code = code_build(cfg)
    zeros, index = _max_zeros(code.spec, code.generator, cap, jobs)
    return code, code.ell - zeros, code.message(index)


def _counterexample(code, d, message):
    F = code.spec
    section = code.section(message)
    codeword = F.matmul(np.asarray(message, dtype=np.int64).reshape(1, -1), code.generator)[0]
    return dict(weight=d,
                message=[int(c) for c in message],
                zero_positions=[int(i) for i in np.flatnonzero(codeword == 0)],
                section=section.to_serializable())


def _warn_d_balanced():
    warnings.warn("the D-balanced hypothesis is assumed, not checked",
                  DBalancedAssumptionWarning, stacklevel=3)


def verify_theorem9(cfg, cap=None, jobs=None):
    """Compare the computed parameters of a config with the rank-r formulas.

    The printed formulas are k = r*m and d = r(n - m) - r(r - 1)/2. Both the
    group-law conditions and the exact parameters are recomputed. A config
    passes when every condition holds and the computed (k, d) equal the
    predicted ones; otherwise the first minimum-weight codeword is reported
    as a counterexample.

    Args:
        cfg (:class:`.EvalConfig`):
            The config.

        cap (int, optional):
            Overrides the ``enumeration_cap`` option.

        jobs (int, optional):
            Overrides the ``jobs`` option.

    Returns:
        dict: the report, with keys ``mode``, ``r``, ``m``, ``n``,
        ``conditions``, ``predicted``, ``computed``, ``zero_count_max``,
        ``d_balanced``, ``passed`` and ``counterexample``.

    Raises:
        :exc:`.HypothesisViolated`: if n < m + 2r - 2.
        :exc:`.SpaceTooLarge`: if q**(r*m) exceeds the cap.

    """
    r, m, n = cfg.r, cfg.m, cfg.n
    if n < m + 2 * r - 2:
        raise HypothesisViolated("the rank-{} formula needs n >= m + 2r - 2 = {}, "
                                 "received n = {}".format(r, m + 2 * r - 2, n))
    _warn_d_balanced()
    conditions = check_theorem9_conditions(cfg)
    predicted = dict(k=r * m, d=r * (n - m) - r * (r - 1) // 2)

    code, d, message = _computed(cfg, cap, jobs)
    computed = dict(ell=code.ell, k=code.k, d=d, defect=code.ell + 1 - code.k - d)
    zeros = zero_count_max(cfg, cap, jobs)

    passed = (all(conditions.values())
              and computed['k'] == predicted['k'] and computed['d'] == predicted['d'])
    report = dict(mode='theorem9', r=r, m=m, n=n,
                  conditions=conditions,
                  predicted=predicted,
                  computed=computed,
                  zero_count_max=zeros,
                  d_balanced='assumed',
                  passed=passed,
                  counterexample=None if passed else _counterexample(code, d, message))
    logger.info("rank-%d formula on n=%d, m=%d: predicted %s, computed %s",
                r, n, m, predicted, computed)
    return report


def mds2_witness(cfg):
    """The rank-2 section built from the divisors of the MDS recipe.

    f_1 and f_2 are the functions with divisors

        p_1 + ... + p_{m-2} + 2p_{m-1} - mO,
        p_1 + ... + p_{m-1} + 2p_m - (m+1)O,

    both with leading coefficient 1 at O, and the section is (f_2, -f_1), the
    sign making the principal parts of order -(m+1) cancel.

    Returns:
        dict: ``section`` (:class:`~atiyah.bundle.Section`), ``is_section``
        and the numbers of points of D where f_1 and f_2 vanish, with the
        expected values m - 1 and m.

    Raises:
        :exc:`.NotPrincipal`: if either divisor is not principal.

    """
    if cfg.r != 2:
        raise HypothesisViolated("the MDS recipe is stated for rank 2, received r = {}".format(cfg.r))
    if cfg.m < 2:
        raise HypothesisViolated("the MDS recipe needs m >= 2, received m = {}".format(cfg.m))
    E = cfg.curve
    d1, d2 = _mds2_divisors(cfg)
    f1 = miller_build(E, d1)
    f2 = miller_build(E, d2)
    section = Section([f2, -f1])
    zeros = [sum(1 for P in cfg.points if not func_eval(E, f, P)) for f in (f1, f2)]
    return dict(section=section,
                is_section=is_section(E, 2, cfg.m, section.comps),
                zeros_f1=zeros[0],
                zeros_f2=zeros[1],
                expected_zeros=dict(f1=cfg.m - 1, f2=cfg.m))


def verify_mds2(cfg, cap=None, jobs=None):
    """Check the rank-2 MDS recipe on a config.

    Returns:
        dict: the report, with keys ``mode``, ``r``, ``m``, ``n``,
        ``conditions``, ``witness``, ``predicted``, ``computed``, ``mds``,
        ``d_balanced``, ``passed`` and ``counterexample``.

    Raises:
        :exc:`.HypothesisViolated`: if r != 2 or m < 2.
        :exc:`.SpaceTooLarge`: if q**(2m) exceeds the cap.

    """
    if cfg.r != 2 or cfg.m < 2 or cfg.n < cfg.m:
        raise HypothesisViolated("the MDS recipe needs r = 2, m >= 2 and n >= m, received "
                                 "r = {}, m = {}, n = {}".format(cfg.r, cfg.m, cfg.n))
    _warn_d_balanced()
    conditions = check_mds2_conditions(cfg)
    witness = None
    if conditions['1'] and conditions['2']:
        w = mds2_witness(cfg)
        witness = dict(w, section=w['section'].to_serializable())

    code, d, message = _computed(cfg, cap, jobs)
    defect = code.ell + 1 - code.k - d
    mds = defect == 0
    passed = all(conditions.values()) and mds
    report = dict(mode='mds2', r=2, m=cfg.m, n=cfg.n,
                  conditions=conditions,
                  witness=witness,
                  predicted=dict(k=2 * cfg.m, d=2 * cfg.n - 2 * cfg.m + 1, defect=0),
                  computed=dict(ell=code.ell, k=code.k, d=d, defect=defect),
                  mds=mds,
                  d_balanced='assumed',
                  passed=passed,
                  counterexample=None if mds else _counterexample(code, d, message))
    logger.info("rank-2 MDS recipe on n=%d, m=%d: defect %d", cfg.n, cfg.m, defect)
    return report
