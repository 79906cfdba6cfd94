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

"""Exceptions raised by atiyah.

The errors fall in three families, each mapped to one exit code of the
command-line interface:

* :class:`AtiyahInputError`: invalid input (exit code 2).
* :class:`ResourceCapError`: a configured enumeration cap was exceeded (exit
  code 3).
* :class:`ConfigNotFound`: a search exhausted its space (exit code 4).

"""

__all__ = [
    'AtiyahError',
    'AtiyahInputError',
    'NonPrime',
    'ReducibleModulus',
    'FieldMismatch',
    'DivisionByZero',
    'SingularCurve',
    'PointNotOnCurve',
    'ZeroFunction',
    'PoleAtPoint',
    'PrecisionTooLow',
    'NotPrincipal',
    'RankTooSmall',
    'ShapeMismatch',
    'PointAtQ',
    'DuplicatePoints',
    'HypothesisViolated',
    'CurveSpecError',
    'ResourceCapError',
    'FieldTooLarge',
    'SpaceTooLarge',
    'RankOrTwistTooLarge',
    'ConfigNotFound',
    'DBalancedAssumptionWarning',
    ]


class AtiyahError(Exception):
    """Base class for all errors raised by atiyah."""


class AtiyahInputError(AtiyahError, ValueError):
    """Raised when an input violates a precondition."""


class NonPrime(AtiyahInputError):
    """Raised when the characteristic of a field is not prime."""


class ReducibleModulus(AtiyahInputError):
    """Raised when an extension modulus is not a monic irreducible polynomial."""


class FieldMismatch(AtiyahInputError):
    """Raised when combining elements or objects over different fields."""


class DivisionByZero(AtiyahInputError, ZeroDivisionError):
    """Raised when inverting zero, in a field or in a function field."""


class SingularCurve(AtiyahInputError):
    """Raised when Weierstrass coefficients give a zero discriminant."""


class PointNotOnCurve(AtiyahInputError):
    """Raised when a point does not satisfy the curve equation."""


class ZeroFunction(AtiyahInputError):
    """Raised when a valuation or divisor of the zero function is requested."""


class PoleAtPoint(AtiyahInputError):
    """Raised when evaluating a function at one of its poles."""


class PrecisionTooLow(AtiyahInputError):
    """Raised when a Laurent expansion is requested below its leading exponent."""


class NotPrincipal(AtiyahInputError):
    """Raised when a divisor is not the divisor of a rational function."""


class RankTooSmall(AtiyahInputError):
    """Raised when a rank is below the minimum an operation accepts."""


class ShapeMismatch(AtiyahInputError):
    """Raised when matrix blocks do not fit together."""


class PointAtQ(AtiyahInputError):
    """Raised when an evaluation point is the point at infinity."""


class DuplicatePoints(AtiyahInputError):
    """Raised when evaluation points are not pairwise distinct."""


class HypothesisViolated(AtiyahInputError):
    """Raised when a query does not satisfy the hypothesis of its search mode."""


class CurveSpecError(AtiyahInputError):
    """Raised when a curve-spec, points or generator-matrix document is malformed.

    Args:
        location (str):
            Path of the offending entry, for example ``'a[3]'``.
        message (str):
            Description of the problem.

    """
    def __init__(self, location, message):
        self.location = location
        super().__init__('{}: {}'.format(location, message))


class ResourceCapError(AtiyahError, ValueError):
    """Raised when an operation would exceed a configured cap."""


class FieldTooLarge(ResourceCapError):
    """Raised when q exceeds the configured field cap."""


class SpaceTooLarge(ResourceCapError):
    """Raised when an exhaustive enumeration exceeds the enumeration cap."""


class RankOrTwistTooLarge(ResourceCapError):
    """Raised when the rank or the twist exceeds its cap."""


class ConfigNotFound(AtiyahError, LookupError):
    """Raised when a configuration search exhausts its search space.

    The exception doubles as the certificate of the failed search.

    Args:
        message (str):
            Description of the query.
        depth (int):
            Number of candidate tuples explored.
        cap (int):
            The search depth cap in force.
        exhaustive (bool):
            True if the whole search space was explored, so no configuration
            exists. False if the search stopped at the cap.

    """
    def __init__(self, message, depth, cap, exhaustive):
        self.depth = depth
        self.cap = cap
        self.exhaustive = exhaustive
        super().__init__(message)

    def certificate(self):
        """The search certificate as a serializable dict."""
        return dict(depth=self.depth, cap=self.cap, exhaustive=self.exhaustive)


class DBalancedAssumptionWarning(UserWarning):
    """Issued when a report relies on the D-balanced hypothesis without checking it."""
