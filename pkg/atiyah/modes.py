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

"""
Enumeration of the configuration-search modes.

Examples:

    >>> from atiyah import as_mode, SearchMode
    >>> as_mode('theorem9') is SearchMode.THEOREM9
    True
    >>> as_mode('MDS2') is SearchMode.MDS2
    True

"""
import enum
import typing

__all__ = ['as_mode', 'SearchMode', 'THEOREM9', 'MDS2']


class SearchMode(enum.Enum):
    """An :py:class:`~enum.Enum` over the configuration-search modes.

    Attributes:
        THEOREM9 (:class:`.SearchMode`): points whose first m + r - 1 entries
            sum to the identity, with the partial sums of the last r - 1 of
            them placed in the tail.
        MDS2 (:class:`.SearchMode`): rank-2 configurations built from a point
            p_m with p_{m-1} = [2]p_m.

    """
    THEOREM9 = 'theorem9'
    MDS2 = 'mds2'


THEOREM9 = SearchMode.THEOREM9
MDS2 = SearchMode.MDS2


ModeLike = typing.Union[SearchMode, str]


def _mode_miss(mode):
    return TypeError("expected input mode to be one of: SearchMode.THEOREM9, "
                     "'theorem9', SearchMode.MDS2 or 'mds2'; received {!r}.".format(mode))


def as_mode(mode: ModeLike) -> SearchMode:
    """Cast various inputs to a valid search mode.

    Args:
        mode (:class:`.SearchMode`/str):
            Search mode. Strings are matched case-insensitively against both
            names and values.

    Returns:
        :class:`.SearchMode`

    See also:
        :func:`~atiyah.decorators.mode_argument`

    """
    if isinstance(mode, SearchMode):
        return mode
    if isinstance(mode, str):
        try:
            return SearchMode(mode.lower())
        except ValueError:
            raise _mode_miss(mode) from None
    raise _mode_miss(mode)
