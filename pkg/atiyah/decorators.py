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

import inspect

from functools import wraps

from atiyah.config import get_option
from atiyah.exceptions import RankOrTwistTooLarge, RankTooSmall
from atiyah.modes import as_mode

__all__ = ['mode_argument', 'rank_twist_argument']


def _bind(f, argspec, args, kwargs):
    # bound actual f arguments (including defaults) to f argument names
    bound_args = inspect.getcallargs(f, *args, **kwargs)

    # `getcallargs` doesn't merge additional positional/keyword arguments
    final_args = list(bound_args.pop(argspec.varargs, ()))
    final_kwargs = bound_args.pop(argspec.varkw, {})
    final_kwargs.update(bound_args)
    return final_args, final_kwargs


def mode_argument(*arg_names):
    """Ensures the wrapped function receives valid search-mode arguments.

    Args:
        *arg_names (list[str], optional, default=['mode']):
            The names of the constrained arguments in function decorated.

    Returns:
        Function decorator.

    Examples:
        >>> from atiyah.decorators import mode_argument
        >>> @mode_argument('mode')
        ... def f(mode):
        ...     return mode
        ...
        >>> f('mds2')
        <SearchMode.MDS2: 'mds2'>

    See also:
        :func:`~atiyah.as_mode`

    """
    if not arg_names:
        arg_names = ['mode']

    def _mode_arg(f):
        argspec = inspect.getfullargspec(f)

        @wraps(f)
        def new_f(*args, **kwargs):
            final_args, final_kwargs = _bind(f, argspec, args, kwargs)
            for name in arg_names:
                try:
                    mode = final_kwargs[name]
                except KeyError:
                    raise TypeError('mode argument missing')
                final_kwargs[name] = as_mode(mode)

            return f(*final_args, **final_kwargs)

        return new_f

    return _mode_arg


def rank_twist_argument(min_rank=1, rank='r', twist='m'):
    """Checks the rank and twist arguments of the wrapped function.

    The rank must lie in ``[min_rank, max_rank]`` and the absolute twist
    must not exceed ``max_twist``, with both caps read from
    :mod:`atiyah.config` at call time.

    Args:
        min_rank (int, optional, default=1):
            Smallest rank accepted, :exc:`.RankTooSmall` below it.

        rank (str, optional, default='r'):
            Name of the rank argument.

        twist (str, optional, default='m'):
            Name of the twist argument, or None if the function has none.

    Returns:
        Function decorator.

    """
    def _rank_twist_arg(f):
        argspec = inspect.getfullargspec(f)

        @wraps(f)
        def new_f(*args, **kwargs):
            final_args, final_kwargs = _bind(f, argspec, args, kwargs)

            r = final_kwargs[rank]
            if r < min_rank:
                raise RankTooSmall("rank must be at least {}, received {}".format(min_rank, r))
            if r > get_option('max_rank'):
                raise RankOrTwistTooLarge("rank {} exceeds the cap {}".format(
                    r, get_option('max_rank')))
            if twist is not None:
                m = final_kwargs[twist]
                if abs(m) > get_option('max_twist'):
                    raise RankOrTwistTooLarge("twist {} exceeds the cap {}".format(
                        m, get_option('max_twist')))

            return f(*final_args, **final_kwargs)

        return new_f

    return _rank_twist_arg
