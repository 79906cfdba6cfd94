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

"""Global options shared by every enumeration in atiyah.

All exhaustive computations (field and point enumeration, section scans,
codeword weights, configuration searches) are capped. The caps live in one
options dict. The defaults can be set from the environment and overridden
either globally, with :func:`set_options`, or per call through the ``cap``,
``depth`` and ``jobs`` keyword arguments of the capped operations.

Examples:
    >>> from atiyah.config import get_option, options
    >>> with options(enumeration_cap=100):
    ...     get_option('enumeration_cap')
    100

"""
import contextlib
import os

__all__ = ['set_options', 'get_option', 'options', 'resolve']


def _env_int(name, default):
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError("environment variable {} must be an integer, "
                         "received {!r}".format(name, value)) from None


_options = {
    'enumeration_cap': _env_int('ATIYAH_ENUMERATION_CAP', 2 * 10**6),
    'field_cap': _env_int('ATIYAH_FIELD_CAP', 2**20),
    'search_depth': _env_int('ATIYAH_SEARCH_DEPTH', 10**6),
    'max_rank': 8,
    'max_twist': 16,
    'jobs': _env_int('ATIYAH_JOBS', 1),
}


def set_options(**kwargs):
    """Set options globally.

    Args:
        enumeration_cap (int, optional, default=2000000):
            Maximum number of states any exhaustive enumeration visits. Read
            from ``ATIYAH_ENUMERATION_CAP`` at import.

        field_cap (int, optional, default=2**20):
            Maximum field size q. Read from ``ATIYAH_FIELD_CAP`` at import.

        search_depth (int, optional, default=1000000):
            Maximum number of candidate tuples a configuration search
            explores. Read from ``ATIYAH_SEARCH_DEPTH`` at import.

        max_rank (int, optional, default=8):
            Maximum rank r of a bundle.

        max_twist (int, optional, default=16):
            Maximum absolute twist m.

        jobs (int, optional, default=1):
            Number of worker threads used by partitioned enumerations. Read
            from ``ATIYAH_JOBS`` at import.

    Note:
        All arguments must be provided as keyword arguments.

    """
    unknown = set(kwargs).difference(_options)
    if unknown:
        raise ValueError("unknown option(s): {}".format(sorted(unknown)))
    for name, value in kwargs.items():
        if not isinstance(value, int) or value < 1:
            raise ValueError("option {!r} must be a positive integer, "
                             "received {!r}".format(name, value))
    _options.update(kwargs)


def get_option(name):
    """Return the current value of the option `name`."""
    return _options[name]


@contextlib.contextmanager
def options(**kwargs):
    """Context manager that sets options and restores them on exit."""
    saved = dict(_options)
    set_options(**kwargs)
    try:
        yield
    finally:
        _options.clear()
        _options.update(saved)


def resolve(name, override=None):
    """Return `override` if given, else the global value of option `name`."""
    if override is None:
        return _options[name]
    if override < 1:
        raise ValueError("{} must be a positive integer, received {!r}".format(name, override))
    return int(override)
