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
Type hints for common atiyah inputs.
"""

from typing import Optional, Sequence, Tuple, Union

import numpy as np

from atiyah.curve import CurvePoint
from atiyah.field import FieldElement
from atiyah.modes import ModeLike

__all__ = ['ElementLike',
           'ModeLike',
           'PointLike',
           'RandomStateLike',
           ]


ElementLike = Union[int, Sequence[int], FieldElement]  # int code or coefficients
PointLike = Union[CurvePoint, Tuple[ElementLike, ElementLike]]
RandomStateLike = Optional[Union[np.random.RandomState, int]]
