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

# version is used by package_info below so we need it before everything
__version__ = '0.1.0'

from atiyah.exceptions import *
import atiyah.exceptions

from atiyah.config import set_options, get_option, options

from atiyah.modes import *

import atiyah.decorators

from atiyah.field import *

from atiyah.polynomials import *

from atiyah.curve import *

from atiyah.laurent import *

from atiyah.functions import *

import atiyah.linalg

from atiyah.bundle import *

from atiyah.code import *

from atiyah.search import *

import atiyah.generators

import atiyah.testing

from atiyah.package_info import __version__, __author__, __authoremail__, __description__
