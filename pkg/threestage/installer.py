# -*- coding: utf-8 -*-

# Copyright threestage developers
# Distributed under the terms of the GNU General Public License

# --------------------------------------------------------------------
# threestage is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# threestage is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with threestage.  If not, see <http://www.gnu.org/licenses/>.
# --------------------------------------------------------------------

"""

**Provides**

* :class:`Module`
* :data:`REQUIRED_DEPENDENCIES`

"""

from dataclasses import dataclass
from importlib.metadata import PackageNotFoundError, version as dist_version
from typing import Union

from packaging import version


@dataclass
class Module:
    """Module checker"""

    name: str
    description: str
    required_version: version.Version  # The minimum version that is required

    @property
    def version(self) -> Union[version.Version, bool]:
        """Currently installed version number, False if not installed"""

        try:
            return version.parse(dist_version(self.name))
        except PackageNotFoundError:
            return False

    def is_installed(self) -> bool:
        """True if the module is installed"""

        return bool(self.version)


# Required dependencies
# ---------------------

# Required dependencies are checked by the cli


REQUIRED_DEPENDENCIES = [
    Module(name="numpy",
           description="State vectors, unitaries and random streams",
           required_version=version.parse("1.17")),
    Module(name="scipy",
           description="Independence test of Eve's contingency table",
           required_version=version.parse("1.5")),
    Module(name="packaging",
           description="Version parsing for this dependency check",
           required_version=version.parse("20.0")),
]
