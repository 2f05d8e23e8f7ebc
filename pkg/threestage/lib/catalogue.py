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

 * :class:`Catalogue`: Read-only name mapping with attribute access

"""

from types import MappingProxyType
from typing import Any, Iterator, Mapping


class Catalogue(Mapping):
    """Read-only mapping of names to values with attribute access

    Used for named collections such as the standard encoding pairs, where
    both ``catalogue["hadamard"]`` and ``catalogue.hadamard`` are natural.

    """

    def __init__(self, *args, **kwargs):
        super().__setattr__("_items", MappingProxyType(dict(*args, **kwargs)))

    def __getitem__(self, key: str) -> Any:
        return self._items[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __getattr__(self, name: str) -> Any:
        if name.startswith("_"):
            raise AttributeError(name)
        try:
            return self._items[name]
        except KeyError:
            known = ", ".join(self._items)
            raise AttributeError(f"{name!r} not in catalogue ({known})")

    def __setattr__(self, name: str, value: Any):
        raise AttributeError("Catalogue is read-only")

    def __repr__(self) -> str:
        return f"Catalogue({dict(self._items)!r})"

    def __reduce__(self):
        return Catalogue, (dict(self._items),)
