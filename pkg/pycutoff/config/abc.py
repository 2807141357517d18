# -*- coding: utf-8 -*-
#
#
# pycutoff software framework for exact and asymptotic character ratios
# of the symmetric group and the mixing behaviour of conjugacy class
# random walks on S_n.
#
# Copyright (C) the pycutoff contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>
""" Abstract base class for configurations
"""

__author__ = "pycutoff contributors"
__status__ = "Development"


class AbstractConfig:
    """Abstract base class for configurations. Subclasses list their tunable fields with defaults in `_defaults`
    and implement `_validate`."""

    _defaults = {}

    def __init__(self, name: str = "default", path: str = None, description: str = "A configuration.", **kwargs):

        unknown = set(kwargs) - set(self._defaults)
        if unknown:
            raise ValueError(f"Unknown fields {sorted(unknown)} for {self.__class__.__name__}. Known fields are "
                             f"{sorted(self._defaults)}.")

        self.name = name
        self.path = path
        self.description = description
        self._values = {key: kwargs.get(key, default) for key, default in self._defaults.items()}
        self._validate()

    def __getattr__(self, item):
        try:
            return self.__dict__["_values"][item]
        except KeyError:
            raise AttributeError(f"{self.__class__.__name__} has no field '{item}'.")

    def __getitem__(self, item):
        return self._values[item]

    def __eq__(self, other):
        return type(self) is type(other) and self._values == other._values

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self.name}'>"

    @classmethod
    def from_yaml(cls, path):
        """Load a configuration from YAML. After loading, checks whether the resulting configuration is actually an
        instance of the class this method was called from.

        Parameters
        ----------
        path
            (str) path to the YAML configuration of the form `path.to.config_file.ConfigName` or
            path/to/config_file/ConfigName.

        Returns
        -------
        AbstractConfig
        """
        from pycutoff.config import from_yaml
        cfg = from_yaml(path)

        if isinstance(cfg, cls):
            return cfg
        raise TypeError(f"The configuration associated with '{path}' is not of type {cls}.")

    def to_yaml(self, path: str, **kwargs) -> None:
        from pycutoff.config.yaml import dump_to_yaml
        dump_to_yaml(self, path, **kwargs)

    def update_template(self, name: str = None, path: str = None, description: str = None, **kwargs):
        """Returns a new instance of the configuration class with the given fields replaced."""
        values = dict(self._values)
        values.update(kwargs)
        return self.__class__(name=name or self.name, path=path or self.path,
                              description=description or self.description, **values)

    def to_dict(self) -> dict:
        return dict(self._values)

    def _validate(self):
        raise NotImplementedError
