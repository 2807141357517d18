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
"""Configuration loading. Configurations are YAML entries that name a `base`, which is either a known configuration
class or another configuration that is loaded recursively and updated with the entries of the derived one.
"""

from pycutoff.config.configs import CapsConfig, AsymptoticConfig, WalkConfig, default_workers
from pycutoff.config.file import complete_config_path

__author__ = "pycutoff contributors"
__status__ = "Development"

DEFAULT_CAPS = "config_templates.defaults.Caps"
DEFAULT_ASYMPTOTICS = "config_templates.defaults.Asymptotics"
DEFAULT_WALK = "config_templates.defaults.Walk"
ACCEPTANCE_WALK = "config_templates.defaults.AcceptanceWalk"

known_config_classes = dict()

config_cache = dict()


def register_config_class(name, cls):
    """Register a configuration class under `name`, so that YAML entries can use it as their `base`."""

    if name in known_config_classes:
        raise UserWarning(f"Overwriting existing map from name `{name}` to configuration class `{cls}`.")

    known_config_classes[name] = cls


register_config_class("CapsConfig", CapsConfig)
register_config_class("AsymptoticConfig", AsymptoticConfig)
register_config_class("WalkConfig", WalkConfig)


def from_yaml(path):
    """Load a configuration from a YAML file. Configurations are cached by path.

    Parameters
    ----------
    path
        (str) path of the form `path.to.config_file.ConfigName` or path/to/config_file/ConfigName.
    """

    if path in config_cache:
        return config_cache[path]

    from pycutoff.config.yaml import dict_from_yaml
    config_dict = dict_from_yaml(path)

    try:
        base = config_dict.pop("base")
    except KeyError:
        raise KeyError(f"No 'base' defined for configuration {path}. Please define a base to derive the "
                       f"configuration from.")

    try:
        cls = known_config_classes[base]
    except KeyError:
        base = complete_config_path(base, path)
        config = from_yaml(base).update_template(**config_dict)
    else:
        config = cls(**config_dict)

    config_cache[path] = config
    return config


def clear_cache():
    config_cache.clear()


def caps(cfg=None) -> CapsConfig:
    """Resolve `cfg` (None, path or instance) into a CapsConfig."""
    return _resolve(cfg, CapsConfig, DEFAULT_CAPS)


def asymptotics(cfg=None) -> AsymptoticConfig:
    return _resolve(cfg, AsymptoticConfig, DEFAULT_ASYMPTOTICS)


def walk(cfg=None) -> WalkConfig:
    return _resolve(cfg, WalkConfig, DEFAULT_WALK)


def _resolve(cfg, cls, default_path):
    if cfg is None:
        cfg = default_path
    if isinstance(cfg, str):
        return cls.from_yaml(cfg)
    if not isinstance(cfg, cls):
        raise TypeError(f"Expected a {cls.__name__} or a path to one, received {type(cfg)}.")
    return cfg
