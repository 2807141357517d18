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
"""Reading and writing of YAML configuration files.
"""
import os
from pathlib import Path

from ruamel.yaml import YAML

__author__ = "pycutoff contributors"
__status__ = "Development"


def dict_from_yaml(path: str) -> dict:
    """Load a configuration from YAML and return the resulting dictionary.

    Parameters
    ----------
    path
        (str) path to the YAML configuration of the form `path.to.config_file.ConfigName` or
        path/to/config_file/ConfigName. The dot notation refers to a path that can be found using python's import
        functionality, i.e. a package located in the Python path. The slash notation refers to a file in an absolute or
        relative path from the current working directory. In either case the second-to-last part refers to the
        filename without file extension and the last part refers to the configuration name.
    """
    from pycutoff.config.file import parse_path

    template_name, filename, directory = parse_path(path)

    if filename.endswith((".yaml", ".yml")):
        filepath = os.path.join(directory, filename)
    else:
        for ext in ["yaml", "yml"]:
            filepath = os.path.join(directory, ".".join((filename, ext)))
            if os.path.exists(filepath):
                break
        else:
            raise FileNotFoundError(f"Could not identify file with name {filename} in directory {directory}.")

    yaml = YAML(typ="safe", pure=True)
    with open(filepath, "r") as file:
        file_dict = yaml.load(file)

    if file_dict and template_name in file_dict:
        template_dict = dict(file_dict[template_name])
        template_dict["path"] = path
        template_dict["name"] = template_name
    else:
        raise AttributeError(f"Could not find {template_name} in {filepath}.")

    return template_dict


def dump_to_yaml(config, path: str, **kwargs) -> None:
    """Write a configuration instance to a YAML file of the form path/to/file.yaml. The configuration is stored under
    its own name with the name of its class as `base`, so that it can be loaded again with `from_yaml`.
    """
    from pycutoff.utility import create_directory

    dict_repr = {config.name: {"base": config.__class__.__name__, **config.to_dict()}}
    if config.description:
        dict_repr[config.name]["description"] = config.description

    create_directory(path)
    yaml = YAML()
    yaml.dump(dict_repr, Path(path), **kwargs)
