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
"""Resolution of configuration paths into (template name, file name, directory).
"""
import importlib
import os

from pycutoff.exceptions import PyCutoffException

__author__ = "pycutoff contributors"
__status__ = "Development"


def parse_path(path: str):
    """Parse a path of form path.to.config_file.ConfigName or path/to/config_file/ConfigName,
    returning a tuple of (name, file, abspath)."""

    if "/" in path or "\\" in path:

        # relative or absolute path of form:
        # path/to/file/ConfigName
        file, template_name = os.path.split(path)
        dirs, file = os.path.split(file)
        abspath = os.path.abspath(dirs)

    elif "." in path:

        *modules, file, template_name = path.split(".")
        parentdir = ".".join(modules)
        try:
            module = importlib.import_module(parentdir)
        except ModuleNotFoundError:
            raise PyCutoffException(f"Could not find Python (module) directory associated to path "
                                    f"`{parentdir}` of configuration `{path}`.")
        try:
            abspath = module.__path__
            abspath = abspath[0] if type(abspath) is list else abspath._path[0]
        except (TypeError, AttributeError):
            raise PyCutoffException(f"Something is wrong with the given YAML configuration path `{path}`.")

    else:
        raise PyCutoffException(f"Could not parse configuration path '{path}'. Was a base specified but left "
                                f"empty?")

    return template_name, file, abspath


def complete_config_path(target_path: str, source_path: str) -> str:
    """Check if path contains a folder structure and prepend the path of the source config, if it doesn't."""

    if "." not in target_path and "/" not in target_path:
        if "/" in source_path or "\\" in source_path:
            basedir, _ = os.path.split(source_path)
            target_path = os.path.normpath(os.path.join(basedir, target_path))
        else:
            target_path = ".".join((*source_path.split('.')[:-1], target_path))
    return target_path
