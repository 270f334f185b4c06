__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Configuration for UCluster.

The configuration is a JSON file, by default ~/.ucluster.json.  The
environment variable UCLUSTER_CONFIG can be set to point at another file.  A
missing file is not an error; the defaults below are used instead.

{
    "version": "1",
    "oracle_guards": {
        "ucvd_max_vertices": 14,
        "edge_max_vertices": 12,
        "ucevs_max_edges": 16,
        "ucivs_max_vertices": 9,
        "dway_max_vertices": 14
    },
    "dense_guard": 49,
    "score2_bruteforce_limit": 10,
    "workers": 1,
    "log_level": "WARNING"
}
"""

import copy
import json
import logging
import os

import psutil

from UCluster._Exceptions import APIException

logger = logging.getLogger(__name__)

CONFIG_ENV = "UCLUSTER_CONFIG"
CONFIG_FILE = "~/.ucluster.json"
SUPPORTED_VERSIONS = ("1",)

DEFAULTS = {
    "version": "1",
    "oracle_guards": {
        "ucvd_max_vertices": 14,
        "edge_max_vertices": 12,
        "ucevs_max_edges": 16,
        "ucivs_max_vertices": 9,
        "dway_max_vertices": 14,
    },
    "dense_guard": 49,
    "score2_bruteforce_limit": 10,
    "workers": None,
    "log_level": "WARNING",
}


def default_workers():
    # physical cores; psutil returns None where it cannot tell
    count = psutil.cpu_count(logical=False)
    return count if count else 1


class Config(object):
    """Read-only view of the merged defaults and user configuration."""

    def __init__(self, path=None, values=None):
        self._values = copy.deepcopy(DEFAULTS)
        if values is None:
            values = self._read(path)
        self._merge(values)
        if self._values["workers"] is None:
            self._values["workers"] = default_workers()

    @staticmethod
    def config_path(path=None):
        if path is None:
            path = os.environ.get(CONFIG_ENV, CONFIG_FILE)
        return os.path.expanduser(path)

    def _read(self, path):
        path = Config.config_path(path)
        if not os.path.exists(path):
            logger.debug("No config file at {}, using defaults".format(path))
            return {}
        try:
            with open(path) as fh:
                values = json.load(fh)
        except ValueError as e:
            raise APIException(
                "Could not parse config file {}: {}".format(path, e)
            )
        logger.debug("Read config file {}".format(path))
        return values

    def _merge(self, values):
        version = str(values.get("version", DEFAULTS["version"]))
        if version not in SUPPORTED_VERSIONS:
            raise APIException(
                "Config file version {} not supported, expected one of "
                "{}".format(version, ", ".join(SUPPORTED_VERSIONS))
            )
        for key, value in values.items():
            if key not in DEFAULTS:
                raise APIException("Unknown config key: {}".format(key))
            if key == "oracle_guards":
                for guard, limit in value.items():
                    if guard not in DEFAULTS["oracle_guards"]:
                        raise APIException("Unknown oracle guard: {}".format(guard))
                    self._values["oracle_guards"][guard] = int(limit)
            else:
                self._values[key] = value
        self._values["version"] = version

    def __getitem__(self, key):
        return self._values[key]

    def guard(self, name):
        return self._values["oracle_guards"][name]

    @property
    def dense_guard(self):
        return self._values["dense_guard"]

    @property
    def score2_bruteforce_limit(self):
        return self._values["score2_bruteforce_limit"]

    @property
    def workers(self):
        return int(self._values["workers"])

    @property
    def log_level(self):
        return self._values["log_level"]


_config = None


def get_config():
    """The process-wide configuration, loaded on first use."""
    global _config
    if _config is None:
        _config = Config()
    return _config


def set_config(config):
    """Replace the process-wide configuration (None forces a reload)."""
    global _config
    _config = config
