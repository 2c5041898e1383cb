"""Python bindings for the knotcert library."""

import json

from ._knotcert import *  # noqa: F401,F403
from ._knotcert import classify as _classify


def certificate(case, n_window=6, q_bound=50):
    return json.loads(_classify(case, n_window, q_bound))
