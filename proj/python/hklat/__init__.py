"""Exact lattice and Lie-algebra calculus for hyper-Kaehler atomicity.

Thin wrapper around the compiled `_core` module: JSON strings cross the
boundary, dicts come out.
"""

import json as _json
import os as _os

try:  # installed layout: the extension lives inside the package
    from . import _core as _c
except ImportError:  # build-tree layout: the extension sits on sys.path
    import _core as _c

ext_dims = _c.ext_dims
k_relation = _c.k_relation
series_verify = _c.series_verify
verbitsky_dim = _c.verbitsky_dim

__all__ = [
    "atomic_check",
    "data_dir",
    "ext_dims",
    "fujiki_check",
    "k_relation",
    "lagrangian_check",
    "mukai_pairing",
    "presets",
    "run_suite",
    "series_verify",
    "spherical_verdict",
    "tangent_bundle",
    "verbitsky_dim",
    "verbitsky_dim_lattice",
]


def data_dir(explicit=None):
    """Locate the shipped data directory.

    Order: the explicit argument, the packaged copy next to this file, then a
    `data/` directory under the current working directory.
    """
    candidates = []
    if explicit:
        candidates.append(explicit)
    candidates.append(_os.path.join(_os.path.dirname(__file__), "data"))
    candidates.append(_os.path.join(_os.getcwd(), "data"))
    for c in candidates:
        if _os.path.isdir(c):
            return c
    raise FileNotFoundError("no hklat data directory found; pass an explicit path")


def atomic_check(lattice, vector, hodge=None):
    """Run the atomicity criteria; inputs are dicts in the documented schemas."""
    out = _c.atomic_check(
        _json.dumps(lattice), _json.dumps(vector), _json.dumps(hodge) if hodge else ""
    )
    return _json.loads(out)


def verbitsky_dim_lattice(lattice, n):
    return _c.verbitsky_dim_lattice(_json.dumps(lattice), n)


def tangent_bundle(n):
    return _json.loads(_c.tangent_bundle(n))


def fujiki_check(n, c2sq, c4):
    return _json.loads(_c.fujiki_check(n, str(c2sq), str(c4)))


def lagrangian_check(restriction):
    return _json.loads(_c.lagrangian_check(_json.dumps(restriction)))


def spherical_verdict(name, data=None):
    return _json.loads(_c.spherical_verdict(data_dir(data), name))


def presets(data=None):
    return _json.loads(_c.presets(data_dir(data)))


def mukai_pairing(lattice, x, y, epsilon="1"):
    out = _c.mukai_pairing(_json.dumps(lattice), _json.dumps(x), _json.dumps(y), str(epsilon))
    return _json.loads(out)


def run_suite(seed=20240607, instances=25):
    return _json.loads(_c.run_suite(seed, instances))
