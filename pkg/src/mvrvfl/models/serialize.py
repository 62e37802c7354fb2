"""JSON model documents.

Floats are written with ``repr`` precision, which round-trips IEEE doubles
exactly, so a reloaded model predicts bit-identically.
"""

import json
from pathlib import Path

import numpy as np

from .mvrvfl import MvHyper, MvRvflModel
from .random_map import RandomFeatureMap

FORMAT_NAME = "mvrvfl-model"
FORMAT_VERSION = 1


class ModelFormatError(ValueError):
    pass


def _matrix(a):
    return np.asarray(a, dtype=float).tolist()


def to_document(model, extra=None):
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "activation": model.map_a.activation,
        "seeds": {"view_a": model.map_a.seed, "view_b": model.map_b.seed},
        "hyperparameters": model.hyper.as_dict(),
        "map_a": {"weights": _matrix(model.map_a.weights), "bias": _matrix(model.map_a.bias)},
        "map_b": {"weights": _matrix(model.map_b.weights), "bias": _matrix(model.map_b.bias)},
        "beta1": _matrix(model.beta1),
        "beta2": _matrix(model.beta2),
    }
    if extra:
        doc["metadata"] = extra
    return doc


def _array(doc, *keys, ndim):
    node = doc
    for k in keys:
        node = node[k]
    arr = np.array(node, dtype=float)
    if arr.ndim != ndim:
        raise ModelFormatError(f"field {'.'.join(keys)} should be {ndim}-dimensional")
    return arr


def from_document(doc):
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise ModelFormatError(f"not a {FORMAT_NAME} document (format version {FORMAT_VERSION} expected)")
    if doc.get("version") != FORMAT_VERSION:
        raise ModelFormatError(
            f"unsupported format version {doc.get('version')!r}; this build reads version {FORMAT_VERSION}"
        )
    try:
        act = doc["activation"]
        maps = []
        for key, seed_key in (("map_a", "view_a"), ("map_b", "view_b")):
            maps.append(
                RandomFeatureMap(
                    _array(doc, key, "weights", ndim=2),
                    _array(doc, key, "bias", ndim=1),
                    act,
                    int(doc["seeds"][seed_key]),
                )
            )
        hyper = MvHyper(**doc["hyperparameters"])
        beta1 = _array(doc, "beta1", ndim=2)
        beta2 = _array(doc, "beta2", ndim=2)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ModelFormatError):
            raise
        raise ModelFormatError(f"malformed model document (format version {FORMAT_VERSION}): {exc}") from exc
    if beta1.shape != (maps[0].n_inputs + maps[0].n_hidden, 2) or beta2.shape != (
        maps[1].n_inputs + maps[1].n_hidden,
        2,
    ):
        raise ModelFormatError("output weight shapes do not match the feature maps")
    return MvRvflModel(maps[0], maps[1], beta1, beta2, hyper)


def dumps(model, extra=None):
    return json.dumps(to_document(model, extra), indent=1)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(
            f"model file is not valid JSON ({exc.msg}); expected {FORMAT_NAME} version {FORMAT_VERSION}"
        ) from None
    return from_document(doc)


def save(model, path, extra=None):
    Path(path).write_text(dumps(model, extra), encoding="utf-8")


def load(path):
    return loads(Path(path).read_text(encoding="utf-8"))
