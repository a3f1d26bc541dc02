"""Versioned JSON documents for trained networks: architecture plus flat row-major parameter arrays."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ValidationError

from lindec.errors import ArtifactError, ParameterError, ShapeError
from lindec.mlp_v1.models import MlpArchitecture, MlpModel

MLP_DOCUMENT_VERSION = 1


class MlpDocument(BaseModel):
    format: Literal["lindec.mlp"] = "lindec.mlp"
    version: Literal[1] = MLP_DOCUMENT_VERSION
    architecture: MlpArchitecture
    biases: list[list[float]]
    weights: list[list[float]]


def document_to_model(doc: MlpDocument) -> MlpModel:
    sizes = doc.architecture.layer_sizes
    if len(doc.weights) != len(sizes) - 1:
        raise ShapeError(f"document has {len(doc.weights)} weight arrays, architecture needs {len(sizes) - 1}")
    weights = []
    for i, flat in enumerate(doc.weights):
        expected = sizes[i] * sizes[i + 1]
        if len(flat) != expected:
            raise ShapeError(f"layer {i} has {len(flat)} weights, expected {expected}")
        weights.append(np.array(flat, dtype=np.float64).reshape(sizes[i], sizes[i + 1]))
    biases = tuple(np.array(b, dtype=np.float64) for b in doc.biases)
    return MlpModel(architecture=doc.architecture, biases=biases, weights=tuple(weights))


def dump_model(m: MlpModel, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model_to_document(m).model_dump_json(indent=2))
    return path


def load_model(path: str | Path) -> MlpModel:
    path = Path(path)
    if not path.is_file():
        raise ArtifactError(f"network dump not found: {path}")
    try:
        return document_to_model(MlpDocument.model_validate_json(path.read_text()))
    except (ParameterError, ShapeError, ValidationError) as exc:
        raise ArtifactError(f"{path} is not a valid network dump: {exc}") from exc


def model_to_document(m: MlpModel) -> MlpDocument:
    return MlpDocument(
        architecture=m.architecture,
        biases=[b.tolist() for b in m.biases],
        weights=[w.ravel(order="C").tolist() for w in m.weights],
    )
