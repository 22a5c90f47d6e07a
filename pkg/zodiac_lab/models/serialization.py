"""Model save/load as versioned JSON.

Weights are number arrays; forest trees are nested node records. Floats are
written with ``repr`` precision so a loaded model predicts identically.
"""

import json
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from zodiac_lab.config import train_config_from_dict
from zodiac_lab.models.base import TrainedModel
from zodiac_lab.models.forest import LEAF, DecisionTree, ForestModel
from zodiac_lab.models.logreg import LogRegModel
from zodiac_lab.models.mlp import MlpModel

FORMAT_VERSION = 1


def _tree_to_record(tree: DecisionTree, node: int = 0) -> Dict[str, Any]:
    if tree.feature[node] == LEAF:
        return {"distribution": tree.value[node].tolist()}
    return {
        "feature": int(tree.feature[node]),
        "threshold": float(tree.threshold[node]),
        "left": _tree_to_record(tree, int(tree.left[node])),
        "right": _tree_to_record(tree, int(tree.right[node])),
    }


def _tree_from_record(record: Dict[str, Any], n_classes: int) -> DecisionTree:
    feature: List[int] = []
    threshold: List[float] = []
    left: List[int] = []
    right: List[int] = []
    value: List[np.ndarray] = []

    def visit(rec: Dict[str, Any]) -> int:
        node = len(feature)
        feature.append(LEAF)
        threshold.append(0.0)
        left.append(LEAF)
        right.append(LEAF)
        if "distribution" in rec:
            value.append(np.asarray(rec["distribution"], dtype=np.float64))
            return node
        value.append(np.zeros(n_classes))
        feature[node] = int(rec["feature"])
        threshold[node] = float(rec["threshold"])
        left[node] = visit(rec["left"])
        right[node] = visit(rec["right"])
        return node

    visit(record)
    return DecisionTree(
        feature=np.asarray(feature, dtype=np.int64),
        threshold=np.asarray(threshold, dtype=np.float64),
        left=np.asarray(left, dtype=np.int64),
        right=np.asarray(right, dtype=np.int64),
        value=np.vstack(value),
    )


def model_to_dict(model: TrainedModel) -> Dict[str, Any]:
    params = model.params
    if isinstance(params, LogRegModel):
        parameters = {"weights": params.weights.tolist(), "biases": params.biases.tolist()}
    elif isinstance(params, MlpModel):
        parameters = {"w1": params.w1.tolist(), "b1": params.b1.tolist(),
                      "w2": params.w2.tolist(), "b2": params.b2.tolist()}
    elif isinstance(params, ForestModel):
        parameters = {"trees": [_tree_to_record(t) for t in params.trees]}
    else:
        raise TypeError(f"Unsupported model parameters: {type(params).__name__}")
    return {
        "format_version": FORMAT_VERSION,
        "model_kind": model.kind,
        "n_classes": model.n_classes,
        "width": model.width,
        "config": asdict(model.config),
        "parameters": parameters,
    }


def model_from_dict(data: Dict[str, Any]) -> TrainedModel:
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"Unsupported model format_version {version!r} (expected {FORMAT_VERSION})")
    config = train_config_from_dict(data["config"])
    n_classes = int(data["n_classes"])
    p = data["parameters"]
    if config.model_kind == "logreg":
        params = LogRegModel(weights=np.asarray(p["weights"], dtype=np.float64),
                             biases=np.asarray(p["biases"], dtype=np.float64))
    elif config.model_kind == "mlp":
        params = MlpModel(*(np.asarray(p[k], dtype=np.float64) for k in ("w1", "b1", "w2", "b2")))
    else:
        params = ForestModel(trees=tuple(_tree_from_record(r, n_classes) for r in p["trees"]))
    return TrainedModel(config=config, n_classes=n_classes, width=int(data["width"]), params=params)


def save_model(path: str, model: TrainedModel) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model)) + "\n", encoding="utf-8")


def load_model(path: str) -> TrainedModel:
    return model_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
