"""Hyperbolic network growth, embedding and evaluation."""

from ._core import (
    Embedding,
    EmbeddingProvenance,
    FormatError,
    Graph,
    GrownNetwork,
    ModelParams,
    ParameterError,
    connection_curve,
    embed,
    grow,
    infer_birth_order,
    infer_temperature,
    link_prediction_auc,
    log_loss,
    read_coordinates,
    read_edge_list,
    route,
    routing,
    write_coordinates,
    write_edge_list,
)

__all__ = [
    "Embedding",
    "EmbeddingProvenance",
    "FormatError",
    "Graph",
    "GrownNetwork",
    "ModelParams",
    "ParameterError",
    "connection_curve",
    "embed",
    "grow",
    "infer_birth_order",
    "infer_temperature",
    "link_prediction_auc",
    "log_loss",
    "read_coordinates",
    "read_edge_list",
    "route",
    "routing",
    "write_coordinates",
    "write_edge_list",
]
