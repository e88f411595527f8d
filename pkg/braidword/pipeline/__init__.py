from typing import Dict, Type

from .base import Pipeline
from .geometric import GeometricPipeline
from .syntactic import SyntacticPipeline

# Registry mapping pipeline names to pipeline classes
PIPELINE_REGISTRY: Dict[str, Type[Pipeline]] = {
    "syn": SyntacticPipeline,
    "syntactic": SyntacticPipeline,
    "geo": GeometricPipeline,
    "geometric": GeometricPipeline,
}


def load_pipeline(pipeline_type: str, **kwargs) -> Pipeline:
    """
    Load a pipeline instance based on the pipeline type.

    Args:
        pipeline_type: Name of the pipeline ("syn"/"syntactic" or "geo"/"geometric")
        **kwargs: Arguments to pass to the pipeline constructor

    Returns:
        Pipeline instance

    Raises:
        ValueError: If pipeline type is not supported
    """
    pipeline_type_lower = pipeline_type.lower()

    if pipeline_type_lower not in PIPELINE_REGISTRY:
        available_types = list(PIPELINE_REGISTRY.keys())
        raise ValueError(f"Unsupported pipeline type '{pipeline_type}'. Available types: {available_types}")

    pipeline_class = PIPELINE_REGISTRY[pipeline_type_lower]
    return pipeline_class(**kwargs)


def register_pipeline(pipeline_type: str, pipeline_class: Type[Pipeline]) -> None:
    """Register a new pipeline class for a given name."""
    PIPELINE_REGISTRY[pipeline_type.lower()] = pipeline_class


def list_supported_pipelines() -> Dict[str, Type[Pipeline]]:
    return PIPELINE_REGISTRY.copy()


__all__ = [
    "GeometricPipeline",
    "PIPELINE_REGISTRY",
    "Pipeline",
    "SyntacticPipeline",
    "list_supported_pipelines",
    "load_pipeline",
    "register_pipeline",
]
