import argparse
import os
from dataclasses import dataclass
from typing import Optional

from .errors import BraidWordError
from .pipeline import PIPELINE_REGISTRY

DEFAULT_SEED = int(os.environ.get("BRAIDWORD_SEED", "20020611"))
DEFAULT_CLI_LOG_LEVEL = os.environ.get("BRAIDWORD_LOG_LEVEL", "WARNING")
OUTPUT_FORMATS = ("text", "svg", "csv")


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every subcommand of one invocation."""

    strands: Optional[int] = None
    seed: int = DEFAULT_SEED
    pipeline: str = "syn"
    pre_cancel: bool = True
    output_format: str = "text"
    log_level: str = DEFAULT_CLI_LOG_LEVEL
    workers: int = 1

    def __post_init__(self):
        if self.strands is not None and self.strands < 1:
            raise BraidWordError(f"--strands must be at least 1, got {self.strands}")
        if self.pipeline.lower() not in PIPELINE_REGISTRY:
            raise BraidWordError(f"unknown pipeline '{self.pipeline}'")
        if self.output_format not in OUTPUT_FORMATS:
            raise BraidWordError(f"unknown output format '{self.output_format}'")
        if self.workers < 1:
            raise BraidWordError(f"--workers must be at least 1, got {self.workers}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            strands=args.strands,
            seed=args.seed,
            pipeline=args.pipeline,
            pre_cancel=args.pre_cancel == "on",
            output_format=args.format,
            log_level=args.log_level,
            workers=args.workers,
        )

    def require_strands(self) -> int:
        if self.strands is None:
            raise BraidWordError("this subcommand needs --strands N")
        return self.strands
