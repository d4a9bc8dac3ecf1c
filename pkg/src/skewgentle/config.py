"""Configuration records shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    inputs: tuple[str, ...] = ()
    max_len: int = 6
    seed: int = 0
    output: Optional[str] = None
    oracle: bool = False
    report: Optional[str] = None

    def __post_init__(self) -> None:
        if self.max_len < 0:
            raise ValueError("max-len must be non-negative")


@dataclass(frozen=True)
class CorpusConfig:
    """Which algebras a differential experiment runs over."""

    bundled: tuple[str, ...] = ("toy1", "a2", "ex6")
    random_count: int = 20
    seed: int = 0
    max_vertices: int = 5


@dataclass(frozen=True)
class ExperimentConfig:
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    tau_max_len: int = 8
    int_max_len: int = 6
    successor_max_len: int = 6
    tautilt_max_len: dict[str, int] = field(
        default_factory=lambda: {"toy1": 4, "a1": 4, "a2": 4, "a3": 6, "ex6": 9}
    )
    flip_vertex: Optional[str] = None  # gauge flip; None = first vertex
