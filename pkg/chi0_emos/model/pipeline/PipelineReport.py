from dataclasses import dataclass, field
from pathlib import Path

from chi0_emos.model.pipeline.CellFailure import CellFailure


@dataclass
class PipelineReport:
    """Outcome of a pipeline run.

    Attributes:
      - output_dir (Path): Directory holding the artifacts.
      - files (list[Path]): Artifacts written, in write order.
      - failures (list[CellFailure]): Cells that were aborted.
      - cells (int): Number of station/family cells scheduled.
    """

    output_dir: Path
    files: list[Path] = field(default_factory=list)
    failures: list[CellFailure] = field(default_factory=list)
    cells: int = 0

    @property
    def succeeded(self) -> bool:
        return not self.failures

    @property
    def exit_status(self) -> int:
        return 0 if self.succeeded else 1
