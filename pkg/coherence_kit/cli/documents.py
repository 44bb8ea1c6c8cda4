"""
JSON channel interchange.

A document stores each Kraus operator row-major, every entry as an
[re, im] pair. Floats are written with Python's shortest round-trip repr,
which is lossless and locale-independent.
"""
from pathlib import Path
from typing import Annotated, Any, Union
import json
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from typing_extensions import Self
from coherence_kit.core.errors import DocumentError
from coherence_kit.core.channels import KrausSet

FORMAT_VERSION = "1"

Entry = Annotated[list[float], Field(min_length=2, max_length=2)]
Row = Annotated[list[Entry], Field(min_length=2, max_length=2)]
Matrix = Annotated[list[Row], Field(min_length=2, max_length=2)]


class ChannelDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format_version: str = FORMAT_VERSION
    kraus: Annotated[list[Matrix], Field(min_length=1)]
    metadata: dict[str, Any] = Field(default_factory=dict)

    @field_validator("format_version")
    @classmethod
    def _known_version(cls, value: str) -> str:
        if value != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {value!r}, expected {FORMAT_VERSION!r}")
        return value

    @classmethod
    def from_kraus(cls, ch: KrausSet, **metadata: Any) -> Self:
        matrices = [
            [[[float(k[i, j].real), float(k[i, j].imag)] for j in range(2)] for i in range(2)]
            for k in ch
        ]
        return cls(kraus=matrices, metadata=metadata)

    def to_kraus(self) -> KrausSet:
        """Operators as a KrausSet; completeness is left to the caller"""
        ops = [np.array([[complex(re, im) for re, im in row] for row in m]) for m in self.kraus]
        return KrausSet(tuple(ops))

    @classmethod
    def parse(cls, text: str) -> Self:
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise DocumentError(f"malformed channel document: {e.error_count()} error(s)\n{e}") from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> Self:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentError(f"cannot read {path}: {e.strerror}") from e
        return cls.parse(text)

    def dumps(self) -> str:
        return json.dumps(self.model_dump(), indent=2) + "\n"
