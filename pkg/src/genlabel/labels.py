"""Label domains: per-entity sets of valid labels plus palette bookkeeping.

A label is a (tag, value) pair encoded as the scalar ``tag*stride + value``
with ``stride`` fixed per run and strictly greater than every value
component, so the encoding is injective and every stored scalar is below the
declared palette size.  Algorithms that label with raw scalars use stride 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def encode_label(tag: int, value: int, stride: int) -> int:
    if not 0 <= value < stride:
        raise ValueError(f"value {value} out of range for stride {stride}")
    return tag * stride + value


def decode_label(scalar: int, stride: int) -> tuple[int, int]:
    return divmod(scalar, stride)


def draw_count(c: float, n: int) -> int:
    """The per-node draw budget ceil(c * log2 n), clamped to at least 1."""
    if n <= 1:
        return 1
    return max(1, math.ceil(c * math.log2(n)))


@dataclass(frozen=True)
class LabelDomain:
    """Map from entities (vertices or edges, by dense index) to label sets."""

    kind: str  # "vertex" | "edge"
    domains: dict[int, frozenset[int]] = field(compare=False)
    palette: int
    stride: int = 1

    def __post_init__(self):
        if self.kind not in ("vertex", "edge"):
            raise ValueError(f"kind must be 'vertex' or 'edge', got {self.kind!r}")

    def validate(self) -> None:
        """Check the domain invariants: non-empty sets, scalars below palette."""
        for entity, dom in self.domains.items():
            if not dom:
                raise ValueError(f"empty domain for entity {entity}")
            worst = max(dom)
            if worst >= self.palette or min(dom) < 0:
                raise ValueError(
                    f"entity {entity} holds label {worst} outside palette [0,{self.palette})"
                )

    def sizes(self) -> list[int]:
        return [len(d) for d in self.domains.values()]

    @property
    def min_size(self) -> int:
        return min(self.sizes(), default=0)

    def to_document(self) -> dict:
        """Stable JSON-ready form: sorted entities, sorted label lists."""
        return {
            "kind": self.kind,
            "palette": self.palette,
            "stride": self.stride,
            "domains": {str(k): sorted(self.domains[k]) for k in sorted(self.domains)},
        }
