"""Value types for complete multipartite graphs and their tree-colorings.

Everything here is an immutable value; all algorithmic content lives in the
other modules.  A color class is canonically a per-part count vector, because
vertices inside one part are interchangeable; explicit vertex lists are an
optional decoration used by the explicit-graph verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .errors import InvalidPart, MalformedColoring

# A vertex is addressed as (part index, vertex index within that part), 0-based.
Vertex = Tuple[int, int]


class CaseTag(str, Enum):
    """Which closed-form clause produced a result.

    The vocabulary is fixed so sweep outputs stay diffable.
    """

    BIP_SMALL = "BIP_SMALL"
    BIP_C0_COND = "BIP_C0_COND"
    BIP_C0_ELSE = "BIP_C0_ELSE"
    BIP_C1_COND = "BIP_C1_COND"
    BIP_C1_ELSE = "BIP_C1_ELSE"
    BIP_C2_COND = "BIP_C2_COND"
    BIP_C2_ELSE = "BIP_C2_ELSE"
    BIP_C3_COND = "BIP_C3_COND"
    BIP_C3_ELSE = "BIP_C3_ELSE"
    TRI_SMALL = "TRI_SMALL"
    TRI_C0_COND = "TRI_C0_COND"
    TRI_C0_ELSE = "TRI_C0_ELSE"
    TRI_C1_COND = "TRI_C1_COND"
    TRI_C1_ELSE = "TRI_C1_ELSE"
    TRI_C2_COND = "TRI_C2_COND"
    TRI_C2_ELSE = "TRI_C2_ELSE"
    TRI_C3_NOT_A = "TRI_C3_NOT_A"
    TRI_C3_A_NOT_B = "TRI_C3_A_NOT_B"
    TRI_C3_A_AND_B = "TRI_C3_A_AND_B"


@dataclass(frozen=True)
class GraphSpec:
    """A complete multipartite graph given by its part sizes.

    Parts are stored sorted ascending; the constructor sorts, so any order may
    be passed in.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if len(parts) < 2:
            raise InvalidPart(f"need at least 2 parts, got {len(parts)}")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise InvalidPart(f"part sizes must be integers, got {p!r}")
            if p < 1:
                raise InvalidPart(f"part sizes must be >= 1, got {p}")
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    @property
    def n(self) -> int:
        """Total number of vertices."""
        return sum(self.parts)

    @property
    def kind(self) -> str:
        if len(self.parts) == 2:
            return "bipartite"
        if len(self.parts) == 3:
            return "tripartite"
        return "general"


def normalize(parts: Sequence[int]) -> GraphSpec:
    """Build a canonical (sorted) GraphSpec, rejecting bad part lists."""
    return GraphSpec(tuple(parts))


def decompose_n(spec: GraphSpec) -> Tuple[int, int]:
    """Split N = 4b + c with 0 <= c <= 3 and b = N // 4."""
    return divmod(spec.n, 4)


@dataclass(frozen=True)
class ClassComposition:
    """One color class as a per-part vertex count vector."""

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        for c in counts:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise MalformedColoring(f"class counts must be integers >= 0, got {c!r}")
        object.__setattr__(self, "counts", counts)

    @property
    def size(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class TreeColoring:
    """A full coloring: one composition per class, plus the degree bound r.

    Structural well-formedness (vector lengths, vertex/count consistency, no
    duplicate vertices) is enforced here.  Semantic validity (column sums,
    equitability, forest shape) is the verify module's job, so that broken
    colorings can be represented and diagnosed.
    """

    spec: GraphSpec
    r: int
    classes: Tuple[ClassComposition, ...]
    vertices: Optional[Tuple[Tuple[Vertex, ...], ...]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or isinstance(self.r, bool) or self.r < 1:
            raise MalformedColoring(f"degree bound r must be an integer >= 1, got {self.r!r}")
        classes = tuple(self.classes)
        if not classes:
            raise MalformedColoring("a coloring needs at least one class")
        width = len(self.spec.parts)
        for idx, cls in enumerate(classes):
            if len(cls.counts) != width:
                raise MalformedColoring(
                    f"class {idx} has {len(cls.counts)} counts, expected {width}"
                )
        object.__setattr__(self, "classes", classes)
        if self.vertices is not None:
            verts = tuple(tuple(vs) for vs in self.vertices)
            if len(verts) != len(classes):
                raise MalformedColoring(
                    f"{len(verts)} vertex lists for {len(classes)} classes"
                )
            seen = set()
            for idx, (cls, vs) in enumerate(zip(classes, verts)):
                induced = [0] * width
                for v in vs:
                    part, i = v
                    if not (0 <= part < width) or not (0 <= i < self.spec.parts[part]):
                        raise MalformedColoring(f"class {idx} lists unknown vertex {v}")
                    if v in seen:
                        raise MalformedColoring(f"vertex {v} appears twice")
                    seen.add(v)
                    induced[part] += 1
                if tuple(induced) != cls.counts:
                    raise MalformedColoring(
                        f"class {idx} vertex list induces counts {tuple(induced)}, "
                        f"declared {cls.counts}"
                    )
            object.__setattr__(self, "vertices", verts)

    @property
    def q(self) -> int:
        """Number of color classes."""
        return len(self.classes)


@dataclass(frozen=True)
class VaResult:
    """A computed strong equitable vertex 2-arboricity value.

    b and c are the decomposition N = 4b + c; they are left unset for the
    hard-coded small graphs, where the theorems' b is not in play.
    """

    value: int
    case_tag: CaseTag
    b: Optional[int] = None
    c: Optional[int] = None

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"va value must be >= 1, got {self.value}")
        if (self.b is None) != (self.c is None):
            raise ValueError("b and c must be populated together")
        if self.c is not None and not 0 <= self.c <= 3:
            raise ValueError(f"c must be in 0..3, got {self.c}")


@dataclass(frozen=True)
class OracleCertificate:
    """Outcome of an exhaustive existence search.

    instance records (graph, q, r) as queried.  A positive certificate always
    carries a witness coloring; a negative one never does.
    """

    exists: bool
    witness: Optional[TreeColoring]
    instance: Tuple[GraphSpec, int, int]

    def __post_init__(self) -> None:
        if self.exists and self.witness is None:
            raise ValueError("positive certificate requires a witness")
        if not self.exists and self.witness is not None:
            raise ValueError("negative certificate must not carry a witness")
