"""coloring.py - Coloring and validation report models"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from graphs.models import Edge, FamilyTag
from utils.exceptions import InvalidColoring


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> colour in 1..k with every colour used"""

    k: int
    colors: Tuple[int, ...]
    family: Optional[FamilyTag] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.colors:
            if self.k != 0:
                raise InvalidColoring(f"Empty coloring cannot use {self.k} colors")
            return
        if self.k < 1:
            raise InvalidColoring(f"Color count must be positive, got {self.k}")
        out_of_range = sorted({c for c in self.colors if not 1 <= c <= self.k})
        if out_of_range:
            raise InvalidColoring(f"Colors {out_of_range} outside [1, {self.k}]")
        unused = sorted(set(range(1, self.k + 1)) - set(self.colors))
        if unused:
            raise InvalidColoring(f"Color classes {unused} are empty")

    @property
    def n(self) -> int:
        return len(self.colors)

    @staticmethod
    def from_colors(colors: Sequence[int], family: Optional[FamilyTag] = None) -> "Coloring":
        """Infer k from the largest colour"""
        values = tuple(int(c) for c in colors)
        return Coloring(max(values, default=0), values, family)

    def classes(self) -> List[List[int]]:
        """Members of each colour class; entry j-1 holds class j"""
        members: List[List[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            members[c - 1].append(v)
        return members

    def class_masks(self) -> List[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c - 1] |= 1 << v
        return masks

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"k": self.k, "colors": list(self.colors)}
        if self.family is not None:
            data["family"] = self.family.to_dict()
        return data

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> "Coloring":
        try:
            k = int(data["k"])
            colors = tuple(int(c) for c in data["colors"])
        except (KeyError, ValueError, TypeError) as e:
            raise InvalidColoring(f"Malformed coloring JSON: {e}")
        family = FamilyTag.from_dict(data["family"]) if data.get("family") else None
        return Coloring(k, colors, family)


@dataclass
class ValidationReport:
    """Per-property verdicts; each witness list is empty iff its flag holds"""

    proper: bool
    monochromatic_edges: List[Edge]
    equitable: bool
    class_sizes: List[int]
    dominator: bool
    undominated_vertices: List[int]

    @property
    def overall(self) -> bool:
        return self.proper and self.equitable and self.dominator

    def to_dict(self) -> Dict[str, Any]:
        return {
            "proper": self.proper,
            "monochromatic_edges": [list(edge) for edge in self.monochromatic_edges],
            "equitable": self.equitable,
            "class_sizes": list(self.class_sizes),
            "dominator": self.dominator,
            "undominated_vertices": list(self.undominated_vertices),
            "overall": self.overall,
        }
