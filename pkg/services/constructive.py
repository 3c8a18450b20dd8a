"""constructive.py - Closed-form EDCN values and the explicit coloring schemes behind them

Every scheme colours generate_line(spec) by label. Cyclic indices are 1-based
and wrap through IndexHelper.wrap. Where the index arithmetic of a scheme is
contradictory for some t, the colouring follows the worked examples and the
deviation is recorded as a note on the Construction (and raised under strict).

Sunlet schemes name the pendant next to cycle edges e_i and e_{i+1} as p_i,
which is the generator's Rim(i+1).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger

from graphs.coloring import Coloring
from graphs.families import Family, FamilyInstance, generate_line
from graphs.models import LabelTag, VertexLabel
from utils.exceptions import OutOfTheoremRange, SchemeAmbiguous, SchemeNotApplicable
from utils.helpers import IndexHelper

wrap = IndexHelper.wrap
ceil_div = IndexHelper.ceil_div


class Scheme(str, Enum):
    MAIN = "main"
    ALTERNATE1 = "alternate1"
    ALTERNATE2 = "alternate2"


@dataclass(frozen=True)
class SchemeId:
    """A colouring scheme: family, variant and (resolved) subcase"""

    family: Family
    scheme: Scheme = Scheme.MAIN
    subcase: Optional[str] = None

    def describe(self) -> str:
        text = f"{self.family.value}/{self.scheme.value}"
        return f"{text}/{self.subcase}" if self.subcase else text


@dataclass
class Construction:
    scheme: SchemeId
    coloring: Coloring
    stated_colors: int
    ambiguities: List[str] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.coloring.k


# Smallest parameter for which each theorem is stated
THEOREM_MINIMUM: Dict[Family, int] = {
    Family.STAR: 1,
    Family.BISTAR: 2,
    Family.COMPLETE_BIPARTITE: 1,
    Family.WHEEL: 4,
    Family.HELM: 4,
    Family.GEAR: 3,
    Family.SUNLET: 3,
    Family.FRIENDSHIP: 2,
    Family.FLOWER: 3,
    Family.DOUBLE_WHEEL: 3,
}


def in_theorem_range(spec: FamilyInstance) -> bool:
    minimum = THEOREM_MINIMUM.get(spec.family)
    if minimum is None:
        return False
    return all(value is not None and value >= minimum for value in spec.params.values())


def formula_edcn(spec: FamilyInstance) -> int:
    """The closed-form EDCN claimed for the family's line graph"""
    if not in_theorem_range(spec):
        raise OutOfTheoremRange(spec.family.value, spec.params)

    family, t = spec.family, spec.t
    if family == Family.BISTAR:
        return max(spec.a, spec.b) + 1
    if family == Family.COMPLETE_BIPARTITE:
        return max(spec.a, spec.b)
    if family in (Family.STAR, Family.WHEEL):
        return t
    if family == Family.HELM:
        quarter = t // 4 if t % 4 == 1 else ceil_div(t, 4)
        return t + ceil_div(t, 2) + quarter
    if family == Family.GEAR:
        residue = t % 4
        if residue == 0:
            return 7 * t // 4
        if residue == 1:
            return t + t // 2 + t // 4 + 1
        if residue == 2:
            return 3 * t // 2 + t // 4 + 1
        return t + ceil_div(t, 4) + t // 4 + 3
    if family == Family.SUNLET:
        return t + ceil_div(t, 4)
    return 2 * t


# =============================================================================
# LABEL SHORTHANDS
# =============================================================================

def _spoke(i: int) -> VertexLabel:
    return VertexLabel(LabelTag.SPOKE, i)


def _rim(i: int) -> VertexLabel:
    return VertexLabel(LabelTag.RIM, i)


def _pendant(i: int) -> VertexLabel:
    return VertexLabel(LabelTag.PENDANT, i)


def _inner(i: int) -> VertexLabel:
    return VertexLabel(LabelTag.INNER_RIM, i)


def _outer(i: int) -> VertexLabel:
    return VertexLabel(LabelTag.OUTER_RIM, i)


class _Painter:
    """Collects label -> colour assignments for one scheme and records notes"""

    def __init__(self, spec: FamilyInstance, scheme: SchemeId):
        self.spec = spec
        self.scheme = scheme
        self.graph = generate_line(spec)
        self.index = self.graph.label_index()
        self.colors: Dict[int, int] = {}
        self.notes: List[str] = []

    def paint(self, label: VertexLabel, color: int):
        v = self.index[label]
        previous = self.colors.get(v)
        if previous is not None and previous != color:
            self.note(f"{label.symbol} assigned both c_{previous} and c_{color}; keeping c_{previous}")
            return
        self.colors[v] = color

    def color_of(self, label: VertexLabel) -> int:
        return self.colors[self.index[label]]

    def note(self, text: str):
        self.notes.append(text)

    def finish(self, subcase: Optional[str], stated: int) -> Construction:
        scheme = SchemeId(self.scheme.family, self.scheme.scheme, subcase)
        missing = [self.graph.vertex_name(v) for v in range(self.graph.n) if v not in self.colors]
        if missing:
            raise SchemeAmbiguous(scheme.describe(), f"{scheme.describe()} leaves {missing} uncolored")

        values = [self.colors[v] for v in range(self.graph.n)]
        used = sorted(set(values))
        if used != list(range(1, len(used) + 1)):
            renumber = {old: new for new, old in enumerate(used, start=1)}
            self.note(f"color indices {sorted(set(range(1, used[-1] + 1)) - set(used))} unused; renumbered")
            values = [renumber[c] for c in values]

        coloring = Coloring(len(used), tuple(values), self.graph.family)
        return Construction(scheme, coloring, stated, list(self.notes))


# =============================================================================
# SCHEMES
# =============================================================================

def _bistar_main(p: _Painter) -> Tuple[Optional[str], int]:
    a, b = p.spec.a, p.spec.b
    small, large = (_spoke, _rim) if a <= b else (_rim, _spoke)
    for i in range(1, max(a, b) + 1):
        p.paint(large(i), i)
    for i in range(1, min(a, b) + 1):
        p.paint(small(i), i)
    p.paint(VertexLabel(LabelTag.BRIDGE, 1), max(a, b) + 1)
    return None, max(a, b) + 1


def _complete_bipartite_main(p: _Painter) -> Tuple[Optional[str], int]:
    a, b = p.spec.a, p.spec.b
    width = max(a, b)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            p.paint(VertexLabel(LabelTag.GRID_CELL, i, j), wrap(i + j - 1, width))
    if min(a, b) >= 3:
        p.note(
            f"every class is a transversal of the {a}x{b} grid, so with min(a,b) >= 3 "
            f"no row-plus-column neighborhood contains a whole class"
        )
    return None, width


def _star_main(p: _Painter) -> Tuple[Optional[str], int]:
    for i in range(1, p.spec.t + 1):
        p.paint(_spoke(i), i)
    return None, p.spec.t


def _wheel_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(i), wrap(i - 1, t))
    return None, t


def _helm_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_pendant(i), wrap(i + 1, t))
    for k in range(1, ceil_div(t, 2) + 1):
        p.paint(_rim(2 * k - 1), t + k)

    subcase = "case2" if t % 4 == 1 else "case1"
    quarter = t // 4 if subcase == "case2" else ceil_div(t, 4)
    base = t + ceil_div(t, 2)
    for k in range(1, quarter + 1):
        i = 2 * k
        p.paint(_rim(i), base + k)
        partner = i + 2 * quarter
        if partner <= t:
            p.paint(_rim(partner), base + k)
        else:
            p.note(f"rim e_{i}' has no partner e_{partner}' (t={t}); kept as a singleton class")
    return subcase, formula_edcn(p.spec)


def _helm_alternate(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(i), wrap(i - 1, t))
        p.paint(_pendant(i), t + i)
    return "scheme2", 2 * t


def _gear_even_rims(p: _Painter):
    for i in range(1, p.spec.t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(2 * i), i)


def _gear_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    m, residue = divmod(t, 4)
    _gear_even_rims(p)

    if residue == 0:
        for k in range(t // 2):
            p.paint(_rim(4 * k + 1), t + k + 1)
        for k in range(t // 4):
            p.paint(_rim(4 * k + 3), 3 * t // 2 + k + 1)
            p.paint(_rim(4 * k + 3 + t), 3 * t // 2 + k + 1)
        return "1.1", formula_edcn(p.spec)

    if residue == 1:
        for k in range(2 * m + 1):
            p.paint(_rim(4 * k + 1), t + k + 1)
        for k in range(m):
            color = t + 2 * m + k + 2
            p.paint(_rim(4 * k + 3), color)
            p.paint(_rim(4 * k + 3 + 4 * m), color)
        p.note(
            f"pair k={m} would repeat e_{4 * m + 3}'; pair colors start at c_{t + 2 * m + 2} "
            f"since c_{t + 2 * m + 1} already marks e_{2 * t - 1}'"
        )
        return "2.1", formula_edcn(p.spec)

    if residue == 2:
        for k in range(2 * m + 1):
            p.paint(_rim(4 * k + 1), t + k + 1)
        offset = 4 * ceil_div(t, 4)
        for k in range(m + 1):
            i, color = 4 * k + 3, 3 * t // 2 + k + 1
            p.paint(_rim(i), color)
            if i + offset <= 2 * t:
                p.paint(_rim(i + offset), color)
            else:
                p.note(f"rim e_{i}' has no partner e_{i + offset}' (t={t}); kept as a singleton class")
        return "3.1", formula_edcn(p.spec)

    for k in range(2 * m + 1):
        p.paint(_rim(4 * k + 3), t + k + 1)
    p.paint(_rim(2 * t - 1), t + 2 * m + 2)
    for k in range(m):
        color = t + 2 * m + 3 + k
        p.paint(_rim(4 * k + 1), color)
        p.paint(_rim(4 * k + 1 + 4 * m + 4), color)
    p.paint(_rim(4 * m + 1), t + 3 * m + 3)
    p.note(
        f"odd rims left uncolored by the stated index ranges are completed with singleton classes; "
        f"this uses {t + 3 * m + 3} colors against the stated {formula_edcn(p.spec)}"
    )
    return "case4", formula_edcn(p.spec)


def _gear_alternate1(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    m, residue = divmod(t, 4)
    if residue == 0:
        _gear_even_rims(p)
        for k in range(t // 2):
            p.paint(_rim(4 * k + 3), t + k + 1)
        for k in range(t // 4):
            p.paint(_rim(4 * k + 1), 3 * t // 2 + k + 1)
            p.paint(_rim(4 * k + 1 + t), 3 * t // 2 + k + 1)
        p.note("partner of e_i' (i=4k+1) read as e_{i+t}'")
        return "1.2", formula_edcn(p.spec)

    if residue == 1:
        _gear_even_rims(p)
        for k in range(2 * m):
            p.paint(_rim(4 * k + 3), t + k + 1)
        p.paint(_rim(2 * t - 1), t + 2 * m + 1)
        for k in range(m):
            color = t + 2 * m + 2 + k
            p.paint(_rim(4 * k + 1), color)
            p.paint(_rim(4 * k + 1 + 4 * m), color)
        p.note(
            f"e_{t - 1}' already carries c(e_{(t - 1) // 2}); the extra singleton is e_{2 * t - 1}' "
            f"and pair colors start at c_{t + 2 * m + 2}"
        )
        return "2.2", formula_edcn(p.spec)

    raise SchemeNotApplicable(p.scheme.describe(), p.spec.params, "needs t = 0 or 1 (mod 4)")


def _gear_alternate2(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    if t % 4 != 0:
        raise SchemeNotApplicable(p.scheme.describe(), p.spec.params, "needs t = 0 (mod 4)")
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(wrap(2 * i + 1, 2 * t)), i)
        p.paint(_rim(2 * i), t + i)
    return "1.3", 2 * t


def _sunlet_pendant(i: int, t: int) -> VertexLabel:
    return _rim(wrap(i + 1, t))


def _sunlet_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)

    for i in range(2, t + 1, 2):
        source = wrap(i + 2, t)
        if t % 2 == 1 and i == t - 1:
            if t == 3:
                p.note("p_2 is adjacent to e_2; it takes c(e_1) instead")
            else:
                source = 2
        p.paint(_sunlet_pendant(i, t), source)

    quarter = ceil_div(t, 4)
    for k in range(1, quarter + 1):
        i = 2 * k - 1
        p.paint(_sunlet_pendant(i, t), t + k)
        partner = i + 2 * quarter
        if partner <= t:
            p.paint(_sunlet_pendant(partner, t), t + k)
        else:
            p.note(f"p_{i} has no partner p_{partner} (t={t}); kept as a singleton class")
    return "case1", formula_edcn(p.spec)


def _sunlet_alternate(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    thirds, r = divmod(t, 3)
    base = 2 * thirds + r
    for j in range(1, t + 1):
        p.paint(_spoke(j), j - j // 3 - 1 if j % 3 == 0 else j - j // 3)
    if t == 3:
        p.note("e_3 and e_1 are adjacent and both get c_1")

    def pendant(i: int) -> VertexLabel:
        return _sunlet_pendant(i, t)

    if t % 4 != 2:
        upper = ceil_div(t, 3)
        for k in range(1, upper + 1):
            i = 3 * k - 2
            p.paint(pendant(i), base + k)
            if i + 1 <= t:
                p.paint(pendant(i + 1), base + k)
            else:
                p.note(f"p_{i + 1} wraps onto p_1; p_{i} kept as a singleton class")
        for k in range(1, thirds + 1):
            p.paint(pendant(3 * k), base + upper + k)
        return "2.1", base + upper + thirds

    for k in range(1, thirds + 1):
        i = 3 * k - 2
        p.paint(pendant(i), base + k)
        p.paint(pendant(i + 1), base + k)
    for k in range(1, thirds + 1):
        p.paint(pendant(3 * k), base + thirds + k)
    stated = base + 2 * thirds
    if r == 0:
        p.note(f"c(p_{t}) = c(p_{t - 1}) is not applied: both are already colored")
    elif r == 1:
        p.paint(pendant(t), p.color_of(pendant(t - 1)))
    else:
        p.paint(pendant(t - 1), stated + 1)
        p.paint(pendant(t), stated + 1)
        p.note(f"p_{t - 1} and p_{t} are left uncolored by the stated ranges; they share c_{stated + 1}")
    return "2.2", stated


def _friendship_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_pendant(i), t + i)
        p.paint(_rim(i), wrap(i - 1, t))
    return None, 2 * t


def _flower_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(i), t + i)
        p.paint(_pendant(i), t + i)
        p.paint(_outer(i), wrap(i - 1, t))
    return None, 2 * t


def _double_wheel_main(p: _Painter) -> Tuple[Optional[str], int]:
    t = p.spec.t
    for i in range(1, t + 1):
        p.paint(_spoke(i), i)
        p.paint(_rim(i), t + i)
        p.paint(_inner(i), wrap(i - 1, t))
        p.paint(_outer(i), t + wrap(i - 1, t))
    p.note("outer rims reuse the outer spoke colors c_{t+1}..c_{2t} shifted by one, not c(e_{i-1})")
    return None, 2 * t


Colorer = Callable[[_Painter], Tuple[Optional[str], int]]

SCHEMES: Dict[Tuple[Family, Scheme], Colorer] = {
    (Family.BISTAR, Scheme.MAIN): _bistar_main,
    (Family.COMPLETE_BIPARTITE, Scheme.MAIN): _complete_bipartite_main,
    (Family.STAR, Scheme.MAIN): _star_main,
    (Family.WHEEL, Scheme.MAIN): _wheel_main,
    (Family.HELM, Scheme.MAIN): _helm_main,
    (Family.HELM, Scheme.ALTERNATE1): _helm_alternate,
    (Family.GEAR, Scheme.MAIN): _gear_main,
    (Family.GEAR, Scheme.ALTERNATE1): _gear_alternate1,
    (Family.GEAR, Scheme.ALTERNATE2): _gear_alternate2,
    (Family.SUNLET, Scheme.MAIN): _sunlet_main,
    (Family.SUNLET, Scheme.ALTERNATE1): _sunlet_alternate,
    (Family.FRIENDSHIP, Scheme.MAIN): _friendship_main,
    (Family.FLOWER, Scheme.MAIN): _flower_main,
    (Family.DOUBLE_WHEEL, Scheme.MAIN): _double_wheel_main,
}


def available_schemes(family: Family) -> List[Scheme]:
    return [scheme for fam, scheme in SCHEMES if fam == family]


def build_construction(spec: FamilyInstance, scheme: Optional[SchemeId] = None,
                       strict: bool = False) -> Construction:
    """Run a scheme and return the colouring with its stated count and notes"""
    scheme = scheme or SchemeId(spec.family)
    if scheme.family != spec.family:
        raise SchemeNotApplicable(scheme.describe(), spec.params, f"scheme is for {scheme.family.value}")
    if scheme.scheme not in available_schemes(spec.family):
        names = ", ".join(s.value for s in available_schemes(spec.family)) or "none"
        raise SchemeNotApplicable(scheme.describe(), spec.params, f"no such scheme; available: {names}")
    colorer = SCHEMES[(spec.family, scheme.scheme)]
    if not in_theorem_range(spec):
        raise SchemeNotApplicable(scheme.describe(), spec.params, "outside the theorem's range")

    painter = _Painter(spec, scheme)
    subcase, stated = colorer(painter)
    if scheme.subcase is not None and scheme.subcase != subcase:
        raise SchemeNotApplicable(scheme.describe(), spec.params, f"t selects subcase {subcase}")

    construction = painter.finish(subcase, stated)
    for note in construction.ambiguities:
        logger.warning(f"{construction.scheme.describe()} {spec.describe()}: {note}")
        if strict:
            raise SchemeAmbiguous(f"{construction.scheme.describe()} {spec.describe()}", note)
    logger.debug(
        f"{construction.scheme.describe()} {spec.describe()}: {construction.k} colors "
        f"(stated {stated})"
    )
    return construction


def construct(spec: FamilyInstance, scheme: Optional[SchemeId] = None, strict: bool = False) -> Coloring:
    """The colouring of generate_line(spec) produced by the scheme"""
    return build_construction(spec, scheme, strict).coloring
