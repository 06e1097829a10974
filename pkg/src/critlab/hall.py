"""Systems of distinct representatives for families of color lists.

Indices of the family are 0-based. A *violator* is a subfamily whose lists
together hold fewer colors than the subfamily has members.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

MAX_EXHAUSTIVE = 20


class HallError(ValueError):
    pass


@dataclass(frozen=True)
class HallInstance:
    lists: tuple
    palette: frozenset | None = None

    def __post_init__(self):
        lists = tuple(frozenset(x) for x in self.lists)
        object.__setattr__(self, "lists", lists)
        union = frozenset().union(*lists)
        if self.palette is None:
            object.__setattr__(self, "palette", union)
        else:
            pal = frozenset(self.palette)
            object.__setattr__(self, "palette", pal)
            if not union <= pal:
                raise HallError(f"lists use colors {sorted(union - pal)} outside the palette")

    def __len__(self):
        return len(self.lists)

    def union(self, indices) -> frozenset:
        return frozenset().union(*(self.lists[i] for i in indices))

    def is_violator(self, indices) -> bool:
        indices = frozenset(indices)
        return bool(indices) and len(self.union(indices)) < len(indices)

    def to_dict(self) -> dict:
        return {"palette": sorted(self.palette), "lists": [sorted(x) for x in self.lists]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "HallInstance":
        pal = data.get("palette")
        return cls(tuple(frozenset(x) for x in data["lists"]), None if pal is None else frozenset(pal))


@dataclass(frozen=True)
class HallResult:
    """Either an SDR (index -> color) or a violating subfamily.

    ``deficiency`` is the number of lists left unmatched by a maximum
    matching, which equals the largest value of ``|A| - |union(A)|``.
    """

    sdr: dict | None
    violator: frozenset | None
    matching_size: int
    deficiency: int

    @property
    def feasible(self) -> bool:
        return self.sdr is not None

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "sdr": None if self.sdr is None else {str(i): c for i, c in sorted(self.sdr.items())},
            "violator": None if self.violator is None else sorted(self.violator),
            "matching_size": self.matching_size,
            "deficiency": self.deficiency,
        }


def _max_matching(lists: Sequence[frozenset]) -> dict[int, int]:
    """Augmenting-path matching; indices and colors scanned in ascending order."""
    owner: dict[int, int] = {}
    ordered = [sorted(x) for x in lists]

    def augment(i, seen):
        for c in ordered[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(lists)):
        augment(i, set())
    return {i: c for c, i in owner.items()}


def solve_sdr(inst: HallInstance) -> HallResult:
    match = _max_matching(inst.lists)
    R = len(inst.lists)
    size = len(match)
    if size == R:
        sdr = dict(sorted(match.items()))
        _check_sdr(inst, sdr)
        return HallResult(sdr, None, size, 0)
    violator = _reachable_from_unmatched(inst.lists, match)
    if not inst.is_violator(violator):
        raise AssertionError("alternating-path cut is not a Hall violator")
    return HallResult(None, violator, size, R - size)


def _check_sdr(inst: HallInstance, sdr: Mapping[int, int]) -> None:
    if sorted(sdr) != list(range(len(inst.lists))):
        raise AssertionError("SDR does not cover every index")
    if len(set(sdr.values())) != len(sdr):
        raise AssertionError("SDR colors are not distinct")
    if any(c not in inst.lists[i] for i, c in sdr.items()):
        raise AssertionError("SDR color outside its list")


def _reachable_from_unmatched(lists, match) -> frozenset:
    # left vertices reachable by alternating paths from unmatched lists; its
    # neighborhood is fully matched back into it, so the deficit is exact
    owner = {c: i for i, c in match.items()}
    start = [i for i in range(len(lists)) if i not in match]
    seen = set(start)
    queue = deque(start)
    while queue:
        i = queue.popleft()
        for c in lists[i]:
            j = owner.get(c)
            if j is not None and j not in seen:
                seen.add(j)
                queue.append(j)
    return frozenset(seen)


def is_hall_feasible(inst: HallInstance) -> bool:
    return solve_sdr(inst).feasible


def max_deficiency_core(inst: HallInstance) -> frozenset:
    """The union of all maximum-deficiency subfamilies, empty if the family is feasible.

    Every list not reachable by an alternating path from an unused color.
    It is always a violator when nonempty, but not always the largest one:
    with lists ``{}, {}, {0, 1}`` the core has two members while all three
    lists together also violate.
    """
    match = _max_matching(inst.lists)
    if len(match) == len(inst.lists):
        return frozenset()
    owner = {c: i for i, c in match.items()}
    holders: dict[int, list[int]] = {}
    for i, lst in enumerate(inst.lists):
        for c in lst:
            holders.setdefault(c, []).append(i)
    free_colors = [c for c in holders if c not in owner]
    reached = set()
    seen_colors = set(free_colors)
    queue = deque(free_colors)
    while queue:
        c = queue.popleft()
        for i in holders[c]:
            if i == owner.get(c) or i in reached:
                continue
            reached.add(i)
            nxt = match.get(i)
            if nxt is None:
                raise AssertionError("augmenting path left in a maximum matching")
            if nxt not in seen_colors:
                seen_colors.add(nxt)
                queue.append(nxt)
    core = frozenset(range(len(inst.lists))) - reached
    if not inst.is_violator(core):
        raise AssertionError("maximal deficiency set is not a violator")
    return core


def largest_violator(inst: HallInstance, at_least: int | None = None) -> frozenset:
    """A largest Hall-violating subfamily, empty if there is none.

    With ``at_least`` the search may stop early: the result is then some
    violator with at least that many members, or the largest one if every
    violator is smaller. The maximum-deficiency core seeds the search; the
    rest is branch and bound over closed subfamilies (those containing
    every list inside their own color union), which is where the largest
    violator always lives.
    """
    core = max_deficiency_core(inst)
    if at_least is None:
        at_least = len(inst.lists) + 1
    if not core or len(core) >= at_least:
        return core
    masks = _color_masks(inst.lists)
    R = len(masks)
    best = [len(core), sum(1 << i for i in core)]

    def closure(colors):
        return sum(1 << i for i in range(R) if masks[i] & ~colors == 0)

    def rec(colors, excluded):
        fam = closure(colors)
        if fam & excluded:
            return False  # reached on the branch that included it
        size = bin(fam).count("1")
        if size > bin(colors).count("1") and size > best[0]:
            best[0], best[1] = size, fam
            if size >= at_least:
                return True
        rest = [i for i in range(R) if not (fam | excluded) >> i & 1]
        if not rest or size + len(rest) <= best[0]:
            return False
        i = rest[0]
        return rec(colors | masks[i], excluded) or rec(colors, excluded | 1 << i)

    rec(0, 0)
    found = frozenset(i for i in range(R) if best[1] >> i & 1)
    if not inst.is_violator(found):
        raise AssertionError("branch and bound returned a non-violator")
    return found


def min_violator(inst: HallInstance) -> frozenset | None:
    """A smallest violator, first in lexicographic index order; ``None`` if feasible.

    Exponential in the family size, capped at 20 lists.
    """
    R = len(inst.lists)
    if R > MAX_EXHAUSTIVE:
        raise HallError("exhaustive violator search out of range")
    if is_hall_feasible(inst):
        return None
    masks = _color_masks(inst.lists)
    for r in range(1, R + 1):
        for fam in combinations(range(R), r):
            u = 0
            for i in fam:
                u |= masks[i]
            if bin(u).count("1") < r:
                return frozenset(fam)
    raise AssertionError("infeasible family without a violator")


def all_violators(inst: HallInstance, min_size: int = 1, max_size: int | None = None) -> list[frozenset]:
    """Every violating subfamily with size in ``[min_size, max_size]``, in lexicographic order."""
    R = len(inst.lists)
    if R > MAX_EXHAUSTIVE:
        raise HallError("enumeration out of range")
    max_size = R if max_size is None else min(max_size, R)
    masks = _color_masks(inst.lists)
    out = []
    for r in range(max(min_size, 1), max_size + 1):
        for fam in combinations(range(R), r):
            u = 0
            for i in fam:
                u |= masks[i]
            if bin(u).count("1") < r:
                out.append(frozenset(fam))
    return out


def _color_masks(lists) -> list[int]:
    index: dict = {}
    for lst in lists:
        for c in sorted(lst):
            index.setdefault(c, len(index))
    return [sum(1 << index[c] for c in lst) for lst in lists]
