"""Decorated Dyck paths, skew Dyck paths and the bijections from marked trees.

Paths are strings over one character per step:

* decorated paths use ``U`` (up), ``D`` (down) and ``L`` (red down-step);
* skew paths use ``U`` = (1, 1), ``D`` = (1, -1) and ``L`` = (-1, -1).

The red down-step of a decorated path and the south-west step of a skew path
share the letter ``L``; the bijection between the two is the identity on
strings, and only the geometry (and hence validity) differs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .trees import MarkedTree

__all__ = [
    "InvalidPath",
    "DecoratedPath",
    "SkewPath",
    "SkewCheck",
    "tree_to_decorated",
    "decorated_to_tree",
    "decorated_to_skew",
    "skew_to_decorated",
    "validate_skew",
    "skew_vertices",
]

UP, DOWN, RED = "U", "D", "L"


class InvalidPath(ValueError):
    pass


def _check_letters(steps: str) -> None:
    bad = set(steps) - {UP, DOWN, RED}
    if bad:
        raise InvalidPath(f"unknown step letters {sorted(bad)}")


@dataclass(frozen=True)
class DecoratedPath:
    steps: str = ""

    def __post_init__(self):
        _check_letters(self.steps)
        height = 0
        prev = None
        for i, s in enumerate(self.steps):
            if s == RED and prev == UP:
                raise InvalidPath(f"red down-step at {i} closes an edge to a leaf")
            if s == UP and prev == RED:
                raise InvalidPath(f"red down-step at {i - 1} closes a non-rightmost edge")
            height += 1 if s == UP else -1
            if height < 0:
                raise InvalidPath(f"path dips below the axis at step {i}")
            prev = s
        if height != 0:
            raise InvalidPath(f"path ends at height {height}")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def red_steps(self) -> int:
        return self.steps.count(RED)


@dataclass(frozen=True)
class SkewCheck:
    valid: bool
    reason: str = ""
    step: int | None = None

    def __bool__(self) -> bool:
        return self.valid


_DELTA = {UP: (1, 1), DOWN: (1, -1), RED: (-1, -1)}


def skew_vertices(steps: str) -> list[tuple[int, int]]:
    _check_letters(steps)
    x = y = 0
    out = [(0, 0)]
    for s in steps:
        dx, dy = _DELTA[s]
        x, y = x + dx, y + dy
        out.append((x, y))
    return out


def validate_skew(steps: str) -> SkewCheck:
    """Check ``y >= 0``, ending on the axis, and no unit segment used twice."""
    try:
        verts = skew_vertices(steps)
    except InvalidPath as exc:
        return SkewCheck(False, str(exc), None)
    seen = set()
    for i, (a, b) in enumerate(zip(verts, verts[1:])):
        if b[1] < 0:
            return SkewCheck(False, f"vertex {b} below the axis", i)
        seg = frozenset((a, b))
        if seg in seen:
            return SkewCheck(False, f"segment {a}-{b} traversed twice", i)
        seen.add(seg)
    if verts[-1][1] != 0:
        return SkewCheck(False, f"path ends at height {verts[-1][1]}", len(steps))
    return SkewCheck(True)


@dataclass(frozen=True)
class SkewPath:
    steps: str = ""
    vertices: tuple[tuple[int, int], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        check = validate_skew(self.steps)
        if not check:
            raise InvalidPath(check.reason)
        object.__setattr__(self, "vertices", tuple(skew_vertices(self.steps)))

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


def tree_to_decorated(tree: MarkedTree) -> DecoratedPath:
    """Walk around the tree: ``U`` going down an edge, ``D``/``L`` coming back."""
    out: list[str] = []
    # iterative DFS; the sentinel string entries are emitted on the way back
    stack: list[MarkedTree | str] = list(reversed(tree.children))
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(UP)
        stack.append(RED if item.marked else DOWN)
        stack.extend(reversed(item.children))
    return DecoratedPath("".join(out))


def decorated_to_tree(path: DecoratedPath | str) -> MarkedTree:
    steps = path.steps if isinstance(path, DecoratedPath) else DecoratedPath(path).steps
    # each frame is the child list under construction for an open node
    frames: list[list[MarkedTree]] = [[]]
    for s in steps:
        if s == UP:
            frames.append([])
        else:
            kids = frames.pop()
            frames[-1].append(MarkedTree(tuple(kids), s == RED))
    return MarkedTree(tuple(frames[0]))


def decorated_to_skew(path: DecoratedPath) -> SkewPath:
    return SkewPath(path.steps)


def skew_to_decorated(path: SkewPath) -> DecoratedPath:
    return DecoratedPath(path.steps)
