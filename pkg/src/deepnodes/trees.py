"""Marked ordered trees: generation, statistics and a text encoding.

A marked ordered tree is a plane tree in which the edge to the rightmost
child of a node may be marked, provided that child is not a leaf.  The mark
is stored on the child (``marked`` means "the edge from my parent is
marked").

Height counts *nodes* on the longest root-to-leaf chain, so a single node
has height 1.

Encoding grammar::

    tree := '(' tree* ['*' tree] ')'

where the tree following ``'*'`` is the marked rightmost child and must not
be ``"()"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "MarkedTree",
    "TreeStats",
    "ParseError",
    "InvalidMark",
    "SizeZero",
    "SizeTooLarge",
    "MAX_GENERATE",
    "generate",
    "iter_trees",
    "stats",
    "deepest_polynomial",
    "encode",
    "decode",
    "validate",
]

MAX_GENERATE = 12


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidMark(ValueError):
    pass


class SizeZero(ValueError):
    pass


class SizeTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MarkedTree:
    children: tuple[MarkedTree, ...] = ()
    marked: bool = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def __str__(self) -> str:
        return encode(self)


@dataclass(frozen=True)
class TreeStats:
    nodes: int
    height: int
    deepest: int
    marks: int


def validate(tree: MarkedTree) -> None:
    """Raise :class:`InvalidMark` unless ``tree`` obeys the marking rule."""
    if tree.marked:
        raise InvalidMark("the root cannot carry a mark")
    stack = [tree]
    while stack:
        node = stack.pop()
        last = len(node.children) - 1
        for i, child in enumerate(node.children):
            if child.marked and i != last:
                raise InvalidMark("only the rightmost child may be marked")
            if child.marked and child.is_leaf:
                raise InvalidMark("a marked edge cannot lead to a leaf")
            stack.append(child)


def encode(tree: MarkedTree) -> str:
    parts: list[str] = []

    def walk(node: MarkedTree) -> None:
        if node.marked:
            parts.append("*")
        parts.append("(")
        for c in node.children:
            walk(c)
        parts.append(")")

    walk(tree)
    return "".join(parts)


def decode(s: str) -> MarkedTree:
    pos = 0

    def parse_tree(marked: bool) -> MarkedTree:
        nonlocal pos
        if pos >= len(s) or s[pos] != "(":
            raise ParseError("expected '('", pos)
        pos += 1
        children = []
        while pos < len(s) and s[pos] != ")":
            if s[pos] == "*":
                star = pos
                pos += 1
                child = parse_tree(True)
                if child.is_leaf:
                    raise InvalidMark(f"'*' at position {star} marks an edge to a leaf")
                if pos < len(s) and s[pos] != ")":
                    raise InvalidMark(f"'*' at position {star} is not on the last child")
                children.append(child)
            elif s[pos] == "(":
                children.append(parse_tree(False))
            else:
                raise ParseError(f"unexpected character {s[pos]!r}", pos)
        if pos >= len(s):
            raise ParseError("expected ')'", pos)
        pos += 1
        return MarkedTree(tuple(children), marked)

    if s.startswith("*"):
        raise InvalidMark("the root cannot carry a mark")
    tree = parse_tree(False)
    if pos != len(s):
        raise ParseError("trailing input", pos)
    return tree


def stats(tree: MarkedTree) -> TreeStats:
    """Node count, height, deepest-node count and marks, in one traversal."""
    nodes = marks = 0
    height = deepest = 0
    stack = [(tree, 1)]
    while stack:
        node, level = stack.pop()
        nodes += 1
        marks += node.marked
        if level > height:
            height, deepest = level, 1
        elif level == height:
            deepest += 1
        stack.extend((c, level + 1) for c in node.children)
    return TreeStats(nodes, height, deepest, marks)


@lru_cache(maxsize=None)
def _plain_forests(n: int) -> tuple[tuple[MarkedTree, ...], ...]:
    """Child lists with ``n`` nodes in total and no marked child."""
    if n == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for k in range(1, n + 1)
        for first in _trees(k)
        for rest in _plain_forests(n - k)
    )


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[tuple[MarkedTree, ...], ...]:
    """All child lists with ``n`` nodes; only the last child may be marked."""
    out = list(_plain_forests(n))
    for k in range(2, n + 1):
        for last in _trees(k):
            marked = MarkedTree(last.children, True)
            out.extend(prefix + (marked,) for prefix in _plain_forests(n - k))
    return tuple(out)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[MarkedTree, ...]:
    return tuple(MarkedTree(f) for f in _forests(n - 1))


def iter_trees(n: int) -> Iterator[MarkedTree]:
    """Yield every marked ordered tree with ``n`` nodes (unsorted)."""
    if n < 1:
        raise SizeZero("trees have at least one node")
    yield from _trees(n)


def generate(n: int, bound: int = MAX_GENERATE) -> list[MarkedTree]:
    """All marked ordered trees with ``n`` nodes, sorted by encoding."""
    if n < 1:
        raise SizeZero("trees have at least one node")
    if n > bound:
        raise SizeTooLarge(f"refusing to materialize trees of size {n} > {bound}")
    return sorted(_trees(n), key=encode)


def deepest_polynomial(n: int, bound: int = MAX_GENERATE) -> tuple[int, ...]:
    """Coefficient list of ``sum over trees of size n of t^deepest``."""
    poly = [0] * (n + 1)
    for tree in generate(n, bound):
        poly[stats(tree).deepest] += 1
    while poly and not poly[-1]:
        poly.pop()
    return tuple(poly)
