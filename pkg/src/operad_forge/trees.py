"""Labelled rooted trees: parsing, enumeration, and structural queries.

Trees here are non-planar: a tree is entirely determined by its parent
map, and two trees are equal exactly when their parent maps agree.
The canonical text form ``label(children,...)`` lists children in
ascending label order, so canonical strings are equal iff the trees are.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence


class TreeError(ValueError):
    """Malformed tree text or an invalid structural argument."""


class LabelledRootedTree:
    """An immutable rooted tree with distinct positive integer labels.

    The usual case is a *standard* tree whose labels are exactly
    ``{1..n}``; restriction and subtree extraction produce trees over
    arbitrary label subsets, which are re-standardized only through
    :func:`order_relabel`.
    """

    __slots__ = ("_parent", "_children", "_root", "_key", "_text")

    def __init__(self, parent: Mapping[int, int | None]):
        if not parent:
            raise TreeError("a tree needs at least one vertex")
        roots = [v for v, p in parent.items() if p is None]
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}")
        for v, p in parent.items():
            if not isinstance(v, int) or v < 1:
                raise TreeError(f"bad label {v!r}: labels are positive integers")
            if p is not None and p not in parent:
                raise TreeError(f"vertex {v} has parent {p} outside the label set")
        self._parent = dict(parent)
        self._root = roots[0]
        children: dict[int, list[int]] = {v: [] for v in self._parent}
        for v, p in self._parent.items():
            if p is not None:
                children[p].append(v)
        self._children = {v: tuple(sorted(cs)) for v, cs in children.items()}
        # connectivity: every vertex must reach the root along parent links
        seen = {self._root}
        for v in self._parent:
            path = []
            while v not in seen:
                path.append(v)
                v = self._parent[v]  # type: ignore[assignment]
                if v is None or len(path) > len(self._parent):
                    raise TreeError("parent links do not reach the root")
            seen.update(path)
        self._key = tuple(sorted(self._parent.items()))
        self._text: str | None = None

    @classmethod
    def _from_valid_parent(
        cls, parent: dict[int, int | None], root: int
    ) -> "LabelledRootedTree":
        # internal fast path: the caller guarantees a well-formed map
        tree = cls.__new__(cls)
        tree._parent = parent
        tree._root = root
        children: dict[int, list[int]] = {v: [] for v in parent}
        for v, p in parent.items():
            if p is not None:
                children[p].append(v)
        tree._children = {v: tuple(sorted(cs)) for v, cs in children.items()}
        tree._key = tuple(sorted(parent.items()))
        tree._text = None
        return tree

    @property
    def n(self) -> int:
        """Number of vertices (the arity of the tree as an operad element)."""
        return len(self._parent)

    @property
    def root(self) -> int:
        return self._root

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self._key)

    @property
    def is_standard(self) -> bool:
        """True when the label set is exactly 1..n."""
        return self.labels == tuple(range(1, self.n + 1))

    def parent_of(self, v: int) -> int | None:
        try:
            return self._parent[v]
        except KeyError:
            raise TreeError(f"no vertex labelled {v}") from None

    def children(self, v: int) -> tuple[int, ...]:
        try:
            return self._children[v]
        except KeyError:
            raise TreeError(f"no vertex labelled {v}") from None

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (child, parent) pairs, ordered by child label."""
        for v, p in self._key:
            if p is not None:
                yield v, p

    def parent_map(self) -> dict[int, int | None]:
        return dict(self._parent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelledRootedTree):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        if self._text is None:
            self._text = self._render(self._root)
        return self._text

    def _render(self, v: int) -> str:
        cs = self._children[v]
        if not cs:
            return str(v)
        return f"{v}({','.join(self._render(c) for c in cs)})"

    def __repr__(self) -> str:
        return f"LabelledRootedTree({self!s})"


@dataclass(frozen=True)
class Forest:
    """Disjoint rooted trees over disjoint label sets, sorted by root label."""

    components: tuple[LabelledRootedTree, ...]

    def __str__(self) -> str:
        return " | ".join(str(c) for c in self.components)


def parse_tree(text: str) -> LabelledRootedTree:
    """Parse the canonical ``label(children,...)`` form into a standard tree.

    The label set must be exactly ``{1..n}``.
    """
    s = text.strip()
    if not s:
        raise TreeError("empty input")
    pos = 0

    def read_label() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise TreeError(f"expected a label at position {start} in {text!r}")
        return int(s[start:pos])

    parent: dict[int, int | None] = {}

    def read_tree(up: int | None) -> None:
        nonlocal pos
        label = read_label()
        if label in parent:
            raise TreeError(f"duplicate label {label} in {text!r}")
        parent[label] = up
        if pos < len(s) and s[pos] == "(":
            pos += 1
            while True:
                read_tree(label)
                if pos < len(s) and s[pos] == ",":
                    pos += 1
                    continue
                break
            if pos >= len(s) or s[pos] != ")":
                raise TreeError(f"expected ')' at position {pos} in {text!r}")
            pos += 1

    read_tree(None)
    if pos != len(s):
        raise TreeError(f"trailing text at position {pos} in {text!r}")
    if sorted(parent) != list(range(1, len(parent) + 1)):
        raise TreeError(f"labels must be exactly 1..{len(parent)} in {text!r}")
    return LabelledRootedTree(parent)


def render_tree(tree: LabelledRootedTree) -> str:
    """Canonical text with children in ascending label order."""
    return str(tree)


def tree_to_json(tree: LabelledRootedTree) -> str:
    """JSON form ``{"n": n, "parent": [...]}`` with 0 marking the root."""
    if not tree.is_standard:
        raise TreeError("JSON form is defined for standard trees only")
    parents = [tree.parent_of(v) or 0 for v in range(1, tree.n + 1)]
    return json.dumps({"n": tree.n, "parent": parents})


def tree_from_json(text: str) -> LabelledRootedTree:
    data = json.loads(text)
    n, parents = data["n"], data["parent"]
    if len(parents) != n:
        raise TreeError("parent array length disagrees with n")
    return LabelledRootedTree(
        {v: (p if p != 0 else None) for v, p in zip(range(1, n + 1), parents)}
    )


def _prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    # linear-time decode of a Prüfer sequence over [n] into tree edges
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    idx = 1
    while degree[idx] != 1:
        idx += 1
    leaf = idx
    for v in seq:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < idx:
            leaf = v
        else:
            idx += 1
            while degree[idx] != 1:
                idx += 1
            leaf = idx
    edges.append((leaf, n))
    return edges


def _rooted(edges: list[tuple[int, int]], n: int, root: int) -> LabelledRootedTree:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent: dict[int, int | None] = {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    return LabelledRootedTree._from_valid_parent(parent, root)


def enumerate_trees(n: int) -> Iterator[LabelledRootedTree]:
    """Yield every standard tree on n vertices exactly once (n^(n-1) of them).

    Uses the Prüfer bijection for the underlying free tree and then every
    choice of root, so the stream is duplicate-free by construction.
    """
    if n < 1:
        raise TreeError("arity must be at least 1")
    if n == 1:
        yield LabelledRootedTree({1: None})
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        edges = _prufer_edges(seq, n)
        for root in range(1, n + 1):
            yield _rooted(edges, n, root)


def degree(tree: LabelledRootedTree) -> int:
    """Sum of |a - b| over all edges {a, b}."""
    return sum(abs(v - p) for v, p in tree.edges())


def in_vertices(tree: LabelledRootedTree, i: int) -> frozenset[int]:
    """The children of vertex i."""
    return frozenset(tree.children(i))


def restrict(tree: LabelledRootedTree, keep: Sequence[int] | set[int]) -> Forest:
    """Induced forest on the kept labels.

    Each component is rooted at its vertex closest to the ambient root;
    labels are preserved.
    """
    kept = set(keep)
    if not kept:
        raise TreeError("cannot restrict to an empty label set")
    foreign = kept - set(tree.labels)
    if foreign:
        raise TreeError(f"labels {sorted(foreign)} are not in the tree")
    maps: dict[int, dict[int, int | None]] = {}

    def component_root(v: int) -> int:
        # walk up until the parent leaves the kept set
        while True:
            p = tree.parent_of(v)
            if p is None or p not in kept:
                return v
            v = p

    roots = {v: component_root(v) for v in kept}
    for v in kept:
        r = roots[v]
        p = tree.parent_of(v)
        maps.setdefault(r, {})[v] = p if (v != r and p in kept) else None
    components = tuple(
        LabelledRootedTree(maps[r]) for r in sorted(maps)
    )
    return Forest(components)


def full_subtree(tree: LabelledRootedTree, c: int) -> LabelledRootedTree:
    """The subtree on all descendants of c (inclusive), rooted at c."""
    if c not in tree._parent:
        raise TreeError(f"no vertex labelled {c}")
    parent: dict[int, int | None] = {c: None}
    stack = [c]
    while stack:
        v = stack.pop()
        for w in tree.children(v):
            parent[w] = v
            stack.append(w)
    return LabelledRootedTree(parent)


def order_relabel(
    tree: LabelledRootedTree, target: Sequence[int]
) -> LabelledRootedTree:
    """Relabel by the unique order-preserving bijection onto ``target``."""
    source = tree.labels
    tgt = sorted(target)
    if len(tgt) != len(source):
        raise TreeError(f"target has {len(tgt)} labels, tree has {len(source)}")
    phi = dict(zip(source, tgt))
    return LabelledRootedTree(
        {phi[v]: (phi[p] if p is not None else None) for v, p in tree.parent_map().items()}
    )


def act(sigma: Mapping[int, int], tree: LabelledRootedTree) -> LabelledRootedTree:
    """Permute the labels of a standard tree by sigma."""
    if not tree.is_standard:
        raise TreeError("permutation action is defined on standard trees")
    if sorted(sigma) != list(tree.labels) or sorted(sigma.values()) != list(tree.labels):
        raise TreeError("sigma is not a permutation of the label set")
    return LabelledRootedTree(
        {sigma[v]: (sigma[p] if p is not None else None) for v, p in tree.parent_map().items()}
    )


def gap(tree: LabelledRootedTree, i: int) -> int:
    """Count edges with neither endpoint equal to i that strictly straddle i."""
    if i not in tree._parent:
        raise TreeError(f"no vertex labelled {i}")
    count = 0
    for v, p in tree.edges():
        if v == i or p == i:
            continue
        lo, hi = (v, p) if v < p else (p, v)
        if lo < i < hi:
            count += 1
    return count


def epsilon(tree: LabelledRootedTree, i: int, m: int, s: int) -> int:
    """Boundary contribution of the edge from i to its parent.

    Zero when i is the root; otherwise s-1 or m-s depending on whether
    the parent of i lies below or above i.  Here m is the arity of the
    inserted tree and s the label of its root.
    """
    if not 1 <= s <= m:
        raise TreeError(f"root label {s} out of range for arity {m}")
    k = tree.parent_of(i)
    if k is None:
        return 0
    return s - 1 if k < i else m - s
