"""Factorization of trees under the degree-maximal composition.

A tree is decomposable when some label interval [a, b] sits inside it
as the image of a non-trivial composition at position a; the witness
conditions below characterize that exactly.  Repeated splitting
factors any tree into indecomposable generators, recorded as a planar
operation tree, and evaluation maps operation trees back.  Evaluation
is injective (the operad is free on the indecomposables), which the
verifier checks by exhaustive enumeration at small arity.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional

from .trees import (
    LabelledRootedTree,
    TreeError,
    enumerate_trees,
    full_subtree,
    order_relabel,
    restrict,
)
from .set_operads import SET_COMPOSE, compose_max


class Witness(NamedTuple):
    """An interval [a, b] along which a tree splits, with block root c."""

    a: int
    b: int
    c: int


def _witness_at(tree: LabelledRootedTree, a: int, b: int) -> Optional[Witness]:
    # (i) the interval must induce a single connected block
    block = restrict(tree, range(a, b + 1))
    if len(block.components) != 1:
        return None
    c = block.components[0].root
    descendants = set(full_subtree(tree, c).labels)
    # (ii) the whole interval lies under c ...
    if not set(range(a, b + 1)) <= descendants:
        return None
    # ... and everything else under c hangs off a or b, with root labels
    # outside the interval on the correct side: (iii) at a, (iv) at b
    outside = descendants - set(range(a, b + 1))
    for v in outside:
        p = tree.parent_of(v)
        if p in (a, b):  # v is the root of a grafted subtree
            if p == a and not v > b:
                return None
            if p == b and not v < a:
                return None
        elif p not in outside:
            return None
    return Witness(a, b, c)


def decomposition_witnesses(tree: LabelledRootedTree) -> list[Witness]:
    """All split witnesses, in lexicographic (a, b) order."""
    if not tree.is_standard:
        raise TreeError("decomposition is defined on standard trees")
    n = tree.n
    found = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (a, b) == (1, n):
                continue
            w = _witness_at(tree, a, b)
            if w is not None:
                found.append(w)
    return found


def is_indecomposable(tree: LabelledRootedTree) -> bool:
    """True when no witness exists; only defined for arity >= 2."""
    if tree.n < 2:
        raise TreeError("generators have arity at least 2")
    n = tree.n
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (a, b) == (1, n):
                continue
            if _witness_at(tree, a, b) is not None:
                return False
    return True


def split(
    tree: LabelledRootedTree, witness: Witness
) -> tuple[LabelledRootedTree, LabelledRootedTree]:
    """Invert a composition: contract the block [a, b] back to one vertex.

    Returns (outer, inner) with ``compose_max(outer, a, inner) == tree``.
    """
    a, b, c = witness
    if _witness_at(tree, a, b) != witness:
        raise TreeError(f"{witness} is not a witness for {tree}")
    inner = order_relabel(
        restrict(tree, range(a, b + 1)).components[0], range(1, b - a + 2)
    )
    width = b - a

    def shift(v: int) -> int:
        return v if v < a else v - width

    block = set(range(a, b + 1))
    parent: dict[int, int | None] = {}
    for v, p in tree.parent_map().items():
        if v in block:
            continue
        if p in block:
            parent[shift(v)] = a
        elif p is None:
            parent[shift(v)] = None
        else:
            parent[shift(v)] = shift(p)
    p_c = tree.parent_of(c)
    parent[a] = shift(p_c) if p_c is not None else None
    return LabelledRootedTree(parent), inner


@dataclass(frozen=True)
class OperationTree:
    """A planar word in the free operad: a generator with one slot per input.

    Each slot is either None (a plain input) or a nested OperationTree.
    Generators have arity >= 2, so the word is automatically reduced.
    """

    node: LabelledRootedTree
    slots: tuple[Optional["OperationTree"], ...]

    def __post_init__(self):
        if len(self.slots) != self.node.n:
            raise TreeError(
                f"generator {self.node} needs {self.node.n} slots, got {len(self.slots)}"
            )

    @classmethod
    def leaf_node(cls, generator: LabelledRootedTree) -> "OperationTree":
        return cls(generator, (None,) * generator.n)

    @property
    def arity(self) -> int:
        return sum(1 if s is None else s.arity for s in self.slots)

    def __str__(self) -> str:
        if all(s is None for s in self.slots):
            return str(self.node)
        inner = ", ".join("_" if s is None else str(s) for s in self.slots)
        return f"{self.node}[{inner}]"


def evaluate(
    word: OperationTree, compose: Callable = compose_max
) -> LabelledRootedTree:
    """Fold an operation tree bottom-up with the given set composition."""
    result = word.node
    # rightmost slot first, so earlier input positions stay put
    for idx in range(len(word.slots), 0, -1):
        slot = word.slots[idx - 1]
        if slot is not None:
            result = compose(result, idx, evaluate(slot, compose))
    return result


def _insert_at_input(
    word: Optional[OperationTree], position: int, sub: OperationTree
) -> OperationTree:
    """Plug ``sub`` into the input at the given leaf position (1-based)."""
    if word is None:
        if position != 1:
            raise TreeError("input position out of range")
        return sub
    offset = 0
    for idx, slot in enumerate(word.slots):
        width = 1 if slot is None else slot.arity
        if offset < position <= offset + width:
            new_slot = _insert_at_input(slot, position - offset, sub)
            slots = word.slots[:idx] + (new_slot,) + word.slots[idx + 1 :]
            return OperationTree(word.node, slots)
        offset += width
    raise TreeError("input position out of range")


def factorize(
    tree: LabelledRootedTree, reverse_scan: bool = False
) -> OperationTree:
    """Express a tree as an operation tree over indecomposable generators.

    Splits recursively at one witness per step; the scan order is a
    tie-break only, since the full factorization is unique.
    """
    if tree.n < 2:
        raise TreeError("only trees of arity >= 2 factorize")
    witnesses = decomposition_witnesses(tree)
    if not witnesses:
        return OperationTree.leaf_node(tree)
    w = witnesses[-1] if reverse_scan else witnesses[0]
    outer, inner = split(tree, w)
    return _insert_at_input(
        factorize(outer, reverse_scan), w.a, factorize(inner, reverse_scan)
    )


@functools.lru_cache(maxsize=None)
def indecomposables(n: int) -> tuple[LabelledRootedTree, ...]:
    """All indecomposable trees of arity n, sorted by canonical string."""
    if n < 2:
        raise TreeError("generators have arity at least 2")
    found = [t for t in enumerate_trees(n) if is_indecomposable(t)]
    return tuple(sorted(found, key=str))


def count_indecomposables(n: int) -> int:
    return len(indecomposables(n))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ordered tuples of positive integers summing to total, lexicographic
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def operation_trees(
    n: int, min_generator_arity: int = 2
) -> list[OperationTree]:
    """Every operation tree of total arity n over indecomposable generators.

    Deterministic order: by root generator arity, then generator, then
    slot arities lexicographically, then slot contents recursively.
    """
    if n < 2:
        return []

    @functools.lru_cache(maxsize=None)
    def rec(total: int) -> tuple[OperationTree, ...]:
        words = []
        for k in range(max(2, min_generator_arity), total + 1):
            for g in indecomposables(k):
                for shape in _compositions(total, k):
                    options = [
                        (None,) if p == 1 else rec(p) for p in shape
                    ]
                    words.extend(
                        OperationTree(g, combo)
                        for combo in _product(options)
                    )
        return tuple(words)

    return list(rec(n))


def _product(options: list[tuple]) -> Iterator[tuple]:
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail


class FreenessReport(NamedTuple):
    ok: bool
    constructions: int
    distinct: int
    expected: int


def verify_freeness(n: int) -> FreenessReport:
    """Check that evaluation is a bijection onto all trees of arity n."""
    words = operation_trees(n)
    images = {evaluate(w) for w in words}
    expected = n ** (n - 1)
    ok = len(words) == expected and len(images) == expected
    return FreenessReport(ok, len(words), len(images), expected)


def find_collision(
    kind: str, n: int, min_generator_arity: int = 2
) -> Optional[tuple[OperationTree, OperationTree]]:
    """Two distinct operation trees with equal evaluation, if any exist.

    kind selects the set composition used for evaluation (min or nap;
    max never collides).  Returns the first collision in enumeration
    order, or None.
    """
    if kind not in SET_COMPOSE:
        raise TreeError(f"unknown operad kind {kind!r}")
    compose = SET_COMPOSE[kind]
    seen: dict[LabelledRootedTree, OperationTree] = {}
    for word in operation_trees(n, min_generator_arity):
        image = evaluate(word, compose)
        if image in seen:
            return seen[image], word
        seen[image] = word
    return None
