"""Grafting composition of labelled rooted trees and its linear span.

The composition of two trees at a vertex is a sum over all ways of
regrafting the displaced children onto the inserted tree; each choice
is a graft map.  Sums live in :class:`TreeSum`, formal integer
combinations of same-arity trees.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping

from .trees import (
    LabelledRootedTree,
    TreeError,
    degree,
    gap,
    epsilon,
    in_vertices,
    parse_tree,
)

GraftMap = Mapping[int, int]


def _check_compose_args(
    tree: LabelledRootedTree, i: int, inserted: LabelledRootedTree
) -> None:
    if not (tree.is_standard and inserted.is_standard):
        raise TreeError("composition is defined on standard trees")
    if not 1 <= i <= tree.n:
        raise TreeError(f"position {i} out of range for arity {tree.n}")


def graft_compose(
    tree: LabelledRootedTree,
    i: int,
    inserted: LabelledRootedTree,
    f: GraftMap,
) -> LabelledRootedTree:
    """Substitute ``inserted`` for vertex i, regrafting children by f.

    Labels of ``inserted`` shift up by i-1 and labels of ``tree`` above i
    shift up by m-1, so the result is standard of arity n+m-1.  Each
    child j of i becomes a child of the shifted vertex f(j)+i-1.
    """
    _check_compose_args(tree, i, inserted)
    m = inserted.n
    children_of_i = in_vertices(tree, i)
    if set(f) != set(children_of_i):
        raise TreeError("graft map must be total on the children of i")
    for j, target in f.items():
        if not 1 <= target <= m:
            raise TreeError(f"graft target {target} out of range for arity {m}")

    def shift(v: int) -> int:
        return v if v < i else v + m - 1

    parent: dict[int, int | None] = {}
    for v, p in inserted.parent_map().items():
        parent[v + i - 1] = p + i - 1 if p is not None else None
    out = tree.parent_of(i)
    if out is not None:
        parent[inserted.root + i - 1] = shift(out)
    for v, p in tree.parent_map().items():
        if v == i:
            continue
        if p == i:
            parent[shift(v)] = f[v] + i - 1
        elif p is not None:
            parent[shift(v)] = shift(p)
        else:
            parent[shift(v)] = None
    root = inserted.root + i - 1 if tree.root == i else shift(tree.root)
    # grafting two valid trees always yields a valid tree
    return LabelledRootedTree._from_valid_parent(parent, root)


def graft_maps(
    tree: LabelledRootedTree, i: int, m: int
) -> Iterator[dict[int, int]]:
    """All maps from the children of i into [m], lexicographic by child label."""
    children = sorted(in_vertices(tree, i))
    for targets in itertools.product(range(1, m + 1), repeat=len(children)):
        yield dict(zip(children, targets))


class TreeSum:
    """A formal integer combination of trees of one common arity.

    Zero coefficients are dropped eagerly, so equality of sums is
    equality of their term maps.  Instances are immutable.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(
        self, arity: int, terms: Mapping[LabelledRootedTree, int] | None = None
    ):
        self._arity = arity
        clean: dict[LabelledRootedTree, int] = {}
        for tree, coeff in (terms or {}).items():
            if tree.n != arity:
                raise TreeError(
                    f"term {tree} has arity {tree.n}, expected {arity}"
                )
            if coeff:
                clean[tree] = coeff
        self._terms = clean

    @classmethod
    def single(cls, tree: LabelledRootedTree, coeff: int = 1) -> "TreeSum":
        return cls(tree.n, {tree: coeff})

    @property
    def arity(self) -> int:
        return self._arity

    def coefficient(self, tree: LabelledRootedTree) -> int:
        return self._terms.get(tree, 0)

    def terms(self) -> list[tuple[LabelledRootedTree, int]]:
        """Terms sorted by canonical tree string."""
        return sorted(self._terms.items(), key=lambda item: str(item[0]))

    def trees(self) -> set[LabelledRootedTree]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TreeSum") -> "TreeSum":
        if other._arity != self._arity:
            raise TreeError("cannot add sums of different arities")
        merged = dict(self._terms)
        for tree, coeff in other._terms.items():
            merged[tree] = merged.get(tree, 0) + coeff
        return TreeSum(self._arity, merged)

    def __neg__(self) -> "TreeSum":
        return TreeSum(self._arity, {t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "TreeSum") -> "TreeSum":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "TreeSum":
        return TreeSum(self._arity, {t: scalar * c for t, c in self._terms.items()})

    def map_trees(self, fn) -> "TreeSum":
        """Apply fn to each basis tree, merging coefficients on collisions."""
        merged: dict[LabelledRootedTree, int] = {}
        for tree, coeff in self._terms.items():
            image = fn(tree)
            merged[image] = merged.get(image, 0) + coeff
        return TreeSum(self._arity, merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeSum):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._arity, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (tree, coeff) in enumerate(self.terms()):
            if k == 0:
                parts.append(f"{coeff}*{tree}")
            elif coeff > 0:
                parts.append(f" + {coeff}*{tree}")
            else:
                parts.append(f" - {-coeff}*{tree}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"TreeSum({self!s})"


def parse_tree_sum(text: str) -> TreeSum:
    """Inverse of ``str(TreeSum)`` for nonzero sums; "0" needs an arity, so rejects."""
    s = text.strip()
    if not s or s == "0":
        raise TreeError("cannot parse a zero sum without an arity")
    # split on " + " / " - " separators between terms
    chunks: list[tuple[int, str]] = []
    sign = 1
    buf = s
    while buf:
        plus = buf.find(" + ")
        minus = buf.find(" - ")
        cut = min(p for p in (plus, minus) if p >= 0) if max(plus, minus) >= 0 else -1
        if cut == -1:
            chunks.append((sign, buf))
            break
        chunks.append((sign, buf[:cut]))
        sign = 1 if buf[cut : cut + 3] == " + " else -1
        buf = buf[cut + 3 :]
    terms: dict[LabelledRootedTree, int] = {}
    arity = None
    for sgn, chunk in chunks:
        coeff_text, _, tree_text = chunk.partition("*")
        if not tree_text:
            raise TreeError(f"malformed term {chunk!r}")
        tree = parse_tree(tree_text)
        if arity is None:
            arity = tree.n
        terms[tree] = terms.get(tree, 0) + sgn * int(coeff_text)
    assert arity is not None
    return TreeSum(arity, terms)


def compose_pl(
    tree: LabelledRootedTree, i: int, inserted: LabelledRootedTree
) -> TreeSum:
    """Sum of graft compositions over all graft maps, each with coefficient 1."""
    _check_compose_args(tree, i, inserted)
    terms: dict[LabelledRootedTree, int] = {}
    for f in graft_maps(tree, i, inserted.n):
        term = graft_compose(tree, i, inserted, f)
        terms[term] = terms.get(term, 0) + 1
    return TreeSum(tree.n + inserted.n - 1, terms)


def compose_pl_linear(a: TreeSum, i: int, b: TreeSum) -> TreeSum:
    """Bilinear extension of :func:`compose_pl` to formal sums."""
    result = TreeSum(a.arity + b.arity - 1)
    for t, ct in a.terms():
        for s, cs in b.terms():
            result = result + (ct * cs) * compose_pl(t, i, s)
    return result


def min_term(
    tree: LabelledRootedTree, i: int, inserted: LabelledRootedTree
) -> LabelledRootedTree:
    """The unique degree-minimal term of the composition."""
    from .set_operads import f_min_map

    return graft_compose(tree, i, inserted, f_min_map(tree, i, inserted.n))


def max_term(
    tree: LabelledRootedTree, i: int, inserted: LabelledRootedTree
) -> LabelledRootedTree:
    """The unique degree-maximal term of the composition."""
    from .set_operads import f_max_map

    return graft_compose(tree, i, inserted, f_max_map(tree, i, inserted.n))


def degree_bounds(
    tree: LabelledRootedTree, i: int, inserted: LabelledRootedTree
) -> tuple[int, int]:
    """Exact lower and upper bounds for term degrees of the composition."""
    _check_compose_args(tree, i, inserted)
    m = inserted.n
    lo = (
        degree(tree)
        + degree(inserted)
        + gap(tree, i) * (m - 1)
        + epsilon(tree, i, m, inserted.root)
    )
    hi = lo + len(in_vertices(tree, i)) * (m - 1)
    return lo, hi


def check_extremal_terms(max_arity: int) -> list[str]:
    """Verify min/max uniqueness and bound attainment over small arities.

    For every (T, i, S) with arities up to max_arity, the degrees of the
    composition terms must attain the exact bounds, each at exactly one
    graft map, namely the extremal maps.  Returns failure descriptions.
    """
    from .trees import enumerate_trees

    failures: list[str] = []
    basis = {n: list(enumerate_trees(n)) for n in range(1, max_arity + 1)}
    for n in range(1, max_arity + 1):
        for t in basis[n]:
            for i in range(1, n + 1):
                for m in range(1, max_arity + 1):
                    for s in basis[m]:
                        lo, hi = degree_bounds(t, i, s)
                        degs = [
                            degree(graft_compose(t, i, s, f))
                            for f in graft_maps(t, i, m)
                        ]
                        ok = (
                            min(degs) == lo
                            and max(degs) == hi
                            and degs.count(lo) == 1
                            and degs.count(hi) == 1
                            and degree(min_term(t, i, s)) == lo
                            and degree(max_term(t, i, s)) == hi
                        )
                        # a degenerate spectrum is fine only when lo == hi
                        if lo == hi:
                            ok = len(degs) == 1 and degs[0] == lo
                        if not ok:
                            failures.append(
                                f"T={t} i={i} S={s} bounds=({lo},{hi}) degrees={sorted(degs)}"
                            )
    return failures


def pre_lie_associator(mu: LabelledRootedTree) -> TreeSum:
    """The associator (mu o_1 mu) - (mu o_2 mu) of a two-vertex tree."""
    return compose_pl(mu, 1, mu) - compose_pl(mu, 2, mu)


def check_pre_lie_relation() -> bool:
    """Right-symmetry of the associator for the generating two-vertex tree.

    Swapping the last two inputs is the label transposition (2 3); the
    product is pre-Lie exactly when the associator is fixed by it.
    """
    from .trees import act

    mu = parse_tree("1(2)")
    assoc = pre_lie_associator(mu)
    swap = {1: 1, 2: 3, 3: 2}
    return assoc.map_trees(lambda t: act(swap, t)) == assoc
