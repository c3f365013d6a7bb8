"""Reduction of bracketed generator words to the standard representative.

A tree is an ``int`` (a generator index, 0-based) or a pair ``(left, right)``.
Reduction runs three phases and multiplies the unit of every move made:

1. while the letters are out of index order, bring an adjacent inverted pair
   under a common node by re-association and swap it (cost sigma^-1);
2. left-associate;
3. while some generator occurs at least n_i times, group n_i copies into a
   subtree and contract it to the unit object (cost 1).

The returned unit is the scalar of the composite morphism from the given
word to the standard one.  Units are tracked as exponents of zeta_N, which
is exact for presentations satisfying the order conditions.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Union

from ..abelian import FiniteAbelianGroup
from ..exactring import RingElement
from .presentation import (
    CategoryPresentation,
    InvalidPresentation,
    _require_valid,
    alpha_unchecked,
    sigma_pair_unchecked,
)

Tree = Union[int, tuple]
Path = tuple[int, ...]


def validate_tree(tree: Tree, rank: int) -> None:
    if isinstance(tree, bool):
        raise ValueError("tree leaves must be generator indices")
    if isinstance(tree, int):
        if not 0 <= tree < rank:
            raise ValueError(f"leaf {tree} is not a generator index below {rank}")
        return
    if not isinstance(tree, tuple) or len(tree) != 2:
        raise ValueError(f"internal node must have exactly two children: {tree!r}")
    validate_tree(tree[0], rank)
    validate_tree(tree[1], rank)


def letters(tree: Tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    return letters(tree[0]) + letters(tree[1])


def left_nested(word: list[int]) -> Tree:
    tree: Tree = word[0]
    for x in word[1:]:
        tree = (tree, x)
    return tree


def _get(tree: Tree, path: Path) -> Tree:
    for step in path:
        tree = tree[step]
    return tree


def _put(tree: Tree, path: Path, sub: Tree) -> Tree:
    if not path:
        return sub
    if path[0] == 0:
        return (_put(tree[0], path[1:], sub), tree[1])
    return (tree[0], _put(tree[1], path[1:], sub))


class _Reducer:
    def __init__(self, p: CategoryPresentation):
        self.p = p
        self.group: FiniteAbelianGroup = p.group
        self.ring = p.ring
        self.N = p.level

    @lru_cache(maxsize=None)
    def elem(self, tree: Tree) -> tuple[int, ...]:
        if isinstance(tree, int):
            return self.group.generator(tree)
        return self.group.op(self.elem(tree[0]), self.elem(tree[1]))

    @lru_cache(maxsize=None)
    def a_exp(self, a, b, c) -> int:
        return self.ring.root_exponent(alpha_unchecked(self.p, a, b, c))

    @lru_cache(maxsize=None)
    def s_exp(self, a, b) -> int:
        return self.ring.root_exponent(sigma_pair_unchecked(self.p, a, b))

    # elementary moves; each returns (new subtree, exponent of its unit)

    def assoc_left(self, node) -> tuple[Tree, int]:
        # X(YZ) -> (XY)Z is the inverse of alpha(x, y, z)
        x, (y, z) = node
        return ((x, y), z), -self.a_exp(self.elem(x), self.elem(y), self.elem(z))

    def assoc_right(self, node) -> tuple[Tree, int]:
        (x, y), z = node
        return (x, (y, z)), self.a_exp(self.elem(x), self.elem(y), self.elem(z))

    def swap(self, node) -> tuple[Tree, int]:
        # g_j g_i -> g_i g_j with j > i costs sigma(g_i, g_j)^-1
        x, y = node
        return (y, x), -self.s_exp(self.elem(y), self.elem(x))

    def apply(self, tree: Tree, path: Path, move) -> tuple[Tree, int]:
        sub, e = move(_get(tree, path))
        return _put(tree, path, sub), e

    # phase 1 ---------------------------------------------------------------

    def inversion_choices(self, tree: Tree) -> list[int]:
        w = letters(tree)
        return [i for i in range(len(w) - 1) if w[i] > w[i + 1]]

    def swap_adjacent(self, tree: Tree, pos: int) -> tuple[Tree, int]:
        """Re-associate so leaves pos, pos+1 share a node, then swap them."""
        total = 0
        path: Path = ()
        offset = 0
        # descend to the lowest node containing both leaves
        while True:
            node = _get(tree, path)
            nl = len(letters(node[0]))
            if pos + 1 - offset < nl:
                path += (0,)
            elif pos - offset >= nl:
                offset += nl
                path += (1,)
            else:
                break
        # now leaf pos is the last letter of the left child
        while not isinstance(_get(tree, path)[0], int):
            tree, e = self.apply(tree, path, self.assoc_right)
            total += e
            path += (1,)
        while not isinstance(_get(tree, path)[1], int):
            tree, e = self.apply(tree, path, self.assoc_left)
            total += e
            path += (0,)
        tree, e = self.apply(tree, path, self.swap)
        return tree, total + e

    # phase 2 ---------------------------------------------------------------

    def right_nodes(self, tree: Tree, path: Path = ()) -> list[Path]:
        if isinstance(tree, int):
            return []
        out = []
        if not isinstance(tree[1], int):
            out.append(path)
        out += self.right_nodes(tree[0], path + (0,))
        out += self.right_nodes(tree[1], path + (1,))
        return out

    # phase 3 ---------------------------------------------------------------

    def overfull(self, tree: Tree) -> list[int]:
        w = letters(tree)
        return [i for i, n in enumerate(self.group.orders) if w.count(i) >= n]

    def contract(self, tree: Tree, gen: int) -> tuple[Tree, int]:
        """On a sorted left-nested word, contract the first n copies of ``gen``."""
        w = letters(tree)
        n = self.group.orders[gen]
        start = w.index(gen)
        stop = start + n
        if start == 0:
            # the first n letters already form the leftmost subtree
            rest = w[stop:]
            return (left_nested(rest) if rest else None), 0
        # subtree holding prefix + n copies sits at depth len(w) - stop on the left spine
        path: Path = (0,) * (len(w) - stop)
        total = 0
        # turn ((P g) g ... g) into (P T) with T left-nested g^k, one letter at a time
        for k in range(2, n + 1):
            sub_path = path + (0,) * (n - k)
            tree, e = self.apply(tree, sub_path, self.assoc_right)
            total += e
        prefix = _get(tree, path + (0,))
        tree = _put(tree, path, prefix)
        return left_nested(letters(tree)), total


def _finish(red: _Reducer, tree: Tree | None, total: int) -> tuple[tuple[int, ...], int]:
    elem = red.group.identity() if tree is None else red.elem(tree)
    return elem, total % red.N


def _reduce(red: _Reducer, tree: Tree, choose) -> tuple[tuple[int, ...], int]:
    total = 0
    while True:
        inv = red.inversion_choices(tree)
        if not inv:
            break
        tree, e = red.swap_adjacent(tree, choose(inv))
        total += e
    while True:
        nodes = red.right_nodes(tree)
        if not nodes:
            break
        tree, e = red.apply(tree, choose(nodes), red.assoc_left)
        total += e
    while tree is not None:
        gens = red.overfull(tree)
        if not gens:
            break
        tree, e = red.contract(tree, choose(gens))
        total += e
    return _finish(red, tree, total)


def _reducer(p: CategoryPresentation, tree: Tree) -> _Reducer:
    _require_valid(p)
    if p.exponents() is None:
        raise InvalidPresentation("invariants must be powers of zeta_N")
    validate_tree(tree, p.group.rank)
    return _Reducer(p)


def reduce_word(
    p: CategoryPresentation, tree: Tree, rng: random.Random | None = None
) -> tuple[tuple[int, ...], RingElement]:
    """Group element of the word and the unit of the morphism to the standard word.

    With ``rng`` the applicable move at each step is picked at random;
    otherwise the first one is taken.
    """
    red = _reducer(p, tree)
    choose = (lambda xs: xs[0]) if rng is None else rng.choice
    elem, e = _reduce(red, tree, choose)
    return elem, p.ring.zeta(e)


def all_reductions(p: CategoryPresentation, tree: Tree) -> set[tuple[tuple[int, ...], RingElement]]:
    """Results of every maximal sequence of move choices (exponential; keep words short)."""
    red = _reducer(p, tree)
    out = set()

    def walk(choices: list[int]) -> Iterator[tuple]:
        # replay with a scripted chooser; branch on the first unscripted choice
        script = iter(choices)
        branch = []

        def choose(xs):
            try:
                return xs[next(script)]
            except StopIteration:
                branch.append(len(xs))
                return xs[0]

        result = _reduce(red, tree, choose)
        if not branch:
            yield result
            return
        # the first unscripted point: explore all alternatives there
        for k in range(branch[0]):
            yield from walk(choices + [k])

    for elem, e in walk([]):
        out.add((elem, p.ring.zeta(e)))
    return out
