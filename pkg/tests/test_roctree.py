import itertools
import json

import pytest
from hypothesis import given, settings

from hopftrees.core import LinComb, ResourceLimitError, check_antipode, check_bialgebra, check_duality
from hopftrees.roctree import (TRIVIAL, ColourRangeError, RocTree, admissible_cuts, concat, counit,
                               deconcat_coproduct, dual_tree_algebra, enumerate_trees,
                               from_decorated_forest, grafting_product, graftings,
                               planted_factorization, plant, prune_count, pruning_coproduct,
                               to_decorated_forest, tree_algebra, tree_count)

from conftest import dump, trees

P = RocTree.parse


# --- independent oracles ---------------------------------------------------

def dyck_trees(n, k):
    """Every coloured Dyck word of semilength k, read as a tree code."""
    out = set()
    for word in itertools.product("()", repeat=2 * k):
        depth, ok = 0, True
        for ch in word:
            depth += 1 if ch == "(" else -1
            if depth < 0:
                ok = False
                break
        if not ok or depth:
            continue
        for colours in itertools.product(range(1, n + 1), repeat=k):
            it = iter(colours)
            code = "".join(f"({next(it)}" if ch == "(" else ")" for ch in word)
            out.add(code)
    return out


def flatten(t):
    """Edges in depth-first order as (colour, parent edge index or -1)."""
    edges = []

    def walk(tree, parent):
        for colour, sub in tree.children:
            edges.append((colour, parent))
            walk(sub, len(edges) - 1)

    walk(t, -1)
    return edges


def build(edges, chosen, top):
    """Tree on the chosen edges whose parent is ``top``, depth-first order kept."""
    return RocTree(tuple((edges[e][0], build(edges, chosen, e))
                         for e in sorted(chosen) if edges[e][1] == top))


def brute_pruning(t):
    edges = flatten(t)
    out = {}
    for mask in itertools.product((0, 1), repeat=len(edges)):
        kept = {e for e, m in enumerate(mask) if m}
        if any(edges[e][1] != -1 and edges[e][1] not in kept for e in kept):
            continue
        cut_roots = [e for e in range(len(edges)) if e not in kept and (edges[e][1] == -1 or edges[e][1] in kept)]

        def descendants(e):
            ds = {e}
            for f in range(e + 1, len(edges)):
                if edges[f][1] in ds:
                    ds.add(f)
            return ds

        branches = tuple((edges[e][0], build(edges, descendants(e), e)) for e in cut_roots)
        key = (RocTree(branches), build(edges, kept, -1))
        out[key] = out.get(key, 0) + 1
    return LinComb(out)


# --- encoding ----------------------------------------------------------------

def test_canonical_code_and_parse():
    t = RocTree(((2, RocTree(((1, TRIVIAL),))), (2, TRIVIAL)))
    assert t.code == "(2(1))(2)"
    assert P("(2(1))(2)") == t
    assert P(json.dumps(t.to_json())) == t
    assert P("•") == P("") == P(".") == TRIVIAL
    assert t.weight == 3 and t.max_colour == 2
    assert list(t.edges()) == [2, 1, 2]


@pytest.mark.parametrize("bad", ["(1", "(1))", "()", "(a)", "(1)x"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        P(bad)


def test_trees_are_immutable_and_hashable():
    t = P("(1)")
    with pytest.raises(AttributeError):
        t.children = ()
    assert {P("(1)(2)"), P("(1)(2)")} == {P("(1)(2)")}


@given(trees())
def test_parse_round_trip(t):
    assert P(t.code) == t
    assert RocTree.from_json(t.to_json()) == t


@given(trees())
def test_decorated_forest_bijection(t):
    assert from_decorated_forest(to_decorated_forest(t)) == t
    assert sum(1 for _ in _vertices(to_decorated_forest(t))) == t.weight


def _vertices(forest):
    for colour, kids in forest:
        yield colour
        yield from _vertices(kids)


def test_decorated_forest_example():
    assert to_decorated_forest(P("(2(1))(2)")) == ((2, ((1, ()),)), (2, ()))


# --- enumeration -------------------------------------------------------------

def test_tree_count_values():
    assert [tree_count(2, k) for k in range(6)] == [1, 2, 8, 40, 224, 1344]
    assert [tree_count(1, k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize("n,k", [(1, 0), (1, 4), (2, 3), (3, 3), (2, 4)])
def test_enumeration_matches_dyck_words(n, k):
    got = enumerate_trees(n, k)
    assert len(got) == len(set(got)) == tree_count(n, k)
    assert {t.code for t in got} == dyck_trees(n, k)
    assert got == sorted(got, key=RocTree.sort_key)


def test_enumeration_trivial_case():
    assert enumerate_trees(1, 0) == [TRIVIAL]


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_trees(3, 8, cap=1000)
    with pytest.raises(ValueError):
        enumerate_trees(0, 2)


# --- concatenation and planting ----------------------------------------------

def test_concatenation_example(golden):
    left, right = P("(2(1)(2))"), P("(2)(3)")
    result = LinComb.basis(concat(left, right, n=3))
    assert golden("concat") == dump({"left": left.to_json(), "right": right.to_json(),
                                     "result": result.to_json()})


def test_concat_and_plant_colour_range():
    with pytest.raises(ColourRangeError):
        concat(P("(3)"), P("(1)"), n=2)
    with pytest.raises(ColourRangeError):
        plant(TRIVIAL, 0)
    with pytest.raises(ColourRangeError):
        RocTree(((0, TRIVIAL),))


@given(trees(), trees(), trees())
def test_concat_is_associative_with_unit(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert concat(TRIVIAL, a) == a == concat(a, TRIVIAL)


@given(trees())
def test_planted_factorization(t):
    factors = planted_factorization(t)
    assert all(len(f.children) == 1 for f in factors)
    acc = TRIVIAL
    for f in factors:
        acc = concat(acc, f)
    assert acc == t


def test_plant():
    assert plant(P("(1)(2)"), 2) == P("(2(1)(2))")
    assert counit(TRIVIAL) == 1 and counit(P("(1)")) == 0


# --- pruning -----------------------------------------------------------------

def test_pruning_example(golden):
    t = P("(2(1))(2)")
    assert golden("pruning") == dump({"tree": t.to_json(), "result": pruning_coproduct(t).to_json()})
    assert len(pruning_coproduct(t)) == 6


@given(trees(max_edges=6))
def test_pruning_matches_edge_subset_oracle(t):
    assert pruning_coproduct(t) == brute_pruning(t)


@given(trees())
def test_admissible_subtree_count(t):
    # one cut per admissible subtree; the whole tree and the root are always among them
    cuts = admissible_cuts(t)
    assert (TRIVIAL, t) in cuts and (t, TRIVIAL) in cuts
    assert all(c.weight + s.weight == t.weight for c, s in cuts)


def test_pruning_of_ladder():
    assert pruning_coproduct(P("(1(2))")) == LinComb({
        (TRIVIAL, P("(1(2))")): 1, (P("(2)"), P("(1)")): 1, (P("(1(2))"), TRIVIAL): 1})


# --- deconcatenation and grafting --------------------------------------------

def test_deconcatenation_example(golden):
    t = P("(2(1))(2)")
    assert golden("deconcat") == dump({"tree": t.to_json(), "result": deconcat_coproduct(t).to_json()})


def test_grafting_example(golden):
    left, right = P("(1)(2)"), P("(2)")
    listed = sorted(graftings(left, right), key=RocTree.sort_key)
    assert len(listed) == 6
    result = grafting_product(left, right)
    assert golden("grafting") == dump({"left": left.to_json(), "right": right.to_json(),
                                       "graftings": [g.to_json() for g in listed],
                                       "result": result.to_json()})
    # each grafting counted once: the coefficients are the multiplicities of the list
    assert sum(result.values()) == len(listed)


@settings(max_examples=25)
@given(trees(max_edges=2), trees(max_edges=2))
def test_grafting_is_dual_to_pruning(t, u):
    prod = grafting_product(t, u)
    for v in enumerate_trees(2, t.weight + u.weight):
        assert prod.coeff(v) == brute_pruning(v).coeff((t, u))


@given(trees(max_edges=3), trees(max_edges=3))
def test_graftings_prune_back(t, u):
    for v in graftings(t, u):
        assert prune_count(v, t, u) >= 1


def test_grafting_on_trivial_tree_is_concatenation():
    t = P("(1(2))(2)")
    assert grafting_product(t, TRIVIAL) == LinComb.basis(t)
    assert grafting_product(TRIVIAL, t) == LinComb.basis(t)


# --- bialgebra structures ----------------------------------------------------

@pytest.mark.parametrize("n,w", [(1, 4), (2, 3), (3, 2)])
def test_concat_pruning_bialgebra(n, w):
    assert check_bialgebra(tree_algebra(n), w)


@pytest.mark.parametrize("n,w", [(1, 4), (2, 3)])
def test_grafting_deconcat_bialgebra(n, w):
    assert check_bialgebra(dual_tree_algebra(n), w)


def test_tree_structures_are_dual():
    assert check_duality(dual_tree_algebra(2), tree_algebra(2), 3)


@pytest.mark.parametrize("make", [tree_algebra, dual_tree_algebra])
def test_tree_antipodes(make):
    assert check_antipode(make(2), 3)
