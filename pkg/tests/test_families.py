import pytest

from graceful_lab.families import FamilyFilter, filter_family, generate_trees, trees_up_to
from graceful_lab.fixtures import S, T
from graceful_lab.tree import Tree, canonical_code

from oracles import prufer_classes

# OEIS A000055; the n <= 8 terms are re-derived below from the Prüfer oracle
KNOWN = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_small_counts():
    assert len(generate_trees(1)) == 1
    assert len(generate_trees(4)) == 2
    assert len(generate_trees(7)) == 11


@pytest.mark.parametrize("n", range(1, 9))
def test_generator_matches_prufer_quotient(n):
    oracle = prufer_classes(n)
    got = generate_trees(n)
    assert [canonical_code(t) for t in got] == sorted(oracle)


@pytest.mark.parametrize("n", range(1, 13))
def test_counts_and_order(n):
    got = generate_trees(n)
    assert len(got) == KNOWN[n - 1]
    codes = [canonical_code(t) for t in got]
    assert codes == sorted(codes) and len(set(codes)) == len(codes)
    assert all(t.n == n for t in got)


def test_range():
    with pytest.raises(ValueError):
        generate_trees(0)
    with pytest.raises(ValueError):
        generate_trees(13)


def test_n4_path_and_star():
    codes = {canonical_code(t) for t in generate_trees(4)}
    assert codes == {canonical_code(Tree.path(4)), canonical_code(Tree.star(3))}


def test_diameter_five_on_six_vertices_is_path():
    got = filter_family(generate_trees(6), FamilyFilter.diameter(5))
    assert [canonical_code(t) for t in got] == [canonical_code(Tree.path(6))]


def test_T_in_q2_family():
    fam = FamilyFilter.diameter(4, center_parity="even")
    codes = {canonical_code(t) for t in filter_family(generate_trees(6), fam)}
    assert canonical_code(T) in codes


def test_S_in_lobster_family():
    fam = FamilyFilter.diameter(5, max_k_distance=2)
    codes = {canonical_code(t) for t in filter_family(generate_trees(7), fam)}
    assert canonical_code(S) in codes


def test_filters():
    all7 = generate_trees(7)
    assert filter_family(all7, FamilyFilter()) == all7
    assert all(len(t.profile.centers) == 2 for t in filter_family(all7, FamilyFilter(center_count=2)))
    odd = filter_family(all7, FamilyFilter(center_parity="odd", center_count=1))
    assert all(t.degree(t.profile.centers[0]) % 2 == 1 for t in odd)
    cat = filter_family(all7, FamilyFilter(max_k_distance=1))
    # every tree on at most 6 vertices is a caterpillar; on 7 exactly one is not
    assert len(cat) == 10
    assert len(trees_up_to(4)) == 1 + 1 + 1 + 2
