import pytest
from hypothesis import given, settings, strategies as st

from slidingsuffix import SlidingSuffixTree
from slidingsuffix import checks
from slidingsuffix.oracle import naive_lrs, naive_suffix_tree

from conftest import build, node_by_string


# -- construction ----------------------------------------------------------

def test_new_tree_is_root_only():
    tree = SlidingSuffixTree(5, mode="plp")
    assert tree.lrs_len() == 0
    assert sum(1 for _ in tree.iter_nodes()) == 1
    assert len(tree) == 0


def test_capacity_one_tree():
    tree = SlidingSuffixTree(1, mode="plp")
    tree.append("a")
    assert tree.window_bytes() == b"a"
    assert checks.sketch(tree).leaf_starts == (1,)


def test_zero_capacity_rejected():
    with pytest.raises(ValueError):
        SlidingSuffixTree(0)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        SlidingSuffixTree(4, mode="bogus")


def test_modes_build_identical_topology():
    plp = SlidingSuffixTree(6, mode="plp")
    credit = SlidingSuffixTree(6, mode="credit")
    for step, ch in enumerate(b"abcabcababab"):
        if plp.window.full:
            plp.delete_front()
            credit.delete_front()
        plp.append(ch)
        credit.append(ch)
        assert checks.sketch(plp) == checks.sketch(credit)
        assert plp.lrs_len() == credit.lrs_len()


# -- append ------------------------------------------------------------------

def test_append_builds_abaca_tree():
    tree = build("abaca")
    sk = checks.sketch(tree)
    assert sk.internal_strings == (b"", b"a")
    assert sk.leaf_starts == (1, 2, 3, 4)
    assert tree.lrs_len() == 1


def test_append_to_empty_tree():
    tree = SlidingSuffixTree(3)
    tree.append("q")
    assert checks.sketch(tree) == naive_suffix_tree(b"q")
    assert (tree.ins is tree.root) and tree.proj == 0


def test_append_creating_several_leaves_at_once():
    tree = build("aaa", capacity=4)
    assert checks.sketch(tree).leaf_starts == (1,)
    before = tree.counters.leaves_created
    tree.append("b")
    assert tree.counters.leaves_created - before == 3
    assert checks.sketch(tree).leaf_starts == (1, 2, 3, 4)
    assert checks.sketch(tree) == naive_suffix_tree(b"aaab")


def test_append_on_full_window_rejected():
    tree = build("ab", capacity=2)
    with pytest.raises(ValueError):
        tree.append("c")


def test_every_internal_node_gets_suffix_link():
    tree = build("mississippi")
    for node in tree.iter_nodes():
        if node.children is not None and node.parent is not None:
            assert node.suffix_link is not None


# -- canonize ----------------------------------------------------------------

def test_canonize_identity_when_on_node():
    tree = build("ab")
    assert tree.proj == 0
    assert tree.canonize() is tree.ins


def test_canonize_descends_to_existing_node():
    tree = build("abaca")
    # the tracked suffix "a" is spelled by an internal node one edge down
    assert tree.lrs_len() == 1
    got = tree.canonize()
    assert got is tree.ins
    assert got is node_by_string(tree, "a")
    assert tree.proj == 0


def test_canonize_stays_put_on_long_leaf_edge():
    tree = build("aaaa")
    assert tree.lrs_len() == 3
    got = tree.canonize()
    assert tree.ins is tree.root and tree.proj == 3
    assert got.children is None and got.spos == 1


# -- delete_front -------------------------------------------------------------

def test_delete_keeps_moved_locus_representation():
    tree = build("axazaz")
    assert tree.lrs_len() == 2  # "az"
    node_a = node_by_string(tree, "a")
    assert tree.canonize().children is None and tree.ins is node_a
    tree.delete_front()
    # same repeating suffix, but its locus is now counted from the root
    # because the edge it sat on was merged
    assert tree.window_bytes() == b"xazaz"
    assert tree.lrs_len() == 2
    assert tree.ins is tree.root and tree.proj == 2
    assert checks.sketch(tree) == naive_suffix_tree(b"xazaz")


def test_delete_then_append_reaches_bacab():
    tree = build("abaca")
    tree.delete_front()
    assert checks.sketch(tree).leaf_starts == (1, 2, 3)
    assert checks.sketch(tree) == naive_suffix_tree(b"baca")
    tree.append("b")
    assert tree.window_bytes() == b"bacab"
    assert checks.sketch(tree) == naive_suffix_tree(b"bacab")


def test_delete_shortens_leaf_in_place():
    tree = build("aa")
    assert tree.lrs_len() == 1
    before = tree.counters.leaves_deleted
    tree.delete_front()
    assert tree.window_bytes() == b"a"
    assert checks.sketch(tree).leaf_starts == (1,)  # relabeled, spos now 2
    assert tree.lrs_len() == 0
    assert tree.counters.leaves_deleted == before  # no structural churn
    assert tree.counters.leaves_created == 1  # the relabel created nothing
    assert tree.leaf_at(2) is not None  # the surviving leaf now starts at 2


def test_delete_to_empty_and_refill():
    tree = build("ab", capacity=4)
    tree.delete_front()
    tree.delete_front()
    assert len(tree) == 0
    assert sum(1 for _ in tree.iter_nodes()) == 1
    with pytest.raises(ValueError):
        tree.delete_front()
    tree.append("z")
    assert checks.sketch(tree) == naive_suffix_tree(b"z")


# -- queries -------------------------------------------------------------------

def test_lrs_len_matches_oracle_examples():
    assert SlidingSuffixTree(3).lrs_len() == 0
    assert build("abaca").lrs_len() == naive_lrs(b"abaca") == 1
    assert build("aaaa").lrs_len() == naive_lrs(b"aaaa") == 3


def test_edge_label_for_leaf_under_root():
    tree = build("ab")
    for leaf_key in (ord("a"), ord("b")):
        leaf = tree.root.children[leaf_key]
        lo, hi = tree.edge_label(leaf)
        assert (lo, hi) == (leaf.spos, tree.head)


def test_edge_label_rejects_root():
    tree = build("ab")
    with pytest.raises(ValueError):
        tree.edge_label(tree.root)


def test_edge_labels_reconstruct_every_edge():
    tree = build("abaab")
    win = tree.window
    expected = naive_suffix_tree(b"abaab")
    assert checks.sketch(tree) == expected
    for node in tree.iter_nodes():
        if node.parent is None:
            continue
        lo, hi = tree.edge_label(node)
        label = win.substring(lo, hi)
        assert len(label) >= 1
        if node.children is not None:
            assert len(label) == node.depth - node.parent.depth


def test_leafptr_returns_leaf_itself():
    tree = build("abaca")
    leaf = tree.root.children[ord("b")]
    assert leaf.children is None
    assert tree.leafptr(leaf) is leaf


def test_leafptr_is_live_descendant_in_both_modes():
    for mode in ("plp", "credit"):
        tree = build("abcabcabadadc", capacity=8, mode=mode)
        for node in tree.iter_nodes():
            if node.children is None or not node.children:
                continue
            leaf = tree.leafptr(node)
            assert leaf.children is None
            cur = leaf
            while cur is not None and cur is not node:
                cur = cur.parent
            assert cur is node


# -- whole-tree invariants -----------------------------------------------------

def run_stream(mode, caps, stream, deletes_at):
    tree = SlidingSuffixTree(caps, mode=mode)
    for i, sym in enumerate(stream):
        if tree.window.full or i in deletes_at:
            if len(tree):
                tree.delete_front()
        tree.append(sym)
        yield tree


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="abcd", min_size=1, max_size=60),
       st.integers(1, 10),
       st.sets(st.integers(0, 59)),
       st.sampled_from(["plp", "credit"]))
def test_tree_matches_oracle_after_every_event(text, cap, deletes_at, mode):
    stream = text.encode()
    for tree in run_stream(mode, cap, stream, deletes_at):
        assert checks.structural_violations(tree) == []
        assert checks.oracle_violations(tree) == []
        assert checks.pointer_violations(tree, deep=True) == []
        assert checks.counter_violations(tree) == []


def test_leaf_set_is_exactly_the_long_suffixes():
    tree = build("abracadabra")
    sk = checks.sketch(tree)
    lrs = tree.lrs_len()
    assert sk.leaf_starts == tuple(range(1, len(tree) - lrs + 1))


def test_node_churn_stays_linear():
    tree = SlidingSuffixTree(16)
    stream = (b"abcd" * 64)[:256]
    for sym in stream:
        tree.slide(sym)
    assert tree.counters.churn() <= 4 * tree.window.head
