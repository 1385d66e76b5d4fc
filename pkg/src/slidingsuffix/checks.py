"""Invariant sweeps: structural, pointer, and differential checks.

Every function returns a list of human-readable violation strings (empty
means the property holds), so callers can aggregate across events and
report the first failure with context.  These checks are deliberately
written against the window text and the brute-force oracle, not against
the incremental machinery they are auditing.
"""

from __future__ import annotations

from . import oracle
from .matching import find_all_counted
from .oracle import TreeSketch
from .tree import as_pattern


def sketch(tree) -> TreeSketch:
    """Canonical description of the live tree, read back through edge labels."""
    win = tree.window
    tail = win.tail
    internal = []
    leaves = []
    stack = [(tree.root, b"")]
    while stack:
        node, s = stack.pop()
        if node.children is None:
            leaves.append(node.spos - tail + 1)
            continue
        internal.append(s)
        for child in node.children.values():
            lo, hi = tree.edge_label(child)
            stack.append((child, s + win.substring(lo, hi)))
    return TreeSketch(tuple(sorted(internal)), tuple(sorted(leaves)))


def structural_violations(tree) -> list:
    """Edge/label/depth/suffix-link consistency, checked from first principles."""
    bad = []
    win = tree.window
    live = set()
    strings = {}
    stack = [(tree.root, b"")]
    while stack:
        node, s = stack.pop()
        live.add(id(node))
        strings[id(node)] = s
        if node.children is None:
            if not win.tail <= node.spos <= win.head:
                bad.append(f"leaf start {node.spos} outside window")
            if tree.leaf_at(node.spos) is not node:
                bad.append(f"leaf slot lookup broken for spos {node.spos}")
            continue
        if node.parent is not None and len(node.children) < 2:
            bad.append(f"non-root internal node {node.uid} has {len(node.children)} children")
        for key, child in node.children.items():
            if child.parent is not node:
                bad.append(f"parent link broken at node {child.uid}")
            if child.in_key != key:
                bad.append(f"in_key mismatch at node {child.uid}")
            lo, hi = tree.edge_label(child)
            if lo > hi:
                bad.append(f"empty edge label into node {child.uid}")
                continue
            if not (win.tail <= lo and hi <= win.head):
                bad.append(f"edge label <{lo},{hi}> not fresh for window "
                           f"[{win.tail}..{win.head}]")
            if lo - node.depth < win.tail:
                bad.append(f"edge label <{lo},{hi}> into node {child.uid} not strongly fresh")
            label = win.substring(lo, hi)
            if label[0] != key:
                bad.append(f"edge key {key} does not match label start {label[0]}")
            if child.children is not None and child.depth != node.depth + len(label):
                bad.append(f"depth inconsistency at node {child.uid}")
            stack.append((child, s + label))
    for node in tree.iter_nodes():
        if node.children is None or node.parent is None:
            continue
        link = node.suffix_link
        if link is None:
            bad.append(f"internal node {node.uid} lacks a suffix link")
            continue
        if id(link) not in live:
            bad.append(f"suffix link of node {node.uid} targets a dead node")
            continue
        if strings[id(link)] != strings[id(node)][1:]:
            bad.append(f"suffix link of node {node.uid} spells the wrong string")
    # active point bookkeeping
    lrs = tree.lrs_len()
    if not 0 <= lrs <= max(len(win) - 1, 0):
        bad.append(f"lrs length {lrs} impossible for window of {len(win)}")
    return bad


def edge_freshness_violations(tree) -> list:
    """Strong-freshness bounds for every edge's derived index pair.

    Label content is not re-read here; `sketch_violations` already proves
    the labels spell the oracle tree.
    """
    bad = []
    tail = tree.window.tail
    head = tree.window.head
    for node in tree.iter_nodes():
        if node.parent is None:
            continue
        lo, hi = tree.edge_label(node)
        if lo > hi or lo - node.parent.depth < tail or hi > head:
            bad.append(f"edge pair <{lo},{hi}> below depth {node.parent.depth} "
                       f"not strongly fresh in [{tail}..{head}]")
    return bad


def oracle_violations(tree) -> list:
    """Differential check of shape, leaf set, and lrs against brute force."""
    expected = oracle.naive_suffix_tree(tree.window_bytes())
    return sketch_violations(tree, expected)


def sketch_violations(tree, expected: TreeSketch) -> list:
    bad = []
    got = sketch(tree)
    if got.internal_strings != expected.internal_strings:
        bad.append(f"internal nodes {got.internal_strings!r} != oracle "
                   f"{expected.internal_strings!r}")
    if got.leaf_starts != expected.leaf_starts:
        bad.append(f"leaf starts {got.leaf_starts!r} != oracle {expected.leaf_starts!r}")
    lrs = tree.lrs_len()
    want_lrs = len(tree.window) - len(expected.leaf_starts)
    if lrs != want_lrs:
        bad.append(f"lrs length {lrs} != oracle {want_lrs}")
    return bad


def plp_violations(tree) -> list:
    """Primary/secondary flag and pointer invariants (plp mode only)."""
    bad = []
    root = tree.root
    if root.prim:
        bad.append("root must stay secondary")
    leaves = []
    internals = []
    for node in tree.iter_nodes():
        if node.children is None:
            leaves.append(node)
        else:
            internals.append(node)
            prim_children = [c for c in node.children.values() if c.prim]
            if node.children and len(prim_children) != 1:
                bad.append(f"node {node.uid} has {len(prim_children)} primary children")
    if not root.children:
        if root.plp is not root:
            bad.append("empty root must point at itself")
        return bad
    # each secondary node's pointer must equal the end of its primary path,
    # and the pointer map must hit every leaf exactly once
    targets = {}
    for node in internals:
        if node.prim:
            continue
        cur = node
        while cur.children:
            prim = [c for c in cur.children.values() if c.prim]
            if len(prim) != 1:
                cur = None  # already reported above
                break
            cur = prim[0]
        if cur is None:
            continue
        if node.plp is not cur:
            bad.append(f"pointer of node {node.uid} misses its primary path end")
            continue
        if id(cur) in targets:
            bad.append(f"leaf {cur.uid} targeted twice")
        targets[id(cur)] = node
    for leaf in leaves:
        if leaf.prim:
            if id(leaf) not in targets:
                bad.append(f"primary leaf {leaf.uid} has no pointer aimed at it")
            elif leaf.plp_inv is not targets[id(leaf)]:
                bad.append(f"stale inverse pointer on leaf {leaf.uid}")
        else:
            if id(leaf) in targets:
                bad.append(f"secondary leaf {leaf.uid} targeted by node "
                           f"{targets[id(leaf)].uid}")
            if leaf.plp_inv is not None:
                bad.append(f"secondary leaf {leaf.uid} carries an inverse pointer")
    if len(targets) + sum(1 for l in leaves if not l.prim) != len(leaves):
        bad.append("pointer map is not a bijection onto the leaves")
    return bad


def credit_violations(tree, deep: bool = False) -> list:
    """Stored-pointer liveness for credit mode (lp(v) >= tail, leaf alive)."""
    bad = []
    tail = tree.window.tail
    for node in tree.iter_nodes():
        if node.children is None or not node.children:
            continue  # leaves; the empty root holds no meaningful pointer
        if node.lp < tail:
            bad.append(f"node {node.uid} stores stale leaf start {node.lp} < {tail}")
            continue
        leaf = tree.leaf_at(node.lp)
        if leaf is None:
            bad.append(f"node {node.uid} stores start {node.lp} of no live leaf")
            continue
        if deep:
            cur = leaf
            while cur is not None and cur is not node:
                cur = cur.parent
            if cur is None:
                bad.append(f"leaf {leaf.uid} is not a descendant of node {node.uid}")
    return bad


def pointer_violations(tree, deep: bool = False) -> list:
    """Mode-appropriate leaf-pointer invariants."""
    if tree.mode == "plp":
        return plp_violations(tree)
    return credit_violations(tree, deep=deep)


def counter_violations(tree) -> list:
    """Per-event write bound (plp) and the linear-churn bound."""
    bad = []
    c = tree.counters
    if tree.mode == "plp" and c.plp_field_writes_max_event > 4:
        bad.append(f"a leaf event performed {c.plp_field_writes_max_event} pointer writes")
    pushed = tree.window.head
    if c.churn() > 4 * pushed:
        bad.append(f"node churn {c.churn()} exceeds 4x pushed symbols ({pushed})")
    return bad


def matching_violations(tree, patterns, window_bytes=None) -> list:
    """Differential check of find_all against a direct scan."""
    bad = []
    text = tree.window_bytes() if window_bytes is None else window_bytes
    for p in patterns:
        p = as_pattern(p)
        got, edges = find_all_counted(tree, p)
        want = oracle.naive_occurrences(text, p)
        if got != want:
            bad.append(f"find_all({p!r}) = {got} but scan says {want}")
        occ = len(want)
        if edges > len(p) + 2 * occ + 2:
            bad.append(f"find_all({p!r}) touched {edges} edges for {occ} hits")
    return bad


def all_violations(tree, patterns=()) -> list:
    """Full per-event sweep used by the verify command."""
    bad = structural_violations(tree)
    bad += oracle_violations(tree)
    bad += pointer_violations(tree, deep=True)
    bad += counter_violations(tree)
    if patterns:
        bad += matching_violations(tree, patterns)
    return bad
