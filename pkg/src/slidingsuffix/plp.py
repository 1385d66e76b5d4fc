"""Primary-leaf-pointer maintenance: O(1) field writes per leaf event.

Every node with children designates exactly one child as *primary*; all
other children, and the root, are *secondary*.  Following primary edges
from a secondary node always ends at a leaf, and each secondary internal
node stores that leaf as its pointer.  Secondary leaves point at themselves
(kept implicit, no field).  The primary edges therefore decompose the tree
into disjoint paths, one per leaf, which is what makes every repair local:
a single leaf insertion or deletion disturbs at most one path, so at most a
handful of flag/pointer writes restore the invariants.

Each leaf also records the secondary node whose pointer targets it
(``plp_inv``), so the one pointer that must be rewired on a primary-leaf
deletion is found in O(1).
"""

from __future__ import annotations


def _secondary_child(w):
    """The lowest-keyed non-primary child of w (deterministic choice)."""
    best_key = None
    best = None
    for key, child in w.children.items():
        if not child.prim and (best_key is None or key < best_key):
            best_key = key
            best = child
    return best


class PlpMaintenance:
    """Hook implementation installed on trees in ``"plp"`` mode."""

    def __init__(self, tree):
        self.tree = tree

    # -- queries -----------------------------------------------------------

    def leaf_for(self, node):
        """A live descendant leaf of the internal node, in O(1).

        Secondary nodes answer from their stored pointer.  A primary
        internal node is never the first node of a primary path, but it
        branches, so some child is secondary and that child's pointer (or
        the child itself, if a leaf) answers.  On an empty tree the root
        returns itself.
        """
        if not node.prim:
            return node.plp
        y = _secondary_child(node)
        if y.children is None:
            return y
        return y.plp

    # -- insertion hooks -----------------------------------------------------

    def on_internal_created(self, w, upcoming_spos):
        pass  # flags are decided by on_leaf_inserted for the same event

    def on_leaf_inserted(self, u, w, split_child):
        """Restore the invariants after attaching leaf u under w.

        ``split_child`` is the old child that was pushed below w when w was
        created by splitting an edge (None when w already existed).
        """
        c = self.tree.counters
        if split_child is None:
            if len(w.children) == 1:
                # w had no child, which only happens at the root: u starts
                # the root's primary path
                u.prim = True
                w.plp = u
                u.plp_inv = w
                c.bump_plp_writes(3)
            else:
                # u opens a fresh path of its own
                u.prim = False
                c.bump_plp_writes(1)
        else:
            y = split_child
            if y.prim:
                # w landed on a primary path; it joins that path and the new
                # leaf starts its own
                w.prim = True
                u.prim = False
                c.bump_plp_writes(2)
            else:
                # w heads a new path ending at the new leaf; y keeps its own
                w.prim = False
                u.prim = True
                w.plp = u
                u.plp_inv = w
                c.bump_plp_writes(4)

    def on_leaf_shortened(self, u, w):
        # an in-place relabel keeps tree shape and leaf identity, so every
        # pointer stays valid without a single write
        pass

    # -- deletion hooks ------------------------------------------------------

    def on_leaf_deleting(self, u, w):
        """Restore the invariants before leaf u detaches from w.

        Called while u is still attached; the caller afterwards removes u
        and, if w is a non-root node left with one child, merges w away.
        """
        c = self.tree.counters
        root = self.tree.root
        if w is root:
            if u.prim:
                if len(w.children) == 1:
                    # the tree empties: the root points at itself again
                    w.plp = w
                    c.bump_plp_writes(1)
                else:
                    # promote some secondary sibling to carry the root's path
                    y = _secondary_child(w)
                    v = y if y.children is None else y.plp
                    y.prim = True
                    w.plp = v
                    v.plp_inv = w
                    c.bump_plp_writes(3)
            # a secondary leaf under the root just takes its path with it
        else:
            if u.prim:
                if len(w.children) > 2 or w.prim:
                    # the path through u survives above w (or above the merged
                    # edge): reroute it through a promoted sibling
                    y = _secondary_child(w)
                    v = y if y.children is None else y.plp
                    z = u.plp_inv
                    y.prim = True
                    z.plp = v
                    v.plp_inv = z
                    c.bump_plp_writes(3)
                # otherwise w is secondary with two children: the path started
                # at w, and both w and u disappear together
            else:
                if len(w.children) == 2 and not w.prim:
                    # w merges away and its path must restart at the surviving
                    # child, which had been primary
                    y = next(ch for ch in w.children.values() if ch is not u)
                    v = w.plp
                    y.prim = False
                    if y.children is None:
                        y.plp_inv = None  # a secondary leaf points at itself
                        c.bump_plp_writes(2)
                    else:
                        y.plp = v
                        v.plp_inv = y
                        c.bump_plp_writes(3)
                # a secondary leaf under a surviving (or primary) parent needs
                # no repair at all

    def on_internal_deleting(self, w):
        pass  # covered by on_leaf_deleting's case analysis


def plp_query(tree, node):
    """Leaf-pointer query: a live descendant leaf of node (itself for leaves)."""
    return tree.leafptr(node)


def fresh_index_pair(tree, u, v):
    """Strongly fresh index pair for the edge u -> v (v internal).

    Follows the leaf pointer below v to a live leaf starting at k; since
    that whole suffix is inside the window, <k + depth(u), k + depth(v) - 1>
    spells the edge label and even the preceding occurrence of u's string
    (from position k) is still in the window.
    """
    if v.parent is not u:
        raise ValueError("no edge from u to v")
    k = tree.leafptr(v).spos
    return k + u.depth, k + v.depth - 1
