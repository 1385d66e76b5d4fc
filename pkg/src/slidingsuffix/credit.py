"""Credit-based leaf-pointer maintenance (the classical baseline).

Each internal node stores ``lp``, the start index of some descendant leaf,
plus a one-bit credit.  New leaves issue a credit to their parent; a node
receiving a credit while already holding one passes the refreshed pointer
up, which can cascade to the root.  A node deleted while holding a credit
hands it to its parent so no information is lost.  The cascades keep every
stored pointer aimed at a live leaf, but a single leaf event can trigger a
chain of updates as long as the window depth; the pointer scheme in
`slidingsuffix.plp` exists to avoid exactly that.
"""

from __future__ import annotations


class CreditMaintenance:
    """Hook implementation installed on trees in ``"credit"`` mode."""

    def __init__(self, tree):
        self.tree = tree

    def leaf_for(self, node):
        leaf = self.tree.leaf_at(node.lp)
        assert leaf is not None, "stored leaf pointer went stale"
        return leaf

    def update(self, v, k):
        """Record that leaf(k) lives below v, cascading while credits allow.

        Each handled node counts as one update call; the terminating call
        on a missing parent is free.
        """
        counters = self.tree.counters
        while v is not None:
            counters.bump_credit_call()
            if k > v.lp:
                v.lp = k
            if v.cred == 0:
                v.cred = 1
                return
            v.cred = 0
            k = v.lp
            v = v.parent

    # -- hooks ---------------------------------------------------------------

    def on_internal_created(self, w, upcoming_spos):
        # the leaf about to be attached under w is its first known descendant
        w.lp = upcoming_spos
        w.cred = 0

    def on_leaf_inserted(self, u, w, split_child):
        self.update(w, u.spos)

    def on_leaf_shortened(self, u, w):
        # the shortened leaf counts as newly created and credits its parent
        self.update(w, u.spos)

    def on_leaf_deleting(self, u, w):
        pass

    def on_internal_deleting(self, w):
        if w.cred:
            self.update(w.parent, w.lp)
