from slidingsuffix import SlidingSuffixTree


def build(text, capacity=None, mode="plp"):
    """Tree fed `text` through the sliding window (capacity defaults to
    the full length, in which case nothing ever slides out)."""
    data = text.encode("latin-1") if isinstance(text, str) else bytes(text)
    tree = SlidingSuffixTree(capacity or max(len(data), 1), mode=mode)
    for sym in data:
        tree.slide(sym)
    return tree


def node_by_string(tree, s):
    """The internal node spelling s, or None."""
    target = s.encode("latin-1") if isinstance(s, str) else bytes(s)
    win = tree.window
    stack = [(tree.root, b"")]
    while stack:
        node, cur = stack.pop()
        if cur == target:
            return node
        if node.children is None or len(cur) >= len(target):
            continue
        for child in node.children.values():
            lo, hi = tree.edge_label(child)
            stack.append((child, cur + win.substring(lo, hi)))
    return None
