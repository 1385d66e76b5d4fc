"""Fixed-capacity byte window addressed by absolute 1-based positions."""

from __future__ import annotations


class TextWindow:
    """Ring buffer holding the most recent symbols of a byte stream.

    Positions are absolute: the k-th symbol ever pushed lives at position k
    and stays addressable until `pop` retires it.  At most `capacity`
    symbols are live at a time; the symbol at position k occupies buffer
    slot (k - 1) % capacity, which is injective over the live range.
    """

    __slots__ = ("capacity", "tail", "head", "buf")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self.tail = 1  # absolute position of the oldest live symbol
        self.head = 0  # absolute position of the newest; head < tail means empty
        self.buf = bytearray(capacity)

    def __len__(self) -> int:
        return self.head - self.tail + 1

    @property
    def full(self) -> bool:
        return self.head - self.tail + 1 >= self.capacity

    def push(self, sym: int) -> int:
        """Append one symbol; returns its absolute position."""
        if self.head - self.tail + 1 >= self.capacity:
            raise ValueError("window is full; pop before pushing")
        self.head += 1
        self.buf[(self.head - 1) % self.capacity] = sym
        return self.head

    def pop(self) -> int:
        """Retire the oldest symbol; returns the position it occupied."""
        if self.head < self.tail:
            raise ValueError("window is empty")
        pos = self.tail
        self.tail += 1
        return pos

    def symbol_at(self, k: int) -> int:
        if not self.tail <= k <= self.head:
            raise IndexError(f"position {k} outside window [{self.tail}..{self.head}]")
        return self.buf[(k - 1) % self.capacity]

    def substring(self, lo: int, hi: int) -> bytes:
        """Bytes at absolute positions lo..hi inclusive (empty if lo > hi)."""
        if lo > hi:
            return b""
        if not (self.tail <= lo and hi <= self.head):
            raise IndexError(f"range [{lo}..{hi}] outside window [{self.tail}..{self.head}]")
        cap = self.capacity
        a = (lo - 1) % cap
        b = (hi - 1) % cap
        if a <= b:
            return bytes(self.buf[a:b + 1])
        return bytes(self.buf[a:]) + bytes(self.buf[:b + 1])

    def to_bytes(self) -> bytes:
        """The whole live window, oldest symbol first."""
        if self.head < self.tail:
            return b""
        return self.substring(self.tail, self.head)
