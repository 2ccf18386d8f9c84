"""One-indexed permutations of {1, ..., n}."""

from __future__ import annotations

from typing import Iterable


class Permutation:
    """A bijection on {1, ..., n}, stored in one-line notation.

    ``images[j-1]`` is the image of j.  Composition follows function
    convention: ``(p * q)(j) == p(q(j))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self.images = imgs

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.images[k - 1] for k in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, k in enumerate(self.images, start=1):
            inv[k - 1] = j
        return Permutation(inv)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for j in range(1, self.n + 1):
            if seen[j - 1]:
                continue
            cyc = []
            k = j
            while not seen[k - 1]:
                seen[k - 1] = True
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def one_line(self) -> str:
        return " ".join(str(k) for k in self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation([{self.one_line()}])"


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def long_cycle(n: int) -> Permutation:
    """The n-cycle sigma = (1 2 ... n), i.e. j -> j+1 mod n."""
    return Permutation([*range(2, n + 1), 1])


def longest_element(n: int) -> Permutation:
    """w0: j -> n+1-j."""
    return Permutation(range(n, 0, -1))
