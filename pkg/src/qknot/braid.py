"""Braid words and their elementary combinatorics.

A braid on n strands is a word in the signed generator letters
``k = ±1, ..., ±(n-1)``; letter ``k`` means the generator at position ``|k|``
with the sign of ``k``.  Words are kept exactly as given: no free reduction
is performed, so functoriality bugs cannot hide behind simplification.
"""

from __future__ import annotations

import dataclasses
import re


class BraidError(ValueError):
    """Malformed braid word (bad strand count or out-of-range letter)."""


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A braid group element presented as a word of signed generator letters."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise BraidError(
                    f"letter {k} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)


def writhe(beta: BraidWord) -> int:
    """Sum of the letter signs (the abelianisation of the braid group)."""
    return sum(1 if k > 0 else -1 for k in beta.letters)


def extend(beta: BraidWord, k: int) -> BraidWord:
    """The same word viewed in a braid group with k extra trivial strands."""
    if k < 0:
        raise BraidError("cannot extend by a negative number of strands")
    return BraidWord(beta.strands + k, beta.letters)


def inverse(beta: BraidWord) -> BraidWord:
    return BraidWord(beta.strands, tuple(-k for k in reversed(beta.letters)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise BraidError("cannot concatenate words on different strand counts")
    return BraidWord(a.strands, a.letters + b.letters)


def conjugate(beta: BraidWord, alpha: BraidWord) -> BraidWord:
    """Markov conjugation: alpha · beta · alpha^{-1} in the same group."""
    if alpha.strands != beta.strands:
        raise BraidError("conjugator must live in the same braid group")
    return BraidWord(beta.strands,
                     alpha.letters + beta.letters + inverse(alpha).letters)


def stabilize(beta: BraidWord, sign: int) -> BraidWord:
    """Markov stabilization: add a strand and one crossing with it."""
    if sign not in (1, -1):
        raise BraidError("stabilization sign must be +1 or -1")
    return BraidWord(beta.strands + 1, beta.letters + (sign * beta.strands,))


def closure_permutation(beta: BraidWord) -> list[int]:
    """Permutation of strand positions induced by the word (0-based)."""
    perm = list(range(beta.strands))
    pos = list(range(beta.strands))  # pos[j] = current position of strand j
    for k in beta.letters:
        i = abs(k) - 1
        for j in range(beta.strands):
            if pos[j] == i:
                pos[j] = i + 1
            elif pos[j] == i + 1:
                pos[j] = i
    for j in range(beta.strands):
        perm[j] = pos[j]
    return perm


def closure_cycle_count(beta: BraidWord) -> int:
    """Number of components of the braid closure."""
    perm = closure_permutation(beta)
    seen = [False] * beta.strands
    cycles = 0
    for start in range(beta.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def is_knot(beta: BraidWord) -> bool:
    return closure_cycle_count(beta) == 1


def require_knot(beta: BraidWord, force: bool = False) -> int:
    """Return the component count; raise unless it is 1 or `force` is set."""
    c = closure_cycle_count(beta)
    if c != 1 and not force:
        raise NotAKnotError(f"closure is not a knot ({c} components)")
    return c


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator letters."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    letters = []
    for t in tokens:
        try:
            letters.append(int(t))
        except ValueError:
            raise BraidError(f"bad braid letter {t!r}") from None
    return BraidWord(strands, tuple(letters))


def render_braid(beta: BraidWord) -> str:
    return " ".join(str(k) for k in beta.letters)


def load_knot_table(path) -> dict[str, BraidWord]:
    """Read a line-oriented knot table: `name strands letters...`,
    with `#` starting a comment line."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) < 2:
                raise BraidError(f"{path}:{lineno}: expected `name strands letters...`")
            name = fields[0]
            try:
                strands = int(fields[1])
                letters = tuple(int(t) for t in fields[2:])
            except ValueError:
                raise BraidError(f"{path}:{lineno}: bad integer field") from None
            if name in table:
                raise BraidError(f"{path}:{lineno}: duplicate knot name {name!r}")
            table[name] = BraidWord(strands, letters)
    return table
