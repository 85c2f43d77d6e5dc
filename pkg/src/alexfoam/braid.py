"""Braid words and braid closures carrying a base point."""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Raised for malformed closure text; the message names the offending token."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i < self.strands:
                raise ValueError(f"letter position {i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, strands: int, word: list[int] | tuple[int, ...]) -> "BraidWord":
        return cls(strands, tuple((abs(w), 1 if w > 0 else -1) for w in word))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    @property
    def n_plus(self) -> int:
        return sum(1 for _, s in self.letters if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for _, s in self.letters if s < 0)

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[p] = position (0-based) at the top of the strand entering at bottom position p."""
        pos = list(range(self.strands))
        where = list(range(self.strands))  # where[p] = strand currently at position p
        for i, _ in self.letters:
            where[i - 1], where[i] = where[i], where[i - 1]
        for p, strand in enumerate(where):
            pos[strand] = p
        return tuple(pos)

    def components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for p in range(self.strands):
            if not seen[p]:
                count += 1
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return count


@dataclass(frozen=True)
class MarkedClosure:
    """Closure of a braid word with a base point on closure strand `strand` (1-based).

    `height` is the slot between letters where the base point sits: slot h lies below
    letter h, so slots 0 and len(word) both denote the closure arc.
    """

    word: BraidWord
    strand: int
    height: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.strand <= self.word.strands:
            raise ValueError(f"base point strand {self.strand} absent ({self.word.strands} strands)")
        if not 0 <= self.height <= len(self.word):
            raise ValueError(f"base point height {self.height} out of range")

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def depth(self) -> int:
        return self.word.strands - self.strand

    def __str__(self) -> str:
        text = f"strands={self.strands}; word={' '.join(map(str, self.word.to_ints()))}; bp={self.strand}"
        if self.height:
            text += f"@{self.height}"
        return text


def parse_closure(text: str) -> MarkedClosure:
    """Parse `strands=<int>; word=<signed ints>; bp=<strand>[@<height>]`."""
    fields: dict[str, str] = {}
    for raw in text.split(";"):
        token = raw.strip()
        if not token:
            continue
        if "=" not in token:
            raise ParseError(f"malformed token {token!r}: expected key=value")
        key, value = (part.strip() for part in token.split("=", 1))
        if key not in ("strands", "word", "bp"):
            raise ParseError(f"unknown key {key!r} in token {token!r}")
        if key in fields:
            raise ParseError(f"duplicate key {key!r}")
        fields[key] = value
    for key in ("strands", "word", "bp"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}")

    try:
        strands = int(fields["strands"])
    except ValueError:
        raise ParseError(f"malformed strand count {fields['strands']!r}") from None
    if strands < 1:
        raise ParseError(f"strand count {fields['strands']!r} must be positive")

    letters: list[int] = []
    for tok in fields["word"].replace(",", " ").split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"malformed word letter {tok!r}") from None
        if v == 0 or abs(v) >= strands:
            raise ParseError(f"word letter {tok!r} out of range for {strands} strands")
        letters.append(v)

    bp_text = fields["bp"]
    height_text = "0"
    if "@" in bp_text:
        bp_text, height_text = bp_text.split("@", 1)
    try:
        bp = int(bp_text)
        height = int(height_text)
    except ValueError:
        raise ParseError(f"malformed base point {fields['bp']!r}") from None
    if not 1 <= bp <= strands:
        raise ParseError(f"base point strand {fields['bp']!r} absent ({strands} strands)")
    if not 0 <= height <= len(letters):
        raise ParseError(f"base point height {height_text!r} out of range")
    return MarkedClosure(BraidWord.from_ints(strands, letters), bp, height)


def rotate_to_seam(c: MarkedClosure) -> MarkedClosure:
    """Cyclically rotate the word so the base point lies on the closure arc."""
    h = c.height
    if h in (0, len(c.word)):
        return MarkedClosure(c.word, c.strand, 0)
    letters = c.word.letters[h:] + c.word.letters[:h]
    return MarkedClosure(BraidWord(c.strands, letters), c.strand, 0)


def rectify(c: MarkedClosure) -> MarkedClosure:
    """Move the base point to strand k by pulling its strand over the strands to its right.

    The traveling strand crosses over strands j+1..k just below the base point and
    returns over them just above it; each added pair cancels by a Reidemeister II move.
    """
    k, j = c.strands, c.strand
    if j == k:
        return c
    c = rotate_to_seam(c)
    back = tuple((i, -1) for i in range(k - 1, j - 1, -1))
    forth = tuple((i, 1) for i in range(j, k))
    return MarkedClosure(BraidWord(k, back + c.word.letters + forth), k, 0)


def markov_stabilize(c: MarkedClosure, sign: int) -> MarkedClosure:
    """Add strand k+1 with a curl sigma_k^sign; the base point moves onto the curl."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if c.strand != c.strands:
        raise ValueError("markov_stabilize needs the base point on the rightmost strand")
    c = rotate_to_seam(c)
    k = c.strands
    word = BraidWord(k + 1, c.word.letters + ((k, sign),))
    return MarkedClosure(word, k + 1, 0)
