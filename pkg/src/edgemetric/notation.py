"""Dot-bracket text form of secondary structures.

Matched bracket pairs encode contacts, '.' encodes an isolated node.
Crossing contacts (pseudoknots) use additional bracket types; serialization
assigns them by greedy first-fit page coloring, the de-facto extended
dot-bracket convention, so output is deterministic and non-crossing
structures always come out with plain parentheses.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from .errors import (
    AlphabetExhausted,
    InvalidCharacter,
    NotSecondary,
    UnbalancedBracket,
)
from .structures import ContactStructure, StructureKind, is_secondary, validate


def _default_pairs() -> tuple[tuple[str, str], ...]:
    base = (("(", ")"), ("[", "]"), ("{", "}"), ("<", ">"))
    letters = tuple(
        (up, lo) for up, lo in zip(string.ascii_uppercase, string.ascii_lowercase)
    )
    return base + letters


@dataclass(frozen=True)
class BracketAlphabet:
    """Ordered open/close character pairs; '.' is reserved for isolated nodes."""

    pairs: tuple[tuple[str, str], ...] = field(default_factory=_default_pairs)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for op, cl in self.pairs:
            for ch in (op, cl):
                if ch == "." or ch in seen:
                    raise ValueError(f"alphabet character {ch!r} reused or reserved")
                seen.add(ch)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def opener_index(self, ch: str) -> int | None:
        for k, (op, _) in enumerate(self.pairs):
            if ch == op:
                return k
        return None

    def closer_index(self, ch: str) -> int | None:
        for k, (_, cl) in enumerate(self.pairs):
            if ch == cl:
                return k
        return None


DEFAULT_ALPHABET = BracketAlphabet()


def parse_dotbracket(
    text: str, alphabet: BracketAlphabet = DEFAULT_ALPHABET
) -> ContactStructure:
    """Parse a dot-bracket string into a secondary structure.

    One stack per bracket type; types may interleave freely, which is what
    encodes pseudoknots. Length of the result equals the character count.
    """
    if not text:
        raise InvalidCharacter("empty dot-bracket string")
    stacks: list[list[int]] = [[] for _ in range(alphabet.size)]
    pairs: list[tuple[int, int]] = []
    for pos, ch in enumerate(text, start=1):
        if ch == ".":
            continue
        k = alphabet.opener_index(ch)
        if k is not None:
            stacks[k].append(pos)
            continue
        k = alphabet.closer_index(ch)
        if k is None:
            raise InvalidCharacter(f"character {ch!r} at position {pos}")
        if not stacks[k]:
            raise UnbalancedBracket(f"unmatched {ch!r} at position {pos}")
        pairs.append((stacks[k].pop(), pos))
    for k, stack in enumerate(stacks):
        if stack:
            op = alphabet.pairs[k][0]
            raise UnbalancedBracket(f"unclosed {op!r} at position {stack[-1]}")
    return validate(len(text), pairs, StructureKind.SECONDARY)


def to_dotbracket(
    s: ContactStructure, alphabet: BracketAlphabet = DEFAULT_ALPHABET
) -> str:
    """Serialize a secondary structure; inverse of parse_dotbracket.

    Contacts are taken in order of opening position and each goes to the
    first page (bracket type) where it crosses nothing already placed;
    contacts on one page are mutually non-crossing, hence parse correctly
    as nested brackets of that type.
    """
    if not is_secondary(s):
        raise NotSecondary("dot-bracket form requires unique bonds")
    pages: list[list[tuple[int, int]]] = []
    assignment: list[tuple[int, int, int]] = []
    for c in s.contacts:
        i, j = c.as_pair()
        for k, page in enumerate(pages):
            if not any(_crosses(i, j, a, b) for (a, b) in page):
                page.append((i, j))
                assignment.append((i, j, k))
                break
        else:
            if len(pages) >= alphabet.size:
                raise AlphabetExhausted(
                    f"more than {alphabet.size} mutually crossing contacts"
                )
            pages.append([(i, j)])
            assignment.append((i, j, len(pages) - 1))
    chars = ["."] * s.n
    for (i, j, k) in assignment:
        op, cl = alphabet.pairs[k]
        chars[i - 1] = op
        chars[j - 1] = cl
    return "".join(chars)


def _crosses(i: int, j: int, k: int, l: int) -> bool:
    return (i < k < j < l) or (k < i < l < j)
