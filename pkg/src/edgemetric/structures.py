"""Contact structures: length-n graphs whose edges ("contacts") never join
consecutive nodes. Secondary structures additionally give every node at
most one contact (unique bonds); pseudoknots are allowed.

All values are immutable after construction and safe to share between
threads. Contacts are stored canonically as (i, j) with i < j, and the
contact tuple is sorted lexicographically, so equal structures compare,
hash and serialize identically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ConsecutiveContact,
    DuplicateContact,
    IndexOutOfRange,
    LengthMismatch,
    PairFormatError,
    SelfLoop,
    StructureError,
    UniqueBondsViolated,
)

MIN_LENGTH = 3


class StructureKind(enum.Enum):
    ARBITRARY = "arbitrary"
    SECONDARY = "secondary"


@dataclass(frozen=True, order=True)
class Contact:
    """An unordered node pair, stored with i < j and j != i + 1."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise SelfLoop(f"contact {self.i}-{self.j} is a self-loop")
        if self.i > self.j:
            # canonicalize instead of rejecting reversed input
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)
        if self.i < 1:
            raise IndexOutOfRange(f"contact index {self.i} below 1")
        if self.j == self.i + 1:
            raise ConsecutiveContact(
                f"contact {self.i}-{self.j} joins consecutive nodes"
            )

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def as_pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"{self.i}-{self.j}"


@dataclass(frozen=True)
class ContactStructure:
    """A set of contacts on nodes 1..n; isolated nodes are implicit."""

    n: int
    contacts: tuple[Contact, ...]

    def __post_init__(self) -> None:
        if self.n < MIN_LENGTH:
            raise StructureError(f"length must be >= {MIN_LENGTH}, got {self.n}")

    @property
    def contact_set(self) -> frozenset[Contact]:
        return frozenset(self.contacts)

    def contact_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(c.as_pair() for c in self.contacts)

    def degree_map(self) -> dict[int, int]:
        deg: dict[int, int] = {}
        for c in self.contacts:
            deg[c.i] = deg.get(c.i, 0) + 1
            deg[c.j] = deg.get(c.j, 0) + 1
        return deg

    def adjacency(self) -> dict[int, list[int]]:
        """Sorted neighbor lists for nodes 1..n."""
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for c in self.contacts:
            adj[c.i].append(c.j)
            adj[c.j].append(c.i)
        for v in adj:
            adj[v].sort()
        return adj

    def __str__(self) -> str:
        return to_pair_line(self)


def validate(
    n: int,
    pairs: Iterable[tuple[int, int]],
    required_kind: StructureKind = StructureKind.ARBITRARY,
) -> ContactStructure:
    """Build a canonical ContactStructure from raw node pairs.

    Raises SelfLoop, ConsecutiveContact, IndexOutOfRange, DuplicateContact,
    and, when required_kind is SECONDARY, UniqueBondsViolated.
    """
    contacts: list[Contact] = []
    seen: set[tuple[int, int]] = set()
    for (a, b) in pairs:
        c = Contact(a, b)
        if c.j > n:
            raise IndexOutOfRange(f"contact {c} exceeds length {n}")
        if c.as_pair() in seen:
            raise DuplicateContact(f"contact {c} listed twice")
        seen.add(c.as_pair())
        contacts.append(c)
    contacts.sort()
    structure = ContactStructure(n, tuple(contacts))
    if required_kind is StructureKind.SECONDARY and not is_secondary(structure):
        raise UniqueBondsViolated("a node occurs in more than one contact")
    return structure


def is_secondary(s: ContactStructure) -> bool:
    """True iff no node occurs in two contacts (unique bonds)."""
    return all(d <= 1 for d in s.degree_map().values())


def union(a: ContactStructure, b: ContactStructure) -> ContactStructure:
    """Contact-set union; may violate unique bonds even for secondary inputs."""
    _check_same_length(a, b)
    merged = sorted(a.contact_set | b.contact_set)
    return ContactStructure(a.n, tuple(merged))


def symmetric_difference_count(a: ContactStructure, b: ContactStructure) -> int:
    _check_same_length(a, b)
    return len(a.contact_set ^ b.contact_set)


def angle_count(s: ContactStructure) -> int:
    """Number of unordered pairs of distinct contacts sharing exactly one node.

    Two distinct contacts share at most one node, so this is the sum of
    C(deg(v), 2) over all nodes.
    """
    return sum(d * (d - 1) // 2 for d in s.degree_map().values())


def triangle_count(s: ContactStructure) -> int:
    """Number of 3-node subsets whose three pairs are all contacts."""
    if len(s.contacts) < 3:
        return 0
    present = {c.as_pair() for c in s.contacts}
    neighbors: dict[int, set[int]] = {}
    for (i, j) in present:
        neighbors.setdefault(i, set()).add(j)
        neighbors.setdefault(j, set()).add(i)
    total = 0
    for (i, j) in present:
        common = neighbors[i] & neighbors[j]
        total += sum(1 for k in common if k > j)
    return total


def _check_same_length(a: ContactStructure, b: ContactStructure) -> None:
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")


# --- pair-list text format: "n: i-j, i-j, ..." ("n:" alone is empty) ---

def parse_pair_line(
    line: str,
    required_kind: StructureKind = StructureKind.ARBITRARY,
) -> ContactStructure:
    """Parse one pair-list line. Whitespace-insensitive; no comment handling
    here (strip comments at file level)."""
    text = line.strip()
    head, sep, tail = text.partition(":")
    if not sep:
        raise PairFormatError(f"missing ':' in pair line {line!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise PairFormatError(f"bad length field in {line!r}") from None
    pairs: list[tuple[int, int]] = []
    tail = tail.strip()
    if tail:
        for chunk in tail.split(","):
            left, sep2, right = chunk.partition("-")
            if not sep2:
                raise PairFormatError(f"bad contact {chunk.strip()!r} in {line!r}")
            try:
                pairs.append((int(left.strip()), int(right.strip())))
            except ValueError:
                raise PairFormatError(
                    f"bad contact {chunk.strip()!r} in {line!r}"
                ) from None
    return validate(n, pairs, required_kind)


def to_pair_line(s: ContactStructure) -> str:
    if not s.contacts:
        return f"{s.n}:"
    return f"{s.n}: " + ", ".join(str(c) for c in s.contacts)


def iter_structure_lines(text: str) -> Iterable[str]:
    """Yield payload lines of an ensemble file: blank lines and '#' comments
    are skipped, inline '#' comments stripped."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def all_contacts(n: int) -> list[tuple[int, int]]:
    """Every admissible contact on nodes 1..n, lexicographically sorted."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)]


def empty_structure(n: int) -> ContactStructure:
    return ContactStructure(n, ())
