"""Mining non-occurring property combinations into law suggestions.

The search space is the 24-bit vector space of a census. A vector is "off"
when some visited relation produced it (the combination exists, so no law),
and "on" when no relation did. An implicant (mask, value) names the
rectangle of all vectors u with u & mask == value; level = popcount(mask).
The miner scans levels top-down (coarsest rectangles first) and inside a
level scans masks in ascending numeric order, values in ascending numeric
order. A rectangle that covers no off vector and at least one still-on
vector is prime: it is reported as a law and its whole rectangle becomes
don't-care, so later (smaller) rectangles inside it are not reported again.

A reported law is the complement clause of its implicant: implicant
ASym=1, Irrefl=0 reads "no relation is asymmetric and not irreflexive",
i.e. the law ASym -> Irrefl. `format_law` prints implicant polarity
("ASym ~Irrefl"), literals ascending by bit position.

Performance contract honored here: HitsOff is decided against the explicit
off list (hundreds of vectors, early exit), never by walking the up-to-2^23
member rectangle; the on-existence side either projects the explicit on
list onto the mask (once the on set is small) or walks the rectangle
against the blocked bitset in vectorized slices with early exit (early
levels, when on vectors are everywhere). Once the level-start on-count
reaches zero no rectangle at any deeper level can be prime, so the scan
stops rather than grinding through 3^24 rectangles.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .census import VectorCensus
from .properties import MINED_PROPERTIES, VECTOR_BITS, PropertyId

_BY_BIT = {p.value: p for p in MINED_PROPERTIES}

# explicit on-list representation kicks in below this many on vectors
_EXPLICIT_ON_LIMIT = 1 << 20
_WALK_SLICE = 1 << 12


class RectangleStatus(enum.Enum):
    HitsOff = "hits-off"
    AllDontCare = "all-dont-care"
    Prime = "prime"


@dataclass(frozen=True)
class Implicant:
    """A cube (mask, value): the vectors u with u & mask == value."""

    mask: int
    value: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << VECTOR_BITS:
            raise ValueError(f"mask 0x{self.mask:x} is not a 24-bit word")
        if self.value & ~self.mask:
            raise ValueError(
                f"value 0x{self.value:x} has bits outside mask 0x{self.mask:x}")

    @property
    def level(self) -> int:
        return self.mask.bit_count()

    def covers(self, vector: int) -> bool:
        return vector & self.mask == self.value

    def literals(self) -> list[tuple[PropertyId, bool]]:
        """(property, polarity) pairs, ascending by bit."""
        out = []
        for bit in range(VECTOR_BITS):
            if self.mask >> bit & 1:
                out.append((_BY_BIT[bit], bool(self.value >> bit & 1)))
        return out


@dataclass(frozen=True)
class Law:
    seq: int
    implicant: Implicant

    @property
    def level(self) -> int:
        return self.implicant.level

    @property
    def text(self) -> str:
        return format_law(self)


def format_law(law) -> str:
    """Law text: literals ascending by bit, '~' for negative polarity."""
    imp = law.implicant if isinstance(law, Law) else law
    parts = []
    for prop, positive in imp.literals():
        parts.append(prop.name if positive else "~" + prop.name)
    return " ".join(parts)


def law_line(law: Law) -> str:
    return f"{law.seq:03d}: {law.text}"


def parse_law_text(text: str) -> Implicant:
    """Inverse of format_law."""
    mask = value = 0
    for token in text.split():
        positive = not token.startswith("~")
        name = token.lstrip("~")
        try:
            prop = PropertyId[name]
        except KeyError:
            raise ValueError(f"unknown property {name!r}") from None
        if prop.bit is None:
            raise ValueError(f"property {name} has no vector bit")
        mask |= 1 << prop.bit
        if positive:
            value |= 1 << prop.bit
    if not mask:
        raise ValueError("law text holds no literals")
    return Implicant(mask, value)


def rectangle_members(imp: Implicant, n_props: int = VECTOR_BITS) -> np.ndarray:
    """All covered vectors, ascending, as a uint32 array (size 2^(n_props-level))."""
    free = [b for b in range(n_props) if not imp.mask >> b & 1]
    members = np.array([imp.value], dtype=np.uint32)
    for b in free:  # ascending bits keep the array sorted after each doubling
        members = np.concatenate([members, members + np.uint32(1 << b)])
    return members


class MiningState:
    """Off list plus don't-care bitset over an n_props-bit vector space."""

    def __init__(self, off_vectors: Iterable[int], n_props: int = VECTOR_BITS):
        if not 1 <= n_props <= VECTOR_BITS:
            raise ValueError(f"n_props must be 1..{VECTOR_BITS}, got {n_props}")
        self.n_props = n_props
        self.space = 1 << n_props
        off = sorted(set(int(v) for v in off_vectors))
        if off and not 0 <= off[0] <= off[-1] < self.space:
            raise ValueError(f"off vector outside the {n_props}-bit space")
        self.off = np.array(off, dtype=np.uint32)
        # blocked = off or don't-care; off vectors never leave it
        self.blocked = np.zeros(self.space, dtype=bool)
        self.blocked[self.off] = True
        self.dontcare_count = 0

    def on_count(self) -> int:
        return self.space - len(self.off) - self.dontcare_count

    def hits_off(self, imp: Implicant) -> bool:
        return bool((self.off & np.uint32(imp.mask) == np.uint32(imp.value)).any())

    def has_on(self, imp: Implicant) -> bool:
        """Does the rectangle still contain an on vector? Early-exit walk."""
        members = rectangle_members(imp, self.n_props)
        for start in range(0, members.size, _WALK_SLICE):
            if not self.blocked[members[start:start + _WALK_SLICE]].all():
                return True
        return False

    def mark_dontcare(self, imp: Implicant) -> None:
        members = rectangle_members(imp, self.n_props)
        fresh = ~self.blocked[members]
        self.dontcare_count += int(fresh.sum())
        self.blocked[members] = True


def rectangle_status(state: MiningState, imp: Implicant) -> RectangleStatus:
    if state.hits_off(imp):
        return RectangleStatus.HitsOff
    if state.has_on(imp):
        return RectangleStatus.Prime
    return RectangleStatus.AllDontCare


@dataclass(frozen=True)
class LevelStats:
    level: int
    on_at_start: int
    off_count: int
    dontcare_at_start: int


@dataclass
class MineResult:
    laws: list[Law]
    level_stats: list[LevelStats]
    max_level: int
    n_props: int

    def per_level_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for law in self.laws:
            counts[law.level] = counts.get(law.level, 0) + 1
        return counts


def _masks_of_popcount(n_bits: int, k: int) -> Iterable[int]:
    """All k-of-n_bits masks in ascending numeric order (Gosper's hack)."""
    if k == 0 or k > n_bits:
        return
    mask = (1 << k) - 1
    limit = 1 << n_bits
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))


def _subsets_ascending(mask: int) -> Iterable[int]:
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


def mine(census: VectorCensus, max_level: int = 8,
         n_props: int = VECTOR_BITS) -> MineResult:
    """Scan rectangles of level 1..max_level; return the prime laws in order.

    Off vectors are the census keys (count > 0); every other vector in the
    n_props-bit space starts on. Laws come out numbered from 1 in the scan
    order (level, then mask, then value, all ascending).
    """
    if not 1 <= max_level <= n_props:
        raise ValueError(f"max_level must be 1..{n_props}, got {max_level}")
    bad = [v for v in census.counts if v >> n_props]
    if bad:
        raise ValueError(
            f"census vector 0x{bad[0]:x} exceeds the {n_props}-bit space")
    state = MiningState(census.counts.keys(), n_props)

    laws: list[Law] = []
    stats: list[LevelStats] = []
    seq = 0
    for level in range(1, max_level + 1):
        on_now = state.on_count()
        stats.append(LevelStats(level, on_now, len(state.off), state.dontcare_count))
        if on_now == 0:
            break  # nothing below can be prime any more
        explicit_on = None
        if on_now <= _EXPLICIT_ON_LIMIT:
            explicit_on = np.flatnonzero(~state.blocked).astype(np.uint32)
        for mask in _masks_of_popcount(n_props, level):
            mask32 = np.uint32(mask)
            off_proj = set(np.unique(state.off & mask32).tolist()) if state.off.size else set()
            if explicit_on is not None:
                on_proj = set(np.unique(explicit_on & mask32).tolist())
                prime_values = sorted(on_proj - off_proj)
                # rectangles of one mask are disjoint, so every prime here is
                # decided by the state as of mask start, same as sequentially
                for v in prime_values:
                    seq += 1
                    imp = Implicant(mask, v)
                    laws.append(Law(seq, imp))
                    state.mark_dontcare(imp)
                if prime_values:
                    keep = ~np.isin(explicit_on & mask32,
                                    np.array(prime_values, dtype=np.uint32))
                    explicit_on = explicit_on[keep]
            else:
                for v in _subsets_ascending(mask):
                    if v in off_proj:
                        continue
                    imp = Implicant(mask, v)
                    if state.has_on(imp):
                        seq += 1
                        laws.append(Law(seq, imp))
                        state.mark_dontcare(imp)
    return MineResult(laws, stats, max_level, n_props)


# -- law persistence -----------------------------------------------------------

_CSV_FIELDS = ["seq", "level", "mask_hex", "value_hex", "law_text"]


def laws_to_csv(laws: Sequence[Law], fp: TextIO) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for law in laws:
        writer.writerow([
            f"{law.seq:03d}", law.level,
            f"{law.implicant.mask:06x}", f"{law.implicant.value:06x}",
            law.text,
        ])


def laws_from_csv(fp: TextIO) -> list[Law]:
    reader = csv.reader(fp)
    header = next(reader, None)
    if header is None or [h.strip() for h in header[:5]] != _CSV_FIELDS:
        raise ValueError(f"not a law CSV (header {header!r})")
    laws = []
    for row in reader:
        if not row:
            continue
        seq, level, mask_hex, value_hex, text = row[:5]
        imp = Implicant(int(mask_hex, 16), int(value_hex, 16))
        if imp.level != int(level):
            raise ValueError(f"law {seq}: level {level} does not match mask")
        if parse_law_text(text) != imp:
            raise ValueError(f"law {seq}: text does not match mask/value")
        laws.append(Law(int(seq), imp))
    return laws
