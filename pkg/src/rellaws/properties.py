"""The 26 relation properties, their bit encoding, and relation kinds.

Every predicate is quantified over the whole universe with no distinctness
assumptions; degenerate instantiations (x = y and so on) are deliberately
included because several familiar consequences depend on them, e.g. a left
Euclidean relation forces x R x for every x that has a successor.

24 of the properties carry a fixed bit position used by property vectors,
censuses, and law mining. The positions order the properties by how many of
the 2^25 relations on a 5-element universe satisfy them, ascending, which is
what makes mined law text read from the rarest property to the commonest.
The two one-sided quasi-reflexivity predicates have no bit of their own
(only their conjunction QuasiRefl does) but are still checkable and usable
in witness queries.
"""

from __future__ import annotations

import enum

from .relation import Relation


class PropertyId(enum.Enum):
    # bit-carrying properties, value = bit position
    Empty = 0
    Univ = 1
    CoRefl = 2
    LfEucl = 3
    RgEucl = 4
    LfUnique = 5
    RgUnique = 6
    Sym = 7
    AntiTrans = 8
    ASym = 9
    Connex = 10
    Trans = 11
    SemiOrd1 = 12
    Irrefl = 13
    Refl = 14
    QuasiRefl = 15
    AntiSym = 16
    SemiConnex = 17
    IncTrans = 18
    SemiOrd2 = 19
    QuasiTrans = 20
    Dense = 21
    LfSerial = 22
    RgSerial = 23
    # checkable but not part of the 24-bit vector
    LfQuasiRefl = 24
    RgQuasiRefl = 25

    @property
    def bit(self) -> int | None:
        return self.value if self.value < 24 else None

    @property
    def mask(self) -> int | None:
        return 1 << self.value if self.value < 24 else None


#: the 24 vector properties in bit order
MINED_PROPERTIES: tuple[PropertyId, ...] = tuple(
    p for p in PropertyId if p.value < 24)

VECTOR_BITS = 24

#: converse duality: holds(R, p) == holds(converse(R), DUAL[p])
DUAL = {p: p for p in PropertyId}
DUAL[PropertyId.LfEucl] = PropertyId.RgEucl
DUAL[PropertyId.RgEucl] = PropertyId.LfEucl
DUAL[PropertyId.LfUnique] = PropertyId.RgUnique
DUAL[PropertyId.RgUnique] = PropertyId.LfUnique
DUAL[PropertyId.LfSerial] = PropertyId.RgSerial
DUAL[PropertyId.RgSerial] = PropertyId.LfSerial
DUAL[PropertyId.LfQuasiRefl] = PropertyId.RgQuasiRefl
DUAL[PropertyId.RgQuasiRefl] = PropertyId.LfQuasiRefl


_BY_LOWER_NAME = {p.name.lower(): p for p in PropertyId}


def parse_property(name: str) -> PropertyId:
    """Property by name, case-insensitively."""
    try:
        return _BY_LOWER_NAME[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown property {name!r}") from None


# -- predicate implementations ---------------------------------------------
#
# All of these work on the row bit masks. cols[y] is the mask over x of the
# predecessors of y, i.e. the transposed rows.

def _cols(r: Relation) -> list[int]:
    return [r.column(y) for y in range(r.n)]


def _two_step(rows: list[int] | tuple[int, ...], n: int) -> list[int]:
    # out[x] = union of rows[y] over y in rows[x]; bit z set iff some 2-path x->y->z
    out = []
    for x in range(n):
        acc = 0
        row = rows[x]
        while row:
            y = (row & -row).bit_length() - 1
            acc |= rows[y]
            row &= row - 1
        out.append(acc)
    return out


def _is_transitive(rows, n) -> bool:
    for x in range(n):
        acc = 0
        row = rows[x]
        while row:
            y = (row & -row).bit_length() - 1
            acc |= rows[y]
            if acc & ~rows[x]:
                return False
            row &= row - 1
    return True


def _empty(r: Relation) -> bool:
    return all(row == 0 for row in r.rows)


def _univ(r: Relation) -> bool:
    full = (1 << r.n) - 1
    return all(row == full for row in r.rows)


def _corefl(r: Relation) -> bool:
    return all(r.rows[x] & ~(1 << x) == 0 for x in range(r.n))


def _lf_eucl(r: Relation) -> bool:
    # y R x and z R x imply y R z: common successor forces an edge
    rows, n = r.rows, r.n
    for y in range(n):
        for z in range(n):
            if rows[y] & rows[z] and not rows[y] >> z & 1:
                return False
    return True


def _rg_eucl(r: Relation) -> bool:
    # x R y and x R z imply y R z: common predecessor forces an edge
    rows, n = r.rows, r.n
    cols = _cols(r)
    for y in range(n):
        for z in range(n):
            if cols[y] & cols[z] and not rows[y] >> z & 1:
                return False
    return True


def _lf_unique(r: Relation) -> bool:
    for y in range(r.n):
        col = r.column(y)
        if col & (col - 1):
            return False
    return True


def _rg_unique(r: Relation) -> bool:
    return all(row & (row - 1) == 0 for row in r.rows)


def _sym(r: Relation) -> bool:
    return list(r.rows) == _cols(r)


def _antitrans(r: Relation) -> bool:
    rows, n = r.rows, r.n
    for x, reach in enumerate(_two_step(rows, n)):
        if reach & rows[x]:
            return False
    return True


def _asym(r: Relation) -> bool:
    rows = r.rows
    for x in range(r.n):
        if rows[x] & r.column(x):
            return False
    return True


def _connex(r: Relation) -> bool:
    full = (1 << r.n) - 1
    for x in range(r.n):
        if r.rows[x] | r.column(x) != full:
            return False
    return True


def _trans(r: Relation) -> bool:
    return _is_transitive(r.rows, r.n)


def _semiord1(r: Relation) -> bool:
    # w R x, x and y incomparable, y R z imply w R z
    rows, n = r.rows, r.n
    full = (1 << n) - 1
    cols = _cols(r)
    inc = [~(rows[x] | cols[x]) & full for x in range(n)]
    # t1[w] = union of inc[x] over x in rows[w]; t2[w] = union of rows[y] over y in t1[w]
    t1 = _two_step_into(rows, inc, n)
    t2 = _two_step_into(t1, rows, n)
    return all(t2[w] & ~rows[w] == 0 for w in range(n))


def _two_step_into(first: list[int] | tuple[int, ...], second: list[int], n: int) -> list[int]:
    out = []
    for x in range(n):
        acc = 0
        row = first[x]
        while row:
            y = (row & -row).bit_length() - 1
            acc |= second[y]
            row &= row - 1
        out.append(acc)
    return out


def _irrefl(r: Relation) -> bool:
    return all(not r.rows[x] >> x & 1 for x in range(r.n))


def _refl(r: Relation) -> bool:
    return all(r.rows[x] >> x & 1 for x in range(r.n))


def _lf_quasirefl(r: Relation) -> bool:
    # x R y implies x R x
    return all(row == 0 or row >> x & 1 for x, row in enumerate(r.rows))


def _rg_quasirefl(r: Relation) -> bool:
    # x R y implies y R y
    for y in range(r.n):
        if r.column(y) and not r.rows[y] >> y & 1:
            return False
    return True


def _quasirefl(r: Relation) -> bool:
    return _lf_quasirefl(r) and _rg_quasirefl(r)


def _antisym(r: Relation) -> bool:
    for x in range(r.n):
        if r.rows[x] & r.column(x) & ~(1 << x):
            return False
    return True


def _semiconnex(r: Relation) -> bool:
    full = (1 << r.n) - 1
    for x in range(r.n):
        if r.rows[x] | r.column(x) | (1 << x) != full:
            return False
    return True


def _inctrans(r: Relation) -> bool:
    # incomparability is transitive; inc[x] has bit x whenever not x R x
    rows, n = r.rows, r.n
    full = (1 << n) - 1
    cols = _cols(r)
    inc = [~(rows[x] | cols[x]) & full for x in range(n)]
    return _is_transitive(inc, n)


def _semiord2(r: Relation) -> bool:
    # whenever x R y R z, every w is comparable to x, y, or z
    rows, n = r.rows, r.n
    full = (1 << n) - 1
    cols = _cols(r)
    comp = [rows[v] | cols[v] for v in range(n)]
    for y in range(n):
        preds, succs = cols[y], rows[y]
        if not preds or not succs:
            continue
        p = preds
        while p:
            x = (p & -p).bit_length() - 1
            p &= p - 1
            m = comp[x] | comp[y]
            if m == full:
                continue
            s = succs
            while s:
                z = (s & -s).bit_length() - 1
                s &= s - 1
                if m | comp[z] != full:
                    return False
    return True


def _quasitrans(r: Relation) -> bool:
    # the one-directional part of R is transitive
    rows, n = r.rows, r.n
    cols = _cols(r)
    strict = [rows[x] & ~cols[x] for x in range(n)]
    return _is_transitive(strict, n)


def _dense(r: Relation) -> bool:
    # x R z implies some y (possibly x or z) with x R y and y R z
    rows, n = r.rows, r.n
    for x, reach in enumerate(_two_step(rows, n)):
        if rows[x] & ~reach:
            return False
    return True


def _lf_serial(r: Relation) -> bool:
    # every element has a predecessor
    acc = 0
    for row in r.rows:
        acc |= row
    return acc == (1 << r.n) - 1


def _rg_serial(r: Relation) -> bool:
    return all(row != 0 for row in r.rows)


_PREDICATES = {
    PropertyId.Empty: _empty,
    PropertyId.Univ: _univ,
    PropertyId.CoRefl: _corefl,
    PropertyId.LfEucl: _lf_eucl,
    PropertyId.RgEucl: _rg_eucl,
    PropertyId.LfUnique: _lf_unique,
    PropertyId.RgUnique: _rg_unique,
    PropertyId.Sym: _sym,
    PropertyId.AntiTrans: _antitrans,
    PropertyId.ASym: _asym,
    PropertyId.Connex: _connex,
    PropertyId.Trans: _trans,
    PropertyId.SemiOrd1: _semiord1,
    PropertyId.Irrefl: _irrefl,
    PropertyId.Refl: _refl,
    PropertyId.QuasiRefl: _quasirefl,
    PropertyId.AntiSym: _antisym,
    PropertyId.SemiConnex: _semiconnex,
    PropertyId.IncTrans: _inctrans,
    PropertyId.SemiOrd2: _semiord2,
    PropertyId.QuasiTrans: _quasitrans,
    PropertyId.Dense: _dense,
    PropertyId.LfSerial: _lf_serial,
    PropertyId.RgSerial: _rg_serial,
    PropertyId.LfQuasiRefl: _lf_quasirefl,
    PropertyId.RgQuasiRefl: _rg_quasirefl,
}


def holds(r: Relation, p: PropertyId) -> bool:
    """Does relation r satisfy property p? Total for all 26 properties."""
    return _PREDICATES[p](r)


def property_vector(r: Relation) -> int:
    """24-bit word with bit p.bit set iff the bit-carrying property p holds."""
    vec = 0
    for p in MINED_PROPERTIES:
        if _PREDICATES[p](r):
            vec |= 1 << p.value
    return vec


def vector_properties(vec: int) -> list[PropertyId]:
    """The properties named by a 24-bit vector, in bit order."""
    if not 0 <= vec < 1 << VECTOR_BITS:
        raise ValueError(f"vector 0x{vec:x} is not a 24-bit word")
    return [p for p in MINED_PROPERTIES if vec >> p.value & 1]


class RelationKind(enum.Enum):
    Equivalence = "equivalence"
    PartialEquivalence = "partial equivalence"
    Tolerance = "tolerance"
    Idempotent = "idempotent"
    Trichotomous = "trichotomous"
    NonStrictPartialOrder = "non-strict partial order"
    StrictPartialOrder = "strict partial order"
    SemiOrder = "semi-order"
    Preorder = "preorder"
    WeakOrdering = "weak ordering"
    PartialFunction = "partial function"
    TotalFunction = "total function"
    InjectiveFunction = "injective function"
    SurjectiveFunction = "surjective function"
    BijectiveFunction = "bijective function"


P = PropertyId
KIND_REQUIREMENTS: dict[RelationKind, frozenset[PropertyId]] = {
    RelationKind.Equivalence: frozenset({P.Refl, P.Sym, P.Trans}),
    RelationKind.PartialEquivalence: frozenset({P.Sym, P.Trans}),
    RelationKind.Tolerance: frozenset({P.Refl, P.Sym}),
    RelationKind.Idempotent: frozenset({P.Dense, P.Trans}),
    RelationKind.Trichotomous: frozenset({P.Irrefl, P.ASym, P.SemiConnex}),
    RelationKind.NonStrictPartialOrder: frozenset({P.Refl, P.AntiSym, P.Trans}),
    RelationKind.StrictPartialOrder: frozenset({P.Irrefl, P.ASym, P.Trans}),
    RelationKind.SemiOrder: frozenset({P.ASym, P.SemiOrd1, P.SemiOrd2}),
    RelationKind.Preorder: frozenset({P.Refl, P.Trans}),
    RelationKind.WeakOrdering: frozenset({P.Irrefl, P.ASym, P.Trans, P.IncTrans}),
    RelationKind.PartialFunction: frozenset({P.RgUnique}),
    RelationKind.TotalFunction: frozenset({P.RgUnique, P.RgSerial}),
    RelationKind.InjectiveFunction: frozenset({P.LfUnique, P.RgUnique, P.RgSerial}),
    RelationKind.SurjectiveFunction: frozenset({P.RgUnique, P.LfSerial, P.RgSerial}),
    RelationKind.BijectiveFunction: frozenset(
        {P.LfUnique, P.RgUnique, P.LfSerial, P.RgSerial}),
}
del P


def classify_kinds(r: Relation) -> set[RelationKind]:
    """Every named kind whose defining property conjunction holds for r."""
    results = set()
    cache: dict[PropertyId, bool] = {}
    for kind, needs in KIND_REQUIREMENTS.items():
        ok = True
        for p in needs:
            if p not in cache:
                cache[p] = _PREDICATES[p](r)
            if not cache[p]:
                ok = False
                break
        if ok:
            results.add(kind)
    return results
