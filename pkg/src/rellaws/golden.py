"""Reference values the verify command and the acceptance tests check against.

These numbers and law texts are the published results this toolkit
reproduces: relation counts per universe size, the two n = 5 property
censuses, the vector census occupancy split, and the mined laws of levels
2 and 3 verbatim (later levels are pinned by count only). They were
transcribed once from the published tables and are treated as frozen input
data, never recomputed in place.
"""

from .properties import PropertyId

#: relations per universe size, full enumeration
UNPRUNED_COUNTS = {
    1: 2,
    2: 16,
    3: 512,
    4: 65536,
    5: 33554432,
    6: 68719476736,
}

#: relations per universe size, row-signature normal forms only
PRUNED_COUNTS = {
    1: 2,
    2: 10,
    3: 140,
    4: 6170,
    5: 907452,
    6: 460631444,
}

#: n = 5 per-property satisfaction counts, full enumeration
PROPERTY_CENSUS_UNPRUNED_N5 = {
    PropertyId.Empty: 1,
    PropertyId.Univ: 1,
    PropertyId.CoRefl: 32,
    PropertyId.LfEucl: 3163,
    PropertyId.RgEucl: 3163,
    PropertyId.LfUnique: 7776,
    PropertyId.RgUnique: 7776,
    PropertyId.Sym: 32768,
    PropertyId.AntiTrans: 47462,
    PropertyId.ASym: 59049,
    PropertyId.Connex: 59049,
    PropertyId.Trans: 154303,
    PropertyId.SemiOrd1: 467750,
    PropertyId.Irrefl: 1048576,
    PropertyId.Refl: 1048576,
    PropertyId.QuasiRefl: 1069742,
    PropertyId.AntiSym: 1889568,
    PropertyId.SemiConnex: 1889568,
    PropertyId.IncTrans: 3756619,
    PropertyId.SemiOrd2: 4498393,
    PropertyId.QuasiTrans: 5531648,
    PropertyId.Dense: 15339497,
    PropertyId.LfSerial: 28629151,
    PropertyId.RgSerial: 28629151,
}

#: n = 5 per-property satisfaction counts, normal forms only
PROPERTY_CENSUS_PRUNED_N5 = {
    PropertyId.Empty: 1,
    PropertyId.Univ: 1,
    PropertyId.CoRefl: 6,
    PropertyId.LfEucl: 166,
    PropertyId.RgEucl: 186,
    PropertyId.LfUnique: 440,
    PropertyId.RgUnique: 1818,
    PropertyId.Sym: 1012,
    PropertyId.AntiTrans: 4841,
    PropertyId.ASym: 3870,
    PropertyId.Connex: 3870,
    PropertyId.Trans: 3207,
    PropertyId.SemiOrd1: 11103,
    PropertyId.Irrefl: 70436,
    PropertyId.Refl: 70436,
    PropertyId.QuasiRefl: 71198,
    PropertyId.AntiSym: 50480,
    PropertyId.SemiConnex: 50480,
    PropertyId.IncTrans: 113142,
    PropertyId.SemiOrd2: 144128,
    PropertyId.QuasiTrans: 131994,
    PropertyId.Dense: 425854,
    PropertyId.LfSerial: 764962,
    PropertyId.RgSerial: 817185,
}

#: 24-bit vectors produced by at least one 5-element relation
INHABITED_VECTORS_N5 = 495

#: 24-bit vectors no 5-element relation produces (2^24 - 495)
ON_VECTORS_N5 = 16776721

TOTAL_LAWS = 274

#: mined laws per level; levels 1 and >= 9 are empty
LEVEL_LAW_COUNTS = {2: 94, 3: 122, 4: 35, 5: 7, 6: 12, 7: 3, 8: 1}

#: on-count at the start of each mining level
LEVEL_ON_AT_START = {
    1: 16776721,
    2: 16776721,
    3: 32063,
    4: 161,
    5: 32,
    6: 24,
    7: 4,
    8: 1,
    9: 0,
}

#: level-2 laws (sequence 001..094), formatted text in published order
LAW_TEXTS_LEVEL2 = [
    "Empty Univ",
    "Empty ~CoRefl",
    "Univ CoRefl",
    "Empty ~LfEucl",
    "Univ ~LfEucl",
    "CoRefl ~LfEucl",
    "Empty ~RgEucl",
    "Univ ~RgEucl",
    "CoRefl ~RgEucl",
    "Empty ~LfUnique",
    "Univ LfUnique",
    "CoRefl ~LfUnique",
    "Empty ~RgUnique",
    "Univ RgUnique",
    "CoRefl ~RgUnique",
    "Empty ~Sym",
    "Univ ~Sym",
    "CoRefl ~Sym",
    "Empty ~AntiTrans",
    "Univ AntiTrans",
    "Empty ~ASym",
    "Univ ASym",
    "Empty Connex",
    "Univ ~Connex",
    "CoRefl Connex",
    "LfUnique Connex",
    "RgUnique Connex",
    "AntiTrans Connex",
    "ASym Connex",
    "Empty ~Trans",
    "Univ ~Trans",
    "CoRefl ~Trans",
    "Empty ~SemiOrd1",
    "Univ ~SemiOrd1",
    "Connex ~SemiOrd1",
    "Empty ~Irrefl",
    "Univ Irrefl",
    "AntiTrans ~Irrefl",
    "ASym ~Irrefl",
    "Connex Irrefl",
    "Empty Refl",
    "Univ ~Refl",
    "AntiTrans Refl",
    "ASym Refl",
    "Connex ~Refl",
    "Irrefl Refl",
    "Empty ~QuasiRefl",
    "Univ ~QuasiRefl",
    "CoRefl ~QuasiRefl",
    "Connex ~QuasiRefl",
    "Refl ~QuasiRefl",
    "Empty ~AntiSym",
    "Univ AntiSym",
    "CoRefl ~AntiSym",
    "ASym ~AntiSym",
    "Empty SemiConnex",
    "Univ ~SemiConnex",
    "CoRefl SemiConnex",
    "LfUnique SemiConnex",
    "RgUnique SemiConnex",
    "AntiTrans SemiConnex",
    "Connex ~SemiConnex",
    "Empty ~IncTrans",
    "Univ ~IncTrans",
    "Connex ~IncTrans",
    "SemiConnex ~IncTrans",
    "Empty ~SemiOrd2",
    "Univ ~SemiOrd2",
    "Connex ~SemiOrd2",
    "SemiConnex ~SemiOrd2",
    "IncTrans ~SemiOrd2",
    "Empty ~QuasiTrans",
    "Univ ~QuasiTrans",
    "CoRefl ~QuasiTrans",
    "LfEucl ~QuasiTrans",
    "RgEucl ~QuasiTrans",
    "Sym ~QuasiTrans",
    "Trans ~QuasiTrans",
    "Empty ~Dense",
    "Univ ~Dense",
    "CoRefl ~Dense",
    "LfEucl ~Dense",
    "RgEucl ~Dense",
    "Connex ~Dense",
    "Refl ~Dense",
    "QuasiRefl ~Dense",
    "Empty LfSerial",
    "Univ ~LfSerial",
    "Connex ~LfSerial",
    "Refl ~LfSerial",
    "Empty RgSerial",
    "Univ ~RgSerial",
    "Connex ~RgSerial",
    "Refl ~RgSerial",
]

#: level-3 laws (sequence 095..216), formatted text in published order
LAW_TEXTS_LEVEL3 = [
    "~CoRefl RgEucl LfUnique",
    "~CoRefl LfEucl RgUnique",
    "LfEucl RgEucl ~Sym",
    "LfEucl ~RgEucl Sym",
    "~LfEucl RgEucl Sym",
    "LfUnique ~RgUnique Sym",
    "~LfUnique RgUnique Sym",
    "~Empty CoRefl AntiTrans",
    "~Empty LfEucl AntiTrans",
    "~Empty RgEucl AntiTrans",
    "~Empty CoRefl ASym",
    "~Empty LfEucl ASym",
    "~Empty RgEucl ASym",
    "~Empty Sym ASym",
    "LfUnique ~AntiTrans ASym",
    "RgUnique ~AntiTrans ASym",
    "~Univ LfEucl Connex",
    "~Univ RgEucl Connex",
    "~Univ Sym Connex",
    "LfEucl RgEucl ~Trans",
    "LfEucl LfUnique ~Trans",
    "RgEucl RgUnique ~Trans",
    "~LfEucl Sym Trans",
    "AntiTrans ~ASym Trans",
    "AntiTrans ~ASym SemiOrd1",
    "LfUnique ~Trans SemiOrd1",
    "RgUnique ~Trans SemiOrd1",
    "AntiTrans ~Trans SemiOrd1",
    "ASym ~Trans SemiOrd1",
    "~Empty CoRefl Irrefl",
    "~Empty LfEucl Irrefl",
    "~Empty RgEucl Irrefl",
    "LfUnique ~AntiTrans Irrefl",
    "RgUnique ~AntiTrans Irrefl",
    "~ASym Trans Irrefl",
    "~ASym SemiOrd1 Irrefl",
    "LfEucl ~RgEucl Refl",
    "~LfEucl RgEucl Refl",
    "~CoRefl LfUnique Refl",
    "~CoRefl RgUnique Refl",
    "CoRefl SemiOrd1 Refl",
    "~Connex SemiOrd1 Refl",
    "LfEucl RgEucl ~QuasiRefl",
    "LfEucl ~RgEucl QuasiRefl",
    "~LfEucl RgEucl QuasiRefl",
    "~CoRefl LfUnique QuasiRefl",
    "~CoRefl RgUnique QuasiRefl",
    "~Empty AntiTrans QuasiRefl",
    "~Empty ASym QuasiRefl",
    "~Empty Irrefl QuasiRefl",
    "LfEucl LfUnique ~AntiSym",
    "LfEucl ~LfUnique AntiSym",
    "RgEucl RgUnique ~AntiSym",
    "RgEucl ~RgUnique AntiSym",
    "~CoRefl Sym AntiSym",
    "AntiTrans ~ASym AntiSym",
    "LfUnique Trans ~AntiSym",
    "RgUnique Trans ~AntiSym",
    "~ASym Irrefl AntiSym",
    "LfEucl ~Trans SemiConnex",
    "RgEucl ~Trans SemiConnex",
    "LfEucl ~SemiOrd1 SemiConnex",
    "RgEucl ~SemiOrd1 SemiConnex",
    "Trans ~SemiOrd1 SemiConnex",
    "~Connex Refl SemiConnex",
    "~Connex QuasiRefl SemiConnex",
    "~Empty CoRefl IncTrans",
    "LfEucl ~Trans IncTrans",
    "RgEucl ~Trans IncTrans",
    "LfEucl ~SemiOrd1 IncTrans",
    "RgEucl ~SemiOrd1 IncTrans",
    "Trans ~SemiOrd1 IncTrans",
    "~Connex Refl IncTrans",
    "~SemiOrd1 QuasiRefl IncTrans",
    "~Empty CoRefl SemiOrd2",
    "LfEucl ~Trans SemiOrd2",
    "RgEucl ~Trans SemiOrd2",
    "AntiTrans Trans ~SemiOrd2",
    "LfEucl ~SemiOrd1 SemiOrd2",
    "RgEucl ~SemiOrd1 SemiOrd2",
    "~Connex Refl SemiOrd2",
    "~SemiOrd1 QuasiRefl SemiOrd2",
    "LfEucl ~IncTrans SemiOrd2",
    "RgEucl ~IncTrans SemiOrd2",
    "Sym ~IncTrans SemiOrd2",
    "QuasiRefl ~IncTrans SemiOrd2",
    "ASym ~Trans QuasiTrans",
    "~Trans AntiSym QuasiTrans",
    "~LfEucl LfUnique Dense",
    "~RgEucl RgUnique Dense",
    "~Empty AntiTrans Dense",
    "~Empty ASym Dense",
    "Sym SemiOrd1 ~Dense",
    "Sym SemiConnex ~Dense",
    "~LfEucl RgEucl LfSerial",
    "~LfUnique RgUnique LfSerial",
    "AntiTrans Trans LfSerial",
    "ASym Trans LfSerial",
    "CoRefl SemiOrd1 LfSerial",
    "RgUnique SemiOrd1 LfSerial",
    "CoRefl ~Refl LfSerial",
    "RgEucl ~Refl LfSerial",
    "~Refl QuasiRefl LfSerial",
    "LfEucl SemiConnex ~LfSerial",
    "Sym SemiConnex ~LfSerial",
    "RgUnique IncTrans LfSerial",
    "LfEucl ~RgEucl RgSerial",
    "LfUnique ~RgUnique RgSerial",
    "AntiTrans Trans RgSerial",
    "ASym Trans RgSerial",
    "CoRefl SemiOrd1 RgSerial",
    "LfUnique SemiOrd1 RgSerial",
    "CoRefl ~Refl RgSerial",
    "LfEucl ~Refl RgSerial",
    "~Refl QuasiRefl RgSerial",
    "RgEucl SemiConnex ~RgSerial",
    "Sym SemiConnex ~RgSerial",
    "LfUnique IncTrans RgSerial",
    "LfUnique ~LfSerial RgSerial",
    "RgUnique LfSerial ~RgSerial",
    "Sym LfSerial ~RgSerial",
    "Sym ~LfSerial RgSerial",
]
