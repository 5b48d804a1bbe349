"""Published coefficient tables, transcribed verbatim for cross-checking.

Nothing in the package computes from these; they are only compared
against recomputed values, and every mismatch is reported rather than
adopted.
"""

from __future__ import annotations

from fractions import Fraction

# numerator of L_1 over (1+5x)^5, x^1 .. x^9
L1_NUMERATOR = {
    1: 1, 2: 40, 3: 794, 4: 9125, 5: 64475, 6: 286000, 7: 7800000, 8: 1200000, 9: 800000,
}

# numerators of U^(0)(x^k) over (1+5x)^5, k = 0..4
U0_BASE = {
    0: dict(L1_NUMERATOR),
    1: {
        2: 121, 3: 9484, 4: 321025, 5: 6327850, 6: 81874125, 7: 738217500,
        8: 4780850000, 9: 22488800000, 10: 76460000000, 11: 183600000000,
        12: 296000000000, 13: 288000000000, 14: 128000000000,
    },
    2: {
        2: 140, 3: 35245, 4: 2808365, 5: 117376000, 6: 3100037500,
        7: 56831205625, 8: 763507050000, 9: 7771895500000, 10: 61182640000000,
        11: 376797500000000, 12: 1823151200000000, 13: 6913681600000000,
        14: 20347776000000000, 15: 45594240000000000, 16: 75238400000000000,
        17: 86272000000000000, 18: 61440000000000000, 19: 20480000000000000,
    },
    3: {
        2: 64, 3: 59136, 4: 10547620, 5: 850378650, 6: 40530512250,
        7: 1298590915000, 8: 30103152240625, 9: 528858099450000,
        10: 7262462532500000, 11: 79624221710000000, 12: 707157357820000000,
        13: 5136043622800000000, 14: 30674128864000000000,
        15: 150938497280000000000, 16: 611049315200000000000,
        17: 2024736448000000000000, 18: 5439398912000000000000,
        19: 11668643840000000000000, 20: 19525324800000000000000,
        21: 24567808000000000000000, 22: 21872640000000000000000,
        23: 12288000000000000000000, 24: 3276800000000000000000,
    },
    4: {
        2: 13, 3: 54342, 4: 21645560, 5: 3231134475, 6: 261994052875,
        7: 13648364390000, 8: 501535624578125, 9: 13781722427603125,
        10: 294509461032250000, 11: 5030953041631500000, 12: 70082663702580000000,
        13: 807847198383100000000, 14: 7788550590672000000000,
        15: 63288334721120000000000, 16: 435690966505600000000000,
        17: 2548759030153600000000000, 18: 12682694057728000000000000,
        19: 53629451281920000000000000, 20: 192118376960000000000000000,
        21: 579878492672000000000000000, 22: 1462436904960000000000000000,
        23: 3044539924480000000000000000, 24: 5141902131200000000000000000,
        25: 6869368832000000000000000000, 26: 6987448320000000000000000000,
        27: 5085593600000000000000000000, 28: 2359296000000000000000000000,
        29: 524288000000000000000000000,
    },
}


def _form(head: tuple, tail: tuple = (), head_div: int = 1) -> tuple[Fraction, ...]:
    """Coefficients of s(1)..s(8): ``head / head_div`` followed by ``tail``."""
    return tuple(Fraction(c, head_div) for c in head) + tuple(Fraction(c) for c in tail)


T_HAT = {
    1: (Fraction(0),) * 8,
    2: _form((4961, 10406, 6171, 4575812, 2991921), (236628, 58408, 8848), 5),
    3: _form((388844, 815624, 483684, 1151708938, 753195134), (59571099, 14704214, 2227484), 5),
    4: _form((2632405, 5521630, 3274455, 18352874062, 12003016215, 4746698523, 1171649878, 177488668)),
    5: _form((51888370, 108839020, 64544070, 767043871640, 501666289570, 198388915200,
              48969267200, 7418163200)),
    6: _form((671367825, 1408234950, 835116075, 20258321552900, 13249576649825,
              5239683382500, 1293335645000, 195922370000)),
    7: _form((6053383500, 12697341000, 7529818500, 371382334240250, 242896720484750,
              96056103747375, 23709978986750, 3591732195500)),
    8: _form((39202970000, 82230620000, 48764670000, 4989377344380000, 3263230087870000,
              1290479615910000, 318535141260000, 48253645560000)),
}

# t(1)+t(2)+t(3)+2t(4)+t(5) and 4t(4)+t(6)+t(7)+t(8)
AGGREGATE_1 = _form((57231941, 120047486, 71190951, 803980876714, 525823559411,
                     207942119973, 5132732957, 7775376868))
AGGREGATE_2 = _form((45938250945, 96358282470, 57142702395, 5381091411669398,
                     3519424397069435, 1391794389833967, 343543142491262, 52042010080172))

# residues mod 5: first row h_1(m, n, 1) for m = 1..5, second h_1(m, n, 2) for m = 4..8
H1_RESIDUES = ((1, 1, 1, 2, 1), (4, 0, 1, 1, 1))

# cusp orders on Gamma_0(50): label -> (Phi, x, x(5 tau), z(5 tau));
# labels carry a "_10" subscript in the source although these are cusps of level 50
CUSP_TABLE = {
    "Infinity": (5, 1, 5, 0),
    "1/25": (4, 0, 0, 0),
    "1/10": (0, 1, 0, 1),
    "1/5": (0, 0, -1, -1),
    "3/10": (0, 1, 0, 1),
    "2/5": (0, 0, -1, -1),
    "1/2": (-5, 0, 0, 1),
    "3/5": (0, 0, -1, -1),
    "7/10": (0, 1, 0, 1),
    "4/5": (0, 0, -1, -1),
    "9/10": (0, 1, 0, 1),
    "0": (-4, -5, -1, -1),
}

# combination column as (coefficient of k, constant)
CUSP_COMBINATION = {
    "Infinity": (1, -140), "1/25": (0, 4), "1/10": (1, 5), "1/5": (0, 4),
    "3/10": (1, 5), "2/5": (0, 4), "1/2": (0, 0), "3/5": (0, 4),
    "7/10": (1, 5), "4/5": (0, 4), "9/10": (1, 5), "0": (-5, 20),
}

# lower bounds for the orders of L_1 at the cusps of Gamma_0(10)
L1_ORDER_BOUNDS = {"Infinity": 1, "1/5": 1, "1/2": -5, "0": -4}

STURM_BOUNDS = {1: 109, 2: 256}


def compare(printed: dict, recomputed: dict) -> list[dict]:
    """Every key where the two maps differ, as ``{key, printed, recomputed}``."""
    out = []
    for k in sorted(set(printed) | set(recomputed), key=str):
        a, b = printed.get(k, 0), recomputed.get(k, 0)
        if a != b:
            out.append({"key": k, "printed": str(a), "recomputed": str(b)})
    return out
