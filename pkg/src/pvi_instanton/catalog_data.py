"""The tabulated polynomials f_m^+-, g_m^+- (as even polynomials in w).

Each entry is ``(constant, [(factor, exponent), ...])``; a factor is a list
of decimal coefficients of ``w^0, w^2, w^4, ...``.  Factored forms are kept
exactly as published so they can be proofread against the source.
"""

ONE = ("1", [])
ZERO = ("0", [])

W2_PLUS_3 = ["3", "1"]
W2_MINUS_1 = ["-1", "1"]

TABLE = {
    (0, "+"): {"f": ONE, "g": ZERO},
    (0, "-"): {"f": ZERO, "g": ONE},
    (1, "+"): {"f": ONE, "g": ZERO},
    (1, "-"): {"f": ("4", []), "g": ("1", [(W2_PLUS_3, 1)])},
    (2, "+"): {
        "f": ("12", [(W2_PLUS_3, 2)]),
        "g": ("1", [(W2_MINUS_1, 2)]),
    },
    (2, "-"): {
        "f": ("16", [(["7", "1"], 1), (["4", "3", "1"], 1)]),
        "g": ("1", [(W2_PLUS_3, 1), (["77", "89", "23", "3"], 1)]),
    },
    (3, "+"): {
        "f": ("8", [(["3381", "7536", "6291", "2576", "611", "80", "5"], 1)]),
        "g": ("1", [(W2_MINUS_1, 2), (W2_PLUS_3, 1), (["147", "111", "57", "5"], 1)]),
    },
    (3, "-"): {
        "f": ("12", [(W2_PLUS_3, 2), (["3528", "7272", "6453", "2460", "678", "84", "5"], 1)]),
        "g": ("1", [([
            "164052", "590328", "831465", "631260", "294435",
            "88938", "18207", "2520", "225", "10",
        ], 1)]),
    },
    (4, "+"): {
        "f": ("4", [([
            "14619528", "69918552", "140631309", "159541866", "116463663",
            "58384152", "20911122", "5489100", "1072278", "154176",
            "15729", "1050", "35",
        ], 1)]),
        "g": ("3", [(W2_MINUS_1, 2), (W2_PLUS_3, 1), ([
            "141372", "402732", "558819", "432297", "209331",
            "71361", "16497", "2403", "189", "7",
        ], 1)]),
    },
    (4, "-"): {
        "f": ("8", [([
            "326559519", "1822652766", "4648210677", "6998194368",
            "7025103459", "5035679226", "2678780673", "1084740444",
            "341288829", "84427122", "16389951", "2449224",
            "272257", "21430", "1099", "28",
        ], 1)]),
        "g": ("1", [(W2_PLUS_3, 1), ([
            "334968777", "2143174869", "5776302213", "8923510233",
            "8999893881", "6350646645", "3281293773", "1278719217",
            "383574771", "89689431", "16510551", "2388627",
            "267339", "22239", "1239", "35",
        ], 1)]),
    },
    # conjectural: the image of the ground state under five creation steps
    (5, "+"): {
        "f": ("6", [(W2_PLUS_3, 2), ([
            "4921440381", "37977143490", "127613420649", "250673770776",
            "327148723176", "304141893048", "210622703024", "112091223944",
            "46894395098", "15666181052", "4231083002", "931314344",
            "167841056", "24669272", "2918360", "271032",
            "18849", "882", "21",
        ], 1)]),
        "g": ("1", [(W2_MINUS_1, 2), ([
            "6947915832", "44000040942", "133368411033", "248155844508",
            "316015211160", "294283529028", "208710837720", "115644336732",
            "50998415472", "18167192624", "5280068058", "1254027252",
            "241371320", "36993180", "4399008", "391700",
            "24840", "1026", "21",
        ], 1)]),
    },
}
