"""Supercommutative associative and Lie superalgebras in low dimension.

Each entry is (id, statements, params) where params maps a parameter name to
(nonzero_expression or None, condition text, preferred sample values).
Products listed are completed by supercommutativity, brackets by
super-skewsymmetry.  e1^0 is always the unit of an associative entry.
"""

# A positive-dimensional odd part with no products at all; the purely odd
# algebras A_{0|p} are non-unital.
ASSOCIATIVE = [
    ("A:1|0:1", ""),
    ("A:1|1:1", ""),
    ("A:1|2:1", ""),
    ("A:1|3:1", ""),
    ("A:2|0:1", ""),
    ("A:2|0:2", "e2^0 e2^0 = e2^0"),
    ("A:2|1:1", ""),
    ("A:2|1:2", "e2^0 e2^0 = e2^0; e2^0 e1^1 = e1^1"),
    ("A:2|2:1", "e2^0 e2^0 = e2^0; e2^0 e1^1 = e1^1"),
    ("A:2|2:2", "e2^0 e2^0 = e2^0"),
    ("A:2|2:3", "e2^0 e1^1 = e2^1"),
    ("A:2|2:4", ""),
    ("A:2|2:5", "e1^1 e2^1 = e2^0"),
    ("A:3|0:1", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0; e3^0 e3^0 = e3^0"),
    ("A:3|0:2", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0"),
    ("A:3|0:3", "e2^0 e2^0 = e2^0"),
    ("A:3|0:4", ""),
    ("A:3|1:1", "e2^0 e2^0 = e2^0; e3^0 e3^0 = e3^0"),
    ("A:3|1:2", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0"),
    ("A:3|1:3", "e2^0 e2^0 = e2^0"),
    ("A:3|1:4", "e2^0 e2^0 = e3^0"),
    ("A:3|1:5", ""),
    ("A:4|0:1", "e2^0 e2^0 = e2^0; e3^0 e3^0 = e3^0; e4^0 e4^0 = e4^0"),
    ("A:4|0:2", "e2^0 e2^0 = e2^0; e3^0 e3^0 = e3^0"),
    ("A:4|0:3", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0"),
    ("A:4|0:4", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0; e2^0 e4^0 = e4^0; e3^0 e3^0 = e4^0"),
    ("A:4|0:5", "e2^0 e2^0 = e3^0; e2^0 e3^0 = e4^0"),
    ("A:4|0:6", "e2^0 e2^0 = e2^0; e2^0 e3^0 = e3^0; e2^0 e4^0 = e4^0"),
    ("A:4|0:7", "e2^0 e3^0 = e4^0"),
    ("A:4|0:8", "e3^0 e3^0 = e3^0"),
    ("A:4|0:9", ""),
] + [("A:0|%d:1" % p, "") for p in range(1, 5)]

# Expected (dim Der_0, dim Der_1) as printed in the superderivation table.
# A:4|0:7 prints an entry "lambda_24" that reads as a typo; the count given
# there is 4 once it is read as lambda_4.
DERIVATION_TABLE = {
    "A:1|0:1": (0, 0), "A:1|1:1": (1, 1), "A:1|2:1": (4, 0), "A:1|3:1": (9, 0),
    "A:2|0:1": (1, 0), "A:2|0:2": (0, 0),
    "A:2|1:1": (2, 2), "A:2|1:2": (1, 1),
    "A:2|2:1": (2, 2), "A:2|2:2": (4, 0), "A:2|2:3": (3, 3), "A:2|2:4": (5, 3),
    "A:2|2:5": (4, 4),
    "A:3|0:1": (0, 0), "A:3|0:2": (1, 0), "A:3|0:3": (1, 0), "A:3|0:4": (4, 0),
    "A:3|1:1": (1, 1), "A:3|1:2": (2, 1), "A:3|1:3": (2, 2), "A:3|1:4": (3, 2),
    "A:3|1:5": (5, 4),
    "A:4|0:1": (0, 0), "A:4|0:2": (1, 0), "A:4|0:3": (2, 0), "A:4|0:4": (2, 0),
    "A:4|0:5": (3, 0), "A:4|0:6": (4, 0), "A:4|0:7": (4, 0), "A:4|0:8": (5, 0),
    "A:4|0:9": (9, 0),
}

# Sample lists used for parameters normalised by 0 < |p| <= 1 and similar.
UNIT_DISC = ("1", "1/2", "-1/2")

P_NONZERO = {"p": ("p", "p != 0", None)}
Q_NONZERO = {"q": ("q", "q != 0", None)}

LIE = [
    ("L:1|0:1", "", {}),
    ("L:1|1:1", "[f1^1, f1^1] = f1^0", {}),
    ("L:1|1:2", "[f1^0, f1^1] = f1^1", {}),
    ("L:1|1:3", "", {}),
    ("L:1|2:1", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = p*f2^1",
     {"p": ("p", "0 < |p| <= 1", UNIT_DISC)}),
    ("L:1|2:2", "[f1^0, f2^1] = f1^1", {}),
    ("L:1|2:3", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = f1^1 + f2^1", {}),
    ("L:1|2:4", "[f1^0, f1^1] = p*f1^1 - f2^1; [f1^0, f2^1] = f1^1 + p*f2^1",
     {"p": (None, "p in C", None)}),
    ("L:1|2:5", "[f1^1, f1^1] = f1^0; [f2^1, f2^1] = f1^0", {}),
    ("L:1|2:6", "", {}),
    ("L:1|3:1", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = p*f2^1; [f1^0, f3^1] = q*f3^1",
     {"p": ("p", "0 < |p| <= |q| <= 1", ("1/2", "-1/3", "1/3")),
      "q": ("q", "0 < |p| <= |q| <= 1", ("1", "-1/2", "-1"))}),
    ("L:1|3:2", "[f1^0, f1^1] = f1^1; [f1^0, f3^1] = f2^1", {}),
    ("L:1|3:3", "[f1^0, f1^1] = p*f1^1; [f1^0, f2^1] = f2^1; [f1^0, f3^1] = f2^1 + f3^1",
     {"p": (None, "p in C", None)}),
    ("L:1|3:4", "[f1^0, f1^1] = p*f1^1; [f1^0, f2^1] = q*f2^1 - f3^1; "
                "[f1^0, f3^1] = f2^1 + q*f3^1",
     {"p": ("p", "p != 0", None), "q": (None, "q in C", None)}),
    # printed with a stray side condition "p,q != 0" that mentions no
    # parameter of the bracket; it is ignored
    ("L:1|3:5", "[f1^0, f2^1] = f1^1; [f1^0, f3^1] = f2^1", {}),
    ("L:1|3:6", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = f1^1 + f2^1; [f1^0, f3^1] = f2^1 + f3^1", {}),
    ("L:1|3:7", "[f1^1, f1^1] = f1^0; [f2^1, f2^1] = f1^0; [f3^1, f3^1] = f1^0", {}),
    ("L:1|3:8", "", {}),
    ("L:2|0:1", "", {}),
    ("L:2|0:2", "[f1^0, f2^0] = f2^0", {}),
    ("L:2|1:1", "[f1^1, f1^1] = f2^0", {}),
    ("L:2|1:2", "[f1^0, f1^1] = f1^1; [f2^0, f1^1] = -f1^1", {}),
    ("L:2|1:3", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1", {}),
    ("L:2|1:4", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = p*f1^1", P_NONZERO),
    ("L:2|1:5", "[f1^0, f2^0] = f2^0", {}),
    ("L:2|1:6", "", {}),
    ("L:2|2:1", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = f2^1; [f2^0, f2^1] = f1^1", {}),
    ("L:2|2:2", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = f2^1; [f2^0, f2^1] = f1^1; "
                "[f2^0, f1^1] = -f2^1", {}),
    ("L:2|2:3", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = p*f1^1; [f1^0, f2^1] = q*f2^1",
     {"p": ("p", "p*q != 0", None), "q": ("q", "p*q != 0", None)}),
    ("L:2|2:4", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = p*f1^1; [f1^0, f2^1] = f1^1 + p*f2^1",
     P_NONZERO),
    ("L:2|2:5", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = p*f1^1 - q*f2^1; "
                "[f1^0, f2^1] = q*f1^1 + p*f2^1",
     {"p": (None, "p in C", None), "q": ("q", "q != 0", None)}),
    ("L:2|2:6", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = (p+1)*f1^1; [f1^0, f2^1] = p*f2^1; "
                "[f2^0, f2^1] = f1^1", P_NONZERO),
    ("L:2|2:7", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1; [f1^0, f2^1] = 1/2*f2^1; "
                "[f1^1, f1^1] = f2^0; [f2^1, f2^1] = f2^0", {}),
    ("L:2|2:8", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1; [f1^0, f2^1] = 1/2*f2^1; "
                "[f1^1, f1^1] = f2^0", {}),
    ("L:2|2:9", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = p*f1^1; [f1^0, f2^1] = (1-p)*f2^1; "
                "[f1^1, f2^1] = f2^0", {"p": (None, "p in C", None)}),
    ("L:2|2:10", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1; "
                 "[f1^0, f2^1] = f1^1 + 1/2*f2^1; [f2^1, f2^1] = f2^0", {}),
    ("L:2|2:11", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1 - p*f2^1; "
                 "[f1^0, f2^1] = p*f1^1 + 1/2*f2^1; [f1^1, f1^1] = f2^0; [f2^1, f2^1] = f2^0",
     P_NONZERO),
    ("L:2|2:12", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = f1^1; [f2^0, f2^1] = f1^1; "
                 "[f1^1, f2^1] = -1/2*f2^0; [f2^1, f2^1] = f1^0", {}),
    ("L:2|2:13", "[f1^1, f1^1] = f1^0; [f2^1, f2^1] = f2^0", {}),
    ("L:2|2:14", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = f1^1; [f1^1, f2^1] = f2^0", {}),
    ("L:2|2:15", "[f1^0, f2^0] = f2^0; [f1^0, f1^1] = 1/2*f1^1; [f1^1, f1^1] = f2^0", {}),
    ("L:2|2:16", "[f1^0, f1^1] = f1^1; [f1^0, f2^1] = -f2^1; [f1^1, f2^1] = f2^0", {}),
    ("L:2|2:17", "[f1^0, f2^1] = f1^1; [f2^1, f2^1] = f2^0", {}),
    ("L:2|2:18", "", {}),
    ("L:3|0:1", "", {}),
    ("L:3|0:2", "[f1^0, f2^0] = f3^0", {}),
    ("L:3|0:3", "[f1^0, f2^0] = f1^0", {}),
    ("L:3|0:4", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = f2^0 + f3^0", {}),
    ("L:3|0:5", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = p*f3^0", P_NONZERO),
    ("L:3|0:6", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = -2*f1^0; [f2^0, f3^0] = 2*f2^0", {}),
    ("L:3|1:1", "[f2^0, f3^0] = f1^0; [f2^0, f1^1] = f1^1", {}),
    ("L:3|1:2", "[f1^0, f3^0] = f1^0; [f2^0, f3^0] = f1^0 + f2^0; [f3^0, f1^1] = q*f1^1",
     Q_NONZERO),
    ("L:3|1:3", "[f1^0, f3^0] = p*f1^0 - f2^0; [f2^0, f3^0] = f1^0 + p*f2^0; "
                "[f3^0, f1^1] = q*f1^1",
     {"p": ("p", "p*q != 0", None), "q": ("q", "p*q != 0", None)}),
    ("L:3|1:4", "[f2^0, f3^0] = f1^0; [f1^1, f1^1] = f1^0", {}),
    ("L:3|1:5", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = p*f3^0; [f1^0, f1^1] = 1/2*f1^1; "
                "[f1^1, f1^1] = f2^0", P_NONZERO),
    ("L:3|1:6", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = f2^0 + f3^0; [f1^0, f1^1] = 1/2*f1^1; "
                "[f1^1, f1^1] = f2^0", {}),
    ("L:3|1:7", "", {}),
    ("L:4|0:1", "", {}),
    ("L:4|0:2", "[f1^0, f2^0] = f3^0", {}),
    ("L:4|0:3", "[f1^0, f2^0] = f1^0", {}),
    ("L:4|0:4", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = f2^0 + f3^0", {}),
    ("L:4|0:5", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = p*f3^0",
     {"p": ("p", "0 < |p| <= 1", UNIT_DISC)}),
    ("L:4|0:6", "[f1^0, f2^0] = f1^0; [f3^0, f4^0] = f3^0", {}),
    ("L:4|0:7", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = -2*f1^0; [f2^0, f3^0] = 2*f2^0", {}),
    ("L:4|0:8", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = f4^0", {}),
    ("L:4|0:9", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = f3^0; [f1^0, f4^0] = p*f3^0", P_NONZERO),
    ("L:4|0:10", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = f4^0; "
                 "[f1^0, f4^0] = p*f2^0 - q*f3^0 + f4^0",
     {"p": ("p", "p != 0 or (p, q) = (0, 0)", None), "q": (None, "p != 0 or (p, q) = (0, 0)", None)}),
    ("L:4|0:11", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = f4^0; [f1^0, f4^0] = p*(f2^0 + f3^0)",
     P_NONZERO),
    ("L:4|0:12", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = f4^0; [f1^0, f4^0] = f2^0", {}),
    ("L:4|0:13", "[f1^0, f2^0] = 1/3*f2^0 + f3^0; [f1^0, f3^0] = 1/3*f3^0; "
                 "[f1^0, f4^0] = 1/3*f4^0", {}),
    ("L:4|0:14", "[f1^0, f2^0] = f2^0; [f1^0, f3^0] = f3^0; [f1^0, f4^0] = 2*f4^0; "
                 "[f2^0, f3^0] = f4^0", {}),
    ("L:4|0:15", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = f2^0; [f2^0, f3^0] = f4^0", {}),
    ("L:4|0:16", "[f1^0, f2^0] = f3^0; [f1^0, f3^0] = -p*f2^0 + f3^0; [f1^0, f4^0] = f4^0; "
                 "[f2^0, f3^0] = f4^0", P_NONZERO),
] + [("L:0|%d:1" % q, "", {}) for q in range(1, 5)]
