"""Per-row verdicts on printed rows that fail the axioms.

Every printed row was run through the checker.  A failing row gets

* ``fix``: when exactly one structure constant can be changed (all others
  held fixed) to satisfy the axioms for all parameter values, and the
  change keeps the family's parameters.  The row is then verified in its
  corrected form.
* ``flag``: otherwise.  The row stays unverifiable as printed; ``suggest``
  holds a plausible reading, checked separately by the tests.

The repairs were found by treating one constant at a time as an unknown and
solving the (at most quadratic) axiom residuals for it at several samples.
"""

_A11 = "LR:A:1|1:1/"
_A201 = "LR:A:2|0:1/"
_A202 = "LR:A:2|0:2/"

_NONIDEMPOTENT = "e2^0 is idempotent, so its action must be a projection; the printed map is not"

ROW_OPTIONS = {
    # ---------------------------------------------------------------- fixes
    _A11 + "L:2|2:7#2": {
        "fix": ("e1^1.f1^0 = lam*(f1^1 + i*f2^1); e1^1.f1^1 = 2*lam*f2^0; "
                "e1^1.f2^1 = 2*i*lam*f2^0", "rho(f1^0)(e1^1) = 1/2*e1^1"),
        "why": "the printed +/- on the f2^1 relation must be matched by the sign of i "
               "in the f1^0 relation; with -2i (row #3) the printed form holds",
    },
    _A11 + "L:2|2:9#2": {
        "fix": ("e1^1.f1^0 = lam*f2^1; e1^1.f1^1 = lam/p*f2^0",
                "rho(f1^0)(e1^1) = (1 - p)*e1^1"),
        "why": "compatibility forces the f2^0 coefficient to be lam/p; the only other "
               "single change (lam -> 1) removes the parameter",
    },
    _A11 + "L:2|2:11#3": {
        "fix": ("e1^1.f1^1 = 2*lam/(2*p - i)*f2^0; e1^1.f1^0 = lam*(i*f1^1 + f2^1); "
                "e1^1.f2^1 = -2*i*lam/(2*p - i)*f2^0",
                "rho(f1^0)(e1^1) = -(2*i*p - 1)/2*e1^1"),
        "why": "the sign of i must flip together with the other variant (row #2); "
               "unique single-constant repair",
    },
    _A201 + "L:1|2:6#3": {
        "fix": ("e2^0.f1^1 = -lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 + lam*f2^1",
                "null"),
        "why": "nilpotent e2^0 needs a trace-free square-zero block; unique repair of "
               "the f2^1 coefficient is lam",
    },
    _A201 + "L:2|1:2#2": {
        "fix": ("e2^0.f1^0 = -lam*(f1^0 + f2^0); e2^0.f2^0 = lam*(f1^0 + f2^0)", "null"),
        "why": "unique single-constant repair: the f1^0 coefficient must be -lam",
    },
    _A201 + "L:2|2:18#5": {
        "fix": ("e2^0.f1^1 = -lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 + lam*f2^1",
                "null"),
        "why": "same square-zero block as the (2|0,1|2) row; unique repair",
    },
    _A201 + "L:2|2:18#6": {
        "fix": ("e2^0.f1^0 = -lam*f1^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 + lam*f2^0",
                "null"),
        "why": "even analogue of row #5; unique repair",
    },
    _A202 + "L:2|1:6#1": {
        "fix": ("e2^0.f1^0 = (1 - lam)*f1^0 + mu*f2^0; "
                "e2^0.f2^0 = lam*(1 - lam)/mu*f1^0 + lam*f2^0", "null"),
        "why": "rank one projection needs determinant zero; the two single repairs "
               "(this one, or mu -> -mu in the first relation) agree under mu -> -mu",
    },
    # ---------------------------------------------------------------- flags
    _A11 + "L:1|2:6#1": {
        "flag": "only the zero anchor satisfies the axioms with the trivial action",
    },
    _A11 + "L:2|2:15#2": {
        "flag": "only lam = 0 satisfies compatibility",
    },
    _A11 + "L:2|2:15#3": {
        "flag": "only lam = 0 satisfies compatibility",
    },
    _A11 + "L:2|2:16#3": {
        "flag": "module identity fails and no single constant repairs it",
    },
    _A11 + "L:3|1:7#3": {
        "flag": "e1^1.f2^0 = mu*f2^0 does not respect the grading; reading it as "
                "mu*f1^1 still fails because e1^1 must act with square zero",
    },
    _A11 + "L:4|0:5#1": {
        "flag": "the anchor is a morphism only when mu = 0",
    },
    _A201 + "L:2|2:18#3": {
        "flag": "the f1^0 relation repeats f2^0; no single constant repairs it",
        "suggest": ("e2^0.f1^0 = -lam*f1^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 + lam*f2^0; "
                    "e2^0.f1^1 = -gam*f1^1 + theta*f2^1; "
                    "e2^0.f2^1 = -gam**2/theta*f1^1 + gam*f2^1", "null"),
    },
    _A202 + "L:1|2:6#1": {
        "flag": _NONIDEMPOTENT + "; two constants are off",
        "suggest": ("e2^0.f1^1 = (1 - lam)*f1^1 + mu*f2^1; "
                    "e2^0.f2^1 = lam*(1 - lam)/mu*f1^1 + lam*f2^1", "null"),
    },
    _A202 + "L:2|0:1#2": {
        "flag": _NONIDEMPOTENT,
        "suggest": ("e2^0.f2^0 = lam*f1^0 + f2^0", "null"),
    },
    _A202 + "L:2|0:1#3": {
        "flag": _NONIDEMPOTENT + " unless lam is 0 or 1",
    },
    _A202 + "L:2|1:1#2": {
        "flag": _NONIDEMPOTENT,
        "suggest": ("e2^0.f1^0 = f1^0 + lam*f2^0", "null"),
    },
    _A202 + "L:2|1:2#3": {
        "flag": "compatibility fails and no single constant repairs it",
    },
    _A202 + "L:2|1:2#5": {
        "flag": _NONIDEMPOTENT + " for the minus sign; the plus sign is row #4",
    },
    _A202 + "L:2|1:6#6": {
        "flag": _NONIDEMPOTENT,
        "suggest": ("e2^0.f2^0 = lam*f1^0 + f2^0", "null"),
    },
    _A202 + "L:2|2:2#1": {
        "flag": "the last relation repeats f2^1; no single constant repairs it",
        "suggest": ("e2^0.f1^0 = 1/2*f1^0 - i/2*f2^0; e2^0.f2^0 = i/2*f1^0 + 1/2*f2^0; "
                    "e2^0.f1^1 = 1/2*f1^1 + i/2*f2^1; e2^0.f2^1 = -i/2*f1^1 + 1/2*f2^1",
                    "null"),
    },
    _A202 + "L:2|2:2#2": {
        "flag": "the last relation repeats f2^1; no single constant repairs it",
        "suggest": ("e2^0.f1^0 = 1/2*f1^0 + i/2*f2^0; e2^0.f2^0 = -i/2*f1^0 + 1/2*f2^0; "
                    "e2^0.f1^1 = 1/2*f1^1 - i/2*f2^1; e2^0.f2^1 = i/2*f1^1 + 1/2*f2^1",
                    "null"),
    },
}
