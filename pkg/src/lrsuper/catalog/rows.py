"""Lie-Rinehart superstructures listed in the classification tables.

Each table is a list of rows (A id, L id or list of L ids, action, anchor[,
options]).  An action of "trivial" means the unit acts as the identity and
every other basis element acts as zero; listed relations e.f = ... are added
on top of the identity action of the unit.  An anchor of "null" is zero.

Options:
  nonzero  parameter expressions that must not vanish;
  fix      (action, anchor) replacing the printed data when the axioms force
           a single correction;
  flag     reason the printed row cannot be verified and no correction is
           forced;
  marker   the row stands for a family not listed in the table.
"""

T = "trivial"
N = "null"

TABLES = [
    ("(1|1,1|0)", [
        ("A:1|1:1", "L:1|0:1", T, "rho(f1^0)(e1^1) = lam*e1^1"),
    ]),
    ("(1|1,1|1)", [
        ("A:1|1:1", "L:1|1:1", "e1^1.f1^1 = lam*f1^0", N),
        ("A:1|1:1", "L:1|1:2", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|1:2", "e1^1.f1^1 = lam*f1^0",
         "rho(f1^0)(e1^1) = -e1^1; rho(f1^1)(e1^1) = -lam*e1^0"),
        ("A:1|1:1", "L:1|1:2", "e1^1.f1^0 = lam*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|1:3", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|1:3", "e1^1.f1^0 = lam*f1^1", N),
    ]),
    ("(1|1,2|0)", [
        ("A:1|1:1", "L:2|0:1", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|0:2", T, "rho(f1^0)(e1^1) = lam*e1^1"),
    ]),
    ("(2|0,0|1)", [
        ("A:2|0:2", "L:0|1:1", "e2^0.f1^1 = f1^1", N),
    ]),
    ("(2|0,0|2)", [
        ("A:2|0:1", "L:0|2:1", "e2^0.f2^1 = lam*f1^1", N),
        # the action of e2 must be nilpotent of order 2; with the printed
        # -mu*f2^1 the trace is lam - mu, so the coefficient is forced to -lam
        ("A:2|0:1", "L:0|2:1",
         "e2^0.f1^1 = lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 - mu*f2^1", N,
         {"nonzero": ["mu"],
          "fix": ("e2^0.f1^1 = lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 - lam*f2^1", N),
          "why": "e2^0 e2^0 = 0 forces the action matrix to square to zero; trace zero "
                 "fixes the f2^1 coefficient to -lam"}),
        ("A:2|0:2", "L:0|2:1", "e2^0.f2^1 = lam*f1^1 + f2^1", N),
        ("A:2|0:2", "L:0|2:1", "e2^0.f1^1 = f1^1; e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:2", "L:0|2:1", "e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:0|2:1", "e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:0|2:1",
         "e2^0.f1^1 = lam*f1^1 + mu*f2^1; e2^0.f2^1 = (lam - lam**2)/mu*f1^1 - (1 - mu)*f2^1", N,
         {"nonzero": ["mu"],
          "fix": ("e2^0.f1^1 = lam*f1^1 + mu*f2^1; "
                  "e2^0.f2^1 = (lam - lam**2)/mu*f1^1 + (1 - lam)*f2^1", N),
          "why": "e2^0 e2^0 = e2^0 forces an idempotent action matrix; given the other "
                 "three entries its trace must be 1, fixing the f2^1 coefficient to 1 - lam"}),
    ]),
    ("(2|0,1|0)", [
        ("A:2|0:1", "L:1|0:1", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:2", "L:1|0:1", "e2^0.f1^0 = f1^0", N),
    ]),
    ("(2|0,1|1)", [
        ("A:2|0:1", "L:1|1:2", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|1:3", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:2", ["L:1|1:1", "L:1|1:2"], "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:1|1:3", "e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:1|1:3", "e2^0.f1^0 = f1^0", N),
        ("A:2|0:2", "L:1|1:3", "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1", N),
    ]),
    ("(2|0,2|0)", [
        ("A:2|0:1", "L:2|0:1", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = mu*e2^0"),
        ("A:2|0:1", "L:2|0:1", "e2^0.f2^0 = lam*f1^0", N),
        ("A:2|0:1", "L:2|0:1",
         "e2^0.f1^0 = lam*f1^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 - lam*f2^0", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:1", "L:2|0:2", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|0:2", "e2^0.f1^0 = lam*f2^0", "rho(f1^0)(e2^0) = e2^0"),
        ("A:2|0:2", "L:2|0:1", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0", N),
        ("A:2|0:2", "L:2|0:1", "e2^0.f2^0 = lam*f1^0", N),
        ("A:2|0:2", "L:2|0:1", "e2^0.f2^0 = lam*f2^0", N),
        ("A:2|0:2", "L:2|0:1", "e2^0.f2^0 = lam*f1^0 + f2^0", N),
        ("A:2|0:2", "L:2|0:1",
         "e2^0.f1^0 = lam*f1^0 + mu*f2^0; e2^0.f2^0 = -(lam - 1)*lam/mu*f1^0 + (1 - lam)*f2^0", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", "L:2|0:2", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0", N),
    ]),
    # appendix tables
    ("(1|1,1|2)", [
        ("A:1|1:1", "L:1|2:1", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|2:1", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|2:1", "e1^1.f1^0 = mu*f2^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:1|2:2", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|2:2", "e1^1.f1^0 = mu*f1^1", N),
        ("A:1|1:1", "L:1|2:3", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|2:3", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|2:4", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|2:4", "e1^1.f1^0 = mu*(f1^1 - i*f2^1)", "rho(f1^0)(e1^1) = (p - i)*e1^1"),
        ("A:1|1:1", "L:1|2:4", "e1^1.f1^0 = mu*(f1^1 + i*f2^1)", "rho(f1^0)(e1^1) = (p + i)*e1^1"),
        ("A:1|1:1", "L:1|2:5", "e1^1.f1^1 = mu*f1^0; e1^1.f2^1 = gam*f1^0", N),
        ("A:1|1:1", "L:1|2:6", T, "rho(f1^1)(e1^1) = lam*e1^0"),
        ("A:1|1:1", "L:1|2:6", "e1^1.f1^1 = lam*f1^0; e1^1.f2^1 = mu*f1^0", N),
        ("A:1|1:1", "L:1|2:6", "e1^1.f1^0 = lam*f1^1 + mu*f2^1", N),
    ]),
    ("(1|1,1|3)", [
        ("A:1|1:1", "L:1|3:1", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:1", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|3:1", "e1^1.f1^0 = mu*f2^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:1|3:1", "e1^1.f1^0 = mu*f3^1", "rho(f1^0)(e1^1) = q*e1^1"),
        ("A:1|1:1", "L:1|3:2", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:2", "e1^1.f1^0 = mu*f2^1", N),
        ("A:1|1:1", "L:1|3:2", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|3:3", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:3", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:1|3:3", "e1^1.f1^0 = mu*f2^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|3:4", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:4", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:1|3:4", "e1^1.f1^0 = gam*(f2^1 - i*f3^1)", "rho(f1^0)(e1^1) = (q - i)*e1^1"),
        ("A:1|1:1", "L:1|3:4", "e1^1.f1^0 = gam*(f2^1 + i*f3^1)", "rho(f1^0)(e1^1) = (q + i)*e1^1"),
        ("A:1|1:1", "L:1|3:5", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:5", "e1^1.f1^0 = mu*f1^1", N),
        ("A:1|1:1", "L:1|3:6", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:6", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:1|3:7",
         "e1^1.f1^1 = mu*f1^0; e1^1.f2^1 = gam*f1^0; e1^1.f3^1 = lam*f1^0", N),
        ("A:1|1:1", "L:1|3:8", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:1|3:8",
         "e1^1.f1^1 = lam*f1^0; e1^1.f2^1 = mu*f1^0; e1^1.f3^1 = gam*f1^0", N),
        ("A:1|1:1", "L:1|3:8", "e1^1.f1^0 = lam*f1^1 + mu*f2^1 + gam*f3^1", N),
    ]),
    ("(1|1,2|1)", [
        ("A:1|1:1", "L:2|1:1", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|1:1", "e1^1.f1^1 = lam*f1^0 + mu*f2^0", N),
        ("A:1|1:1", "L:2|1:2", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|1:2", "e1^1.f1^0 = lam*f1^1; e1^1.f2^0 = mu*f1^1",
         "rho(f1^0)(e1^1) = e1^1; rho(f2^0)(e1^1) = -e1^1"),
        ("A:1|1:1", "L:2|1:3", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|1:4", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|1:4", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:2|1:5", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|1:5", "e1^1.f1^0 = mu*f1^1", N),
        ("A:1|1:1", "L:2|1:5", "e1^1.f1^1 = mu*f2^0", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:2|1:6", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|1:6", "e1^1.f1^1 = lam*f1^0 + mu*f2^0", N),
        ("A:1|1:1", "L:2|1:6", "e1^1.f1^0 = lam*f1^1; e1^1.f2^0 = mu*f1^1", N),
    ]),
    ("(1|1,2|2)", [
        ("A:1|1:1", "L:2|2:1", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|2:1", "e1^1.f1^0 = lam*f1^1; e1^1.f2^0 = mu*f1^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:2|2:2", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|2:2", "e1^1.f1^0 = lam*(-i*f1^1 + f2^1)",
         "rho(f1^0)(e1^1) = e1^1; rho(f2^0)(e1^1) = i*e1^1"),
        ("A:1|1:1", "L:2|2:2", "e1^1.f1^0 = lam*(i*f1^1 + f2^1); e1^1.f2^0 = mu*(i*f1^1 + f2^1)",
         "rho(f1^0)(e1^1) = e1^1; rho(f2^0)(e1^1) = -i*e1^1"),
        ("A:1|1:1", "L:2|2:2", "e1^1.f1^0 = lam*(f1^1 - i*f2^1); e1^1.f2^0 = mu*(f1^1 - i*f2^1)",
         "rho(f1^0)(e1^1) = e1^1; rho(f2^0)(e1^1) = -i*e1^1"),
        ("A:1|1:1", "L:2|2:2", "e1^1.f1^0 = lam*(f1^1 + i*f2^1); e1^1.f2^0 = mu*(f1^1 + i*f2^1)",
         "rho(f1^0)(e1^1) = e1^1; rho(f2^0)(e1^1) = i*e1^1"),
        ("A:1|1:1", "L:2|2:3", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:3", "e1^1.f1^0 = lam*f2^1", "rho(f1^0)(e1^1) = q*e1^1"),
        ("A:1|1:1", "L:2|2:3", "e1^1.f1^0 = lam*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:2|2:4", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:4", "e1^1.f1^0 = lam*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:2|2:5", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:5", "e1^1.f1^0 = lam*(f1^1 - i*f2^1)", "rho(f1^0)(e1^1) = (p - i*q)*e1^1"),
        ("A:1|1:1", "L:2|2:5", "e1^1.f1^0 = lam*(f1^1 + i*f2^1)", "rho(f1^0)(e1^1) = (p + i*q)*e1^1"),
        ("A:1|1:1", "L:2|2:5", "e1^1.f1^0 = lam*(i*f1^1 + f2^1)", "rho(f1^0)(e1^1) = (p - i*q)*e1^1"),
        ("A:1|1:1", "L:2|2:5", "e1^1.f1^0 = lam*(-i*f1^1 + f2^1)", "rho(f1^0)(e1^1) = (p + i*q)*e1^1"),
        ("A:1|1:1", "L:2|2:6", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:6", "e1^1.f1^0 = lam*f2^1; e1^1.f2^0 = -lam*f1^1", "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:2|2:6", "e1^1.f1^0 = lam*f1^1", "rho(f1^0)(e1^1) = (1 + p)*e1^1"),
        ("A:1|1:1", "L:2|2:7", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:7",
         "e1^1.f1^0 = lam*(f1^1 - i*f2^1); e1^1.f1^1 = 2*lam*f2^0; e1^1.f2^1 = 2*i*lam*f2^0",
         "rho(f1^0)(e1^1) = 1/2*e1^1"),
        ("A:1|1:1", "L:2|2:7",
         "e1^1.f1^0 = lam*(f1^1 - i*f2^1); e1^1.f1^1 = 2*lam*f2^0; e1^1.f2^1 = -2*i*lam*f2^0",
         "rho(f1^0)(e1^1) = 1/2*e1^1"),
        ("A:1|1:1", "L:2|2:8", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:8", "e1^1.f1^0 = mu*f2^1", "rho(f1^0)(e1^1) = 1/2*e1^1"),
        ("A:1|1:1", "L:2|2:9", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:9", "e1^1.f1^0 = lam*f2^1; e1^1.f1^1 = 1/p*f2^0",
         "rho(f1^0)(e1^1) = (1 - p)*e1^1", {"nonzero": ["p"]}),
        ("A:1|1:1", "L:2|2:9", "e1^1.f1^0 = (1 - p)*lam*f1^1; e1^1.f2^1 = lam*f2^0",
         "rho(f1^0)(e1^1) = p*e1^1"),
        ("A:1|1:1", "L:2|2:10", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:10", "e1^1.f1^0 = mu*f1^1", "rho(f1^0)(e1^1) = 1/2*e1^1"),
        ("A:1|1:1", "L:2|2:11", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:11",
         "e1^1.f1^0 = lam*(-i*f1^1 + f2^1); e1^1.f1^1 = 2*lam/(i + 2*p)*f2^0; "
         "e1^1.f2^1 = 2*i*lam/(i + 2*p)*f2^0",
         "rho(f1^0)(e1^1) = (1 + 2*i*p)/2*e1^1"),
        ("A:1|1:1", "L:2|2:11",
         "e1^1.f1^1 = 2*lam/(2*p - i)*f2^0; e1^1.f1^0 = lam*(i*f1^1 + f2^1); "
         "e1^1.f2^1 = 2*i*lam/(2*p - i)*f2^0",
         "rho(f1^0)(e1^1) = -(2*i*p - 1)/2*e1^1"),
        ("A:1|1:1", "L:2|2:13", "e1^1.f1^1 = lam*f1^0 + mu*f2^0; e1^1.f2^1 = gam*f1^0 + theta*f2^0", N),
        ("A:1|1:1", "L:2|2:14", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:14", "e1^1.f2^1 = lam*f2^0", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:2|2:14", "e1^1.f1^0 = lam*f2^1; e1^1.f1^1 = lam*f2^0", N),
        ("A:1|1:1", "L:2|2:15", T, "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:2|2:15", "e1^1.f2^0 = lam*f2^1", "rho(f1^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:2|2:15", "e1^1.f2^1 = lam*f2^0", N),
        ("A:1|1:1", "L:2|2:16", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:16",
         "e1^1.f1^0 = lam*f2^1; e1^1.f2^0 = mu*f2^1; e1^1.f1^1 = lam*f2^0 - mu*f1^0",
         "rho(f1^0)(e1^1) = -e1^1; rho(f1^1)(e1^1) = mu*e1^0"),
        ("A:1|1:1", "L:2|2:16",
         "e1^1.f1^0 = lam*f1^1; e1^1.f2^0 = mu*f1^1; e1^1.f1^1 = mu*f1^0 - lam*f2^0",
         "rho(f1^0)(e1^1) = e1^1; rho(f1^1)(e1^1) = mu*e1^0"),
        ("A:1|1:1", "L:2|2:17", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:2|2:17",
         "e1^1.f1^0 = lam*f1^1; e1^1.f2^0 = mu*f1^1; e1^1.f2^1 = mu*f1^0 - lam*f2^0", N),
        ("A:1|1:1", "L:2|2:18", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:2|2:18", None, N, {"marker": "too many compatible actions to be listed"}),
    ]),
    ("(1|1,3|0)", [
        ("A:1|1:1", "L:3|0:1", T,
         "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1; rho(f3^0)(e1^1) = gam*e1^1"),
        ("A:1|1:1", "L:3|0:2", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|0:3", T, "rho(f2^0)(e1^1) = lam*e1^1; rho(f3^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|0:4", T, "rho(f1^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:3|0:5", T, "rho(f1^0)(e1^1) = lam*e1^1"),
    ]),
    ("(1|1,3|1)", [
        ("A:1|1:1", "L:3|1:1", T, "rho(f2^0)(e1^1) = lam*e1^1; rho(f3^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:1", "e1^1.f2^0 = lam*f1^1; e1^1.f3^0 = mu*f1^1", "rho(f2^0)(e1^1) = e1^1"),
        ("A:1|1:1", "L:3|1:2", T, "rho(f3^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:2", "e1^1.f3^0 = lam*f1^1", "rho(f3^0)(e1^1) = q*e1^1"),
        ("A:1|1:1", "L:3|1:3", T, "rho(f3^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:3", "e1^1.f3^0 = lam*f1^1", "rho(f3^0)(e1^1) = q*e1^1"),
        ("A:1|1:1", "L:3|1:4", T, "rho(f2^0)(e1^1) = lam*e1^1; rho(f3^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:4", "e1^1.f1^1 = lam*f1^0", N),
        ("A:1|1:1", "L:3|1:5", T, "rho(f1^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:6", T, "rho(f1^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:3|1:7", T,
         "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1; rho(f3^0)(e1^1) = gam*e1^1"),
        ("A:1|1:1", "L:3|1:7", "e1^1.f1^1 = lam*f1^0 + mu*f2^0 + gam*f3^0", N),
        ("A:1|1:1", "L:3|1:7", "e1^1.f1^1 = lam*f1^0; e1^1.f2^0 = mu*f2^0; e1^1.f3^0 = gam*f1^1", N),
    ]),
    ("(1|1,4|0)", [
        ("A:1|1:1", "L:4|0:1", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1; "
                                  "rho(f3^0)(e1^1) = gam*e1^1; rho(f4^0)(e1^1) = theta*e1^1"),
        ("A:1|1:1", "L:4|0:2", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1; "
                                  "rho(f4^0)(e1^1) = gam*e1^1"),
        ("A:1|1:1", "L:4|0:3", T, "rho(f2^0)(e1^1) = lam*e1^1; rho(f3^0)(e1^1) = mu*e1^1; "
                                  "rho(f4^0)(e1^1) = gam*e1^1"),
        ("A:1|1:1", "L:4|0:4", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f4^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:4|0:5", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f3^0)(e1^1) = mu*e1^1; "
                                  "rho(f4^0)(e1^1) = gam*e1^1"),
        ("A:1|1:1", "L:4|0:6", T, "rho(f2^0)(e1^1) = lam*e1^1; rho(f4^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", "L:4|0:7", T, "rho(f4^0)(e1^1) = lam*e1^1"),
        ("A:1|1:1", "L:4|0:8", T, "rho(f1^0)(e1^1) = lam*e1^1; rho(f2^0)(e1^1) = mu*e1^1"),
        ("A:1|1:1", ["L:4|0:%d" % k for k in range(9, 17)], T, "rho(f1^0)(e1^1) = lam*e1^1"),
    ]),
    ("(2|0,0|3) and (2|0,0|4)", [
        (a, l, None, N, {"marker": "too many suitable actions to be listed"})
        for a in ("A:2|0:1", "A:2|0:2") for l in ("L:0|3:1", "L:0|4:1")
    ]),
    ("(2|0,1|2)", [
        ("A:2|0:1", "L:1|2:1", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|2:2", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|2:2", "e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:1", ["L:1|2:3", "L:1|2:4"], T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|2:6", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|2:6", "e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:1", "L:1|2:6",
         "e2^0.f1^1 = -lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 + mu*f2^1", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", ["L:1|2:%d" % k for k in range(1, 6)],
         "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:1|2:6",
         "e2^0.f1^1 = (1 - lam)*f1^1 + mu*f2^1; e2^0.f2^1 = lam*(lam - 1)/mu*f1^1 + mu*f2^1", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", "L:1|2:6", "e2^0.f2^1 = lam*f1^1 + f2^1", N),
        ("A:2|0:2", "L:1|2:6", "e2^0.f1^1 = f1^1; e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:2", "L:1|2:6", "e2^0.f1^0 = f1^0; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:1|2:6", "e2^0.f1^1 = f1^1; e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:2", "L:1|2:6", "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
    ]),
    ("(2|0,1|3)", [
        ("A:2|0:1", ["L:1|3:1", "L:1|3:3", "L:1|3:4", "L:1|3:6"], T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|3:2", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|3:2", "e2^0.f3^1 = lam*f2^1", N),
        ("A:2|0:1", "L:1|3:2", "e2^0.f3^1 = lam*f1^1", "rho(f1^0)(e2^0) = e2^0"),
        ("A:2|0:1", "L:1|3:5", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|3:5", "e2^0.f3^1 = lam*f1^1", N),
        ("A:2|0:1", "L:1|3:8", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:1|3:8", None, N, {"marker": "too many compatible actions to be listed"}),
        ("A:2|0:2", ["L:1|3:%d" % k for k in range(1, 8)],
         "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1; e2^0.f3^1 = f3^1", N),
        ("A:2|0:2", "L:1|3:8", None, N, {"marker": "too many compatible actions to be listed"}),
    ]),
    ("(2|0,2|1)", [
        ("A:2|0:1", "L:2|1:1", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|1:1", "e2^0.f1^0 = lam*f2^0", N),
        ("A:2|0:1", "L:2|1:2", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|1:2", "e2^0.f1^0 = lam*(f1^0 - f2^0); e2^0.f2^0 = lam*(f1^0 + f2^0)", N),
        ("A:2|0:1", ["L:2|1:3", "L:2|1:4", "L:2|1:5"], T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", ["L:2|1:3", "L:2|1:4", "L:2|1:5"], "e2^0.f1^0 = lam*f2^0",
         "rho(f1^0)(e2^0) = e2^0"),
        ("A:2|0:1", "L:2|1:6", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|1:6", "e2^0.f1^0 = lam*f2^0", N),
        ("A:2|0:1", "L:2|1:6",
         "e2^0.f1^0 = -lam*f1^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 + lam*f2^0", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", "L:2|1:1", "e2^0.f1^0 = f1^0 + lam*f2^0", N),
        ("A:2|0:2", "L:2|1:1", "e2^0.f1^0 = lam*f2^0", N),
        ("A:2|0:2", "L:2|1:1", "e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:1", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:2", "e2^0.f1^0 = (1 - lam)*(f1^0 + f2^0); e2^0.f2^0 = lam*(f1^0 + f2^0)", N),
        ("A:2|0:2", "L:2|1:2", "e2^0.f1^0 = f1^0 + f2^0", N),
        ("A:2|0:2", "L:2|1:2",
         "e2^0.f1^0 = (1 - lam)*f1^0 - lam*f2^0; e2^0.f2^0 = -(1 - lam)*f1^0 + lam*f2^0", N),
        ("A:2|0:2", "L:2|1:2", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:2", "e2^0.f1^0 = f1^0; e2^0.f2^0 = -f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", ["L:2|1:3", "L:2|1:4"], "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:5", "e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:5", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0", N),
        ("A:2|0:2", "L:2|1:5", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:6",
         "e2^0.f1^0 = (1 - lam)*f1^0 + mu*f2^0; e2^0.f2^0 = lam*(lam - 1)/mu*f1^0 + lam*f2^0", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", "L:2|1:6", "e2^0.f1^0 = f1^0 + lam*f2^0", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f1^0 = f1^0 + lam*f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f1^0 = f1^0 + lam*f2^0", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f2^0 = lam*f1^0 + f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f2^0 = lam*f1^0", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|1:6", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
    ]),
    ("(2|0,2|2)", [
        ("A:2|0:1", "L:2|2:1", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|2:1", "e2^0.f1^0 = lam*f2^0; e2^0.f2^1 = lam*f1^1", N),
        ("A:2|0:1", "L:2|2:2", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", ["L:2|2:%d" % k for k in range(3, 16) if k not in (6, 12, 13)], T,
         "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", ["L:2|2:%d" % k for k in range(3, 16) if k not in (6, 12, 13)],
         "e2^0.f1^0 = lam*f2^0", "rho(f1^0)(e2^0) = e2^0"),
        ("A:2|0:1", "L:2|2:6", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|2:6", "e2^0.f1^0 = lam*f2^0; e2^0.f2^1 = lam/p*f1^1",
         "rho(f1^0)(e2^0) = e2^0"),
        ("A:2|0:1", "L:2|2:16", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|2:16", "e2^0.f1^0 = lam*f2^0", N),
        ("A:2|0:1", "L:2|2:17", T, "rho(f1^0)(e2^0) = lam*e2^0"),
        ("A:2|0:1", "L:2|2:17", "e2^0.f1^0 = lam*f2^0; e2^0.f2^1 = mu*f1^1", N),
        ("A:2|0:1", "L:2|2:18", T, "rho(f1^0)(e2^0) = lam*e2^0; rho(f2^0)(e2^0) = mu*e2^0"),
        ("A:2|0:1", "L:2|2:18", "e2^0.f1^0 = lam*f2^0; e2^0.f2^1 = mu*f1^1", N),
        ("A:2|0:1", "L:2|2:18",
         "e2^0.f1^0 = -lam*f2^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 + lam*f2^0; "
         "e2^0.f1^1 = -gam*f1^1 + theta*f2^1; e2^0.f2^1 = -gam**2/theta*f1^1 + gam*f2^1", N,
         {"nonzero": ["mu", "theta"]}),
        ("A:2|0:1", "L:2|2:18", "e2^0.f2^0 = lam*f1^0; e2^0.f2^1 = mu*f1^1", N),
        ("A:2|0:1", "L:2|2:18",
         "e2^0.f1^1 = -lam*f1^1 + mu*f2^1; e2^0.f2^1 = -lam**2/mu*f1^1 + mu*f2^1", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:1", "L:2|2:18",
         "e2^0.f1^0 = -lam*f1^0 + mu*f2^0; e2^0.f2^0 = -lam**2/mu*f1^0 + mu*f2^0", N,
         {"nonzero": ["mu"]}),
        ("A:2|0:2", ["L:2|2:%d" % k for k in range(1, 18) if k not in (2, 13, 15)],
         "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:2|2:2",
         "e2^0.f1^0 = 1/2*f1^0 - i/2*f2^0; e2^0.f2^0 = i/2*f1^0 + 1/2*f2^0; "
         "e2^0.f1^1 = 1/2*f1^1 + i/2*f2^1; e2^0.f2^1 = -i/2*f2^1 + 1/2*f2^1", N),
        ("A:2|0:2", "L:2|2:2",
         "e2^0.f1^0 = 1/2*f1^0 + i/2*f2^0; e2^0.f2^0 = -i/2*f1^0 + 1/2*f2^0; "
         "e2^0.f1^1 = 1/2*f1^1 - i/2*f2^1; e2^0.f2^1 = i/2*f2^1 + 1/2*f2^1", N),
        ("A:2|0:2", "L:2|2:13",
         "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:2|2:13", "e2^0.f2^0 = f2^0; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:2|2:13", "e2^0.f1^0 = f1^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|2:15",
         "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1; e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:2|2:15", "e2^0.f2^1 = f2^1", N),
        ("A:2|0:2", "L:2|2:15", "e2^0.f1^0 = f1^0; e2^0.f2^0 = f2^0; e2^0.f1^1 = f1^1", N),
        ("A:2|0:2", "L:2|2:18", None, N, {"marker": "too many compatible actions to be listed"}),
    ]),
    # pairs admitting only the trivial action and the zero anchor
    ("exceptional", [
        (a, l, T, N) for a, l in (("A:1|1:1", "L:2|2:12"), ("A:1|1:1", "L:3|0:6"),
                                  ("A:2|0:1", "L:1|1:1"), ("A:2|0:1", "L:1|2:2"),
                                  ("A:2|0:1", "L:1|3:7"))
    ]),
]

# pairs claimed to admit only the trivial action and the zero anchor
EXCEPTIONAL_PAIRS = [(r[0], r[1]) for r in TABLES[-1][1]]
