"""A tiny statement language for structure constants.

Statements look like the printed tables::

    e2^0 e2^0 = e2^0                  (associative product)
    [f1^0, f1^1] = p*f1^1 - f2^1       (Lie bracket)
    e1^1 . f1^0 = mu*(f1^1 - i*f2^1)   (action)
    rho(f1^0)(e1^1) = (p - i)*e1^1     (anchor)

and are separated by ``;``.  Right-hand sides are arithmetic expressions in
basis vectors, parameters and the imaginary unit ``i``; they are evaluated
with :mod:`ast` so nothing is executed.
"""

import ast
import re

from ..exactmath import I, ZERO, Scalar, as_scalar

__all__ = ["Statement", "parse_statements", "evaluate", "free_names", "DSLError"]

BASIS_RE = re.compile(r"([ef])(\d+)\^([01])")


class DSLError(ValueError):
    pass


def _ident(text):
    return BASIS_RE.sub(r"\1\2_\3", text)


def basis_name(ident):
    """Identifier 'e2_0' back to the label 'e2^0'."""
    m = re.fullmatch(r"([ef])(\d+)_([01])", ident)
    return "%s%s^%s" % m.groups() if m else None


_B = r"([ef]\d+\^[01])"
_FORMS = [
    ("bracket", re.compile(r"^\[\s*%s\s*,\s*%s\s*\]\s*=\s*(.+)$" % (_B, _B))),
    ("anchor", re.compile(r"^rho\s*\(\s*%s\s*\)\s*\(\s*%s\s*\)\s*=\s*(.+)$" % (_B, _B))),
    ("action", re.compile(r"^%s\s*\.\s*%s\s*=\s*(.+)$" % (_B, _B))),
    ("product", re.compile(r"^%s\s+%s\s*=\s*(.+)$" % (_B, _B))),
]


class Statement:
    __slots__ = ("kind", "left", "right", "expr", "text")

    def __init__(self, kind, left, right, expr, text):
        self.kind = kind
        self.left = left
        self.right = right
        self.expr = expr
        self.text = text

    def __repr__(self):
        return "Statement(%r)" % self.text


def parse_statements(text):
    """Split on ';' and parse each statement; 'trivial'/'null'/'' give []."""
    if text is None:
        return []
    out = []
    for part in text.split(";"):
        s = part.strip()
        if not s or s in ("trivial", "null", "zero"):
            continue
        for kind, rx in _FORMS:
            m = rx.match(s)
            if m:
                left, right, rhs = m.groups()
                try:
                    expr = ast.parse(_ident(rhs), mode="eval").body
                except SyntaxError as exc:
                    raise DSLError("cannot parse %r: %s" % (s, exc)) from None
                _validate(expr, s)
                out.append(Statement(kind, left, right, expr, s))
                break
        else:
            raise DSLError("unrecognized statement %r" % s)
    return out


_ALLOWED = (ast.BinOp, ast.UnaryOp, ast.Name, ast.Constant, ast.Add, ast.Sub,
            ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd, ast.Load)


def _validate(node, text):
    for sub in ast.walk(node):
        if not isinstance(sub, _ALLOWED):
            raise DSLError("disallowed syntax %s in %r" % (type(sub).__name__, text))
        if isinstance(sub, ast.Constant) and not isinstance(sub.value, int):
            raise DSLError("only integer literals are allowed in %r" % text)


def free_names(statements):
    """Parameter names used by the statements (basis labels and i excluded)."""
    names = set()
    for st in statements:
        for sub in ast.walk(st.expr):
            if isinstance(sub, ast.Name) and sub.id != "i" and basis_name(sub.id) is None:
                names.add(sub.id)
    return names


class _Vec:
    """Formal linear combination of basis labels."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    def _lin(self, other, s):
        if not isinstance(other, _Vec):
            raise DSLError("cannot add a scalar to a basis vector")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + s * v
        return _Vec(out)

    def scaled(self, c):
        return _Vec({k: c * v for k, v in self.terms.items()})


def _arith(op, a, b):
    va, vb = isinstance(a, _Vec), isinstance(b, _Vec)
    if isinstance(op, ast.Add):
        if va or vb:
            if not (va and vb):
                raise DSLError("cannot add a scalar to a basis vector")
            return a._lin(b, 1)
        return a + b
    if isinstance(op, ast.Sub):
        if va or vb:
            if not (va and vb):
                raise DSLError("cannot subtract a scalar and a basis vector")
            return a._lin(b, -1)
        return a - b
    if isinstance(op, ast.Mult):
        if va and vb:
            raise DSLError("product of two basis vectors")
        if va:
            return a.scaled(b)
        if vb:
            return b.scaled(a)
        return a * b
    if isinstance(op, ast.Div):
        if vb:
            raise DSLError("division by a basis vector")
        if not b:
            raise ZeroDivisionError("division by zero in statement")
        if va:
            return a.scaled(b.inverse())
        return a / b
    if isinstance(op, ast.Pow):
        if va or vb or not b.is_real() or b.re.denominator != 1:
            raise DSLError("only integer powers of scalars are allowed")
        return a ** int(b.re)
    raise DSLError("unsupported operator")


def _eval(node, env):
    if isinstance(node, ast.Constant):
        return Scalar(node.value)
    if isinstance(node, ast.Name):
        if node.id == "i":
            return I
        label = basis_name(node.id)
        if label is not None:
            return _Vec({label: Scalar(1)})
        if node.id not in env:
            raise KeyError("missing parameter %r" % node.id)
        return as_scalar(env[node.id])
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env)
        if isinstance(node.op, ast.USub):
            return v.scaled(Scalar(-1)) if isinstance(v, _Vec) else -v
        return v
    if isinstance(node, ast.BinOp):
        return _arith(node.op, _eval(node.left, env), _eval(node.right, env))
    raise DSLError("unsupported expression")


def evaluate(statement, env):
    """Right-hand side as a dict label -> Scalar (zeros dropped)."""
    v = _eval(statement.expr, env)
    if not isinstance(v, _Vec):
        if v:
            raise DSLError("right-hand side of %r is a nonzero scalar" % statement.text)
        return {}
    return {k: x for k, x in v.terms.items() if x}


def evaluate_scalar(text, env):
    expr = ast.parse(_ident(text), mode="eval").body
    _validate(expr, text)
    v = _eval(expr, env)
    if isinstance(v, _Vec):
        raise DSLError("expected a scalar expression: %r" % text)
    return v
