"""JSON files for single structures and for the whole catalog.

Algebra document:
    {"kind": "associative" | "lie", "name", "basis": [{"name", "parity"}...],
     "unit": index | null, "constants": [[i, j, k, "re", "im"]...],
     "params": [{"name", "condition"[, "value"]}...]}
Lie-Rinehart document:
    {"kind": "lie-rinehart", "name", "A": <algebra>, "L": <algebra>,
     "action": [[a, x, y, "re", "im"]...], "anchor": [[x, a, b, "re", "im"]...],
     "params": [...]}

Indices are 0-based over the even-then-odd basis.  ``dumps`` writes the
canonical form (fixed key order, sorted constants, two-space indent, final
newline), so save(load(f)) reproduces a canonical file byte for byte.
"""

import json

from ..exactmath import Scalar, SparseTensor3
from ..gradedcore import LieSuperAlgebra, SuperAlgebra, SuperBasis
from ..lierinehart import LieRinehartStructure
from .core import CatalogEntry, LRRow, Param, entries, rows

__all__ = [
    "FileFormatError", "structure_to_doc", "doc_to_structure", "dumps", "loads",
    "load", "save", "export_catalog", "import_catalog",
]

KINDS = ("associative", "lie", "lie-rinehart")


class FileFormatError(ValueError):
    """Malformed document; ``field`` is a JSON path, ``line`` a source line if known."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append("line %d" % line)
        if field:
            where.append("field %s" % field)
        super().__init__("%s: %s" % (", ".join(where), message) if where else message)


# ---------------------------------------------------------------- writing

def _constants(tensor):
    return sorted(tensor.to_json(), key=lambda r: tuple(r[:3]))


def _params(params):
    out = []
    for p in params or ():
        if isinstance(p, dict):
            out.append(dict(p))
        else:
            out.append({"name": p[0], "condition": "any value", "value": str(p[1])})
    return out


def _algebra_doc(alg, params=None):
    kind = "associative" if isinstance(alg, SuperAlgebra) else "lie"
    tensor = alg.product if kind == "associative" else alg.bracket
    return {
        "kind": kind,
        "name": alg.name,
        "basis": [{"name": n, "parity": p} for n, p in zip(alg.basis.names, alg.basis.parities)],
        "unit": alg.unit_index if kind == "associative" else None,
        "constants": _constants(tensor),
        "params": _params(params),
    }


def structure_to_doc(obj, params=None):
    """Document for a SuperAlgebra, LieSuperAlgebra or LieRinehartStructure.

    ``params`` is a list of {"name", "condition"[, "value"]} dicts or a
    mapping name -> value recording the instantiation.
    """
    if isinstance(params, dict):
        params = sorted(params.items())
    if isinstance(obj, LieRinehartStructure):
        return {
            "kind": "lie-rinehart",
            "name": obj.name,
            "A": _algebra_doc(obj.A),
            "L": _algebra_doc(obj.L),
            "action": _constants(obj.action),
            "anchor": _constants(obj.anchor),
            "params": _params(params),
        }
    if isinstance(obj, (SuperAlgebra, LieSuperAlgebra)):
        return _algebra_doc(obj, params)
    raise TypeError("cannot serialize %r" % (obj,))


def dumps(doc):
    return _canonical_json(doc) + "\n"


def _canonical_json(doc, indent=0):
    pad = "  " * indent
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        if indent and all(not isinstance(v, (dict, list)) for v in doc.values()):
            return json.dumps(doc)
        items = ['%s  %s: %s' % (pad, json.dumps(k), _canonical_json(v, indent + 1))
                 for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(doc, list):
        if not doc:
            return "[]"
        if all(not isinstance(x, (dict, list)) for x in doc):
            return json.dumps(doc)
        items = [pad + "  " + _canonical_json(x, indent + 1) for x in doc]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(doc)


def save(obj, path, params=None):
    doc = obj if isinstance(obj, dict) else structure_to_doc(obj, params)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


# ---------------------------------------------------------------- reading

def _need(doc, key, typ, field):
    if not isinstance(doc, dict):
        raise FileFormatError("expected an object", field)
    if key not in doc:
        raise FileFormatError("missing key %r" % key, field)
    v = doc[key]
    if typ is not None and not isinstance(v, typ) or isinstance(v, bool) and typ is int:
        raise FileFormatError("expected %s" % getattr(typ, "__name__", typ), "%s.%s" % (field, key))
    return v


def _read_basis(doc, field):
    items = _need(doc, "basis", list, field)
    labels = []
    for i, b in enumerate(items):
        f = "%s.basis[%d]" % (field, i)
        name = _need(b, "name", str, f)
        parity = _need(b, "parity", int, f)
        labels.append((name, parity))
    try:
        return SuperBasis(labels)
    except ValueError as exc:
        raise FileFormatError(str(exc), field + ".basis") from None


def _read_tensor(items, dims, field):
    if not isinstance(items, list):
        raise FileFormatError("expected a list", field)
    entries = {}
    for n, row in enumerate(items):
        f = "%s[%d]" % (field, n)
        if not isinstance(row, list) or len(row) != 5:
            raise FileFormatError("entry must be [i, j, k, re, im]", f)
        idx = row[:3]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in idx):
            raise FileFormatError("indices must be integers", f)
        if any(not 0 <= x < d for x, d in zip(idx, dims)):
            raise FileFormatError("index out of range for dims %r" % (dims,), f)
        if not all(isinstance(x, str) for x in row[3:]):
            raise FileFormatError('scalars must be strings like "a/b"', f)
        try:
            c = Scalar.from_pair(row[3], row[4])
        except (ValueError, ZeroDivisionError):
            raise FileFormatError("bad scalar %r, %r" % (row[3], row[4]), f) from None
        if tuple(idx) in entries:
            raise FileFormatError("duplicate entry %r" % (idx,), f)
        if c:
            entries[tuple(idx)] = c
    return SparseTensor3(dims, entries)


def _read_params(doc, field):
    ps = doc.get("params", [])
    if not isinstance(ps, list):
        raise FileFormatError("expected a list", field + ".params")
    for i, p in enumerate(ps):
        f = "%s.params[%d]" % (field, i)
        _need(p, "name", str, f)
        _need(p, "condition", str, f)
    return ps


def _read_algebra(doc, field, kind=None):
    k = _need(doc, "kind", str, field)
    if k not in ("associative", "lie") or (kind and k != kind):
        raise FileFormatError("expected kind %r, got %r" % (kind or "associative|lie", k),
                              field + ".kind")
    basis = _read_basis(doc, field)
    name = doc.get("name")
    n = basis.dim
    tensor = _read_tensor(_need(doc, "constants", list, field), (n, n, n), field + ".constants")
    _read_params(doc, field)
    try:
        if k == "associative":
            unit = doc.get("unit")
            if unit is not None and (not isinstance(unit, int) or not 0 <= unit < n):
                raise FileFormatError("unit must be a basis index or null", field + ".unit")
            return SuperAlgebra(basis, tensor, unit, name=name)
        if doc.get("unit") is not None:
            raise FileFormatError("a Lie superalgebra has no unit", field + ".unit")
        return LieSuperAlgebra(basis, tensor, name=name)
    except FileFormatError:
        raise
    except ValueError as exc:
        raise FileFormatError(str(exc), field + ".constants") from None


def doc_to_structure(doc, field="$"):
    kind = _need(doc, "kind", str, field)
    if kind not in KINDS:
        raise FileFormatError("unknown kind %r (expected one of %s)" % (kind, ", ".join(KINDS)),
                              field + ".kind")
    if kind != "lie-rinehart":
        return _read_algebra(doc, field)
    A = _read_algebra(_need(doc, "A", dict, field), field + ".A", "associative")
    L = _read_algebra(_need(doc, "L", dict, field), field + ".L", "lie")
    if A.unit_index is None:
        raise FileFormatError("A must be unital", field + ".A.unit")
    act = _read_tensor(_need(doc, "action", list, field), (A.dim, L.dim, L.dim), field + ".action")
    anc = _read_tensor(_need(doc, "anchor", list, field), (L.dim, A.dim, A.dim), field + ".anchor")
    _read_params(doc, field)
    try:
        return LieRinehartStructure(A, L, act, anc, name=doc.get("name"))
    except ValueError as exc:
        raise FileFormatError(str(exc), field) from None


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(exc.msg, line=exc.lineno) from None
    return doc_to_structure(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------- whole catalog

def _param_doc(p):
    out = {"name": p.name, "condition": p.condition}
    if p.nonzero is not None:
        out["nonzero"] = p.nonzero
    if p.samples:
        out["samples"] = [str(s) for s in p.samples]
    return out


def _param_from(d):
    return Param(d["name"], d.get("nonzero"), d.get("condition"), d.get("samples"))


def _row_doc(r):
    out = {"id": r.id, "table": r.table, "A": r.a_id, "L": r.l_id,
           "action": r.printed[0], "anchor": r.printed[1]}
    for key in ("fix", "suggest"):
        v = getattr(r, key)
        if v:
            out[key] = list(v)
    for key in ("flag", "why", "marker"):
        v = getattr(r, key)
        if v:
            out[key] = v
    if r.nonzero:
        out["nonzero"] = list(r.nonzero)
    return out


def export_catalog():
    """Every algebra template and every classification row, as one document."""
    ents = []
    for e in entries():
        ents.append({"id": e.id, "kind": e.kind, "relations": e.text,
                     "params": [_param_doc(p) for p in e.params]})
    return {"kind": "catalog", "entries": ents, "rows": [_row_doc(r) for r in rows()]}


def import_catalog(doc):
    """(entries, rows) rebuilt from an ``export_catalog`` document."""
    if _need(doc, "kind", str, "$") != "catalog":
        raise FileFormatError("expected kind 'catalog'", "$.kind")
    ents = []
    for i, e in enumerate(_need(doc, "entries", list, "$")):
        f = "$.entries[%d]" % i
        try:
            ents.append(CatalogEntry(_need(e, "id", str, f), _need(e, "kind", str, f),
                                     _need(e, "relations", str, f),
                                     [_param_from(p) for p in e.get("params", [])]))
        except (ValueError, KeyError) as exc:
            raise FileFormatError(str(exc), f) from None
    rws = []
    for i, r in enumerate(_need(doc, "rows", list, "$")):
        f = "$.rows[%d]" % i
        opts = {k: r[k] for k in ("flag", "why", "marker", "nonzero") if k in r}
        for k in ("fix", "suggest"):
            if k in r:
                opts[k] = tuple(r[k])
        try:
            rws.append(LRRow(_need(r, "id", str, f), r.get("table"), _need(r, "A", str, f),
                             _need(r, "L", str, f), r.get("action"), r.get("anchor"), opts))
        except (ValueError, KeyError) as exc:
            raise FileFormatError(str(exc), f) from None
    return ents, rws
