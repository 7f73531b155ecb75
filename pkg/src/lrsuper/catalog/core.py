"""Catalog entries, LR rows, parameter sampling and instantiation."""

import re
from functools import lru_cache

from ..exactmath import ONE, ZERO, Scalar, SparseTensor3, as_scalar, parse_scalar
from ..gradedcore import LieSuperAlgebra, SuperAlgebra, SuperBasis
from ..lierinehart import LieRinehartStructure
from . import algebras as _alg
from . import rows as _rows
from .dsl import DSLError, evaluate, evaluate_scalar, free_names, parse_statements

__all__ = [
    "Param", "CatalogEntry", "LRRow", "ParamError", "entries", "rows", "get", "get_row",
    "list_entries", "instantiate", "instantiate_row", "natural_key", "GENERIC_SAMPLES",
]


class ParamError(ValueError):
    """Missing parameter or violated side condition."""


# Values tried in turn for parameters without preferred samples.  The list
# mixes signs, fractions and Gaussian values so that no polynomial identity
# of low degree is hit by accident.
GENERIC_SAMPLES = tuple(parse_scalar(s) for s in (
    "2", "-1/2", "3", "1+i", "-3/2", "1/3", "5", "-2i", "2/3", "-4", "3/2-1/2i", "7",
))


def natural_key(text):
    return tuple((0, int(t), "") if t.isdigit() else (1, 0, t)
                 for t in re.findall(r"\d+|\D+", text))


class Param:
    __slots__ = ("name", "nonzero", "condition", "samples")

    def __init__(self, name, nonzero=None, condition="", samples=None):
        self.name = name
        self.nonzero = nonzero
        self.condition = condition or ("%s != 0" % nonzero if nonzero else "any value")
        self.samples = tuple(parse_scalar(s) for s in samples) if samples else None

    def to_json(self):
        return {"name": self.name, "condition": self.condition}


def _check_env(params, env):
    missing = [p.name for p in params if p.name not in env]
    if missing:
        raise ParamError("missing parameter(s): %s" % ", ".join(sorted(missing)))
    for p in params:
        if p.nonzero is not None:
            try:
                v = evaluate_scalar(p.nonzero, env)
            except ZeroDivisionError:
                v = ZERO
            if not v:
                raise ParamError("side condition violated: %s (%s)" % (p.condition, p.name))


def _sample_envs(params, count, validate):
    """Up to ``count`` admissible parameter assignments, deterministic."""
    if not params:
        try:
            validate({})
            return [{}]
        except (ParamError, ZeroDivisionError, ValueError):
            return []
    params = sorted(params, key=lambda p: p.name)
    out = []
    attempt = 0
    while len(out) < count and attempt < 8 * count + 16:
        env = {}
        for j, p in enumerate(params):
            pool = p.samples or GENERIC_SAMPLES
            env[p.name] = pool[(attempt + 3 * j) % len(pool)]
        attempt += 1
        if env in out:
            continue
        try:
            validate(env)
        except (ParamError, ZeroDivisionError, ValueError):
            continue
        out.append(env)
    return out


def _normalize_env(env):
    return {k: as_scalar(v) for k, v in (env or {}).items()}


# ---------------------------------------------------------------- algebras

class CatalogEntry:
    """A parametric associative or Lie superalgebra from the classification lists."""

    def __init__(self, id, kind, text, params=()):
        m = re.fullmatch(r"([AL]):(\d+)\|(\d+):(\d+)", id)
        if not m:
            raise ValueError("bad catalog id %r" % id)
        self.id = id
        self.kind = kind
        self.dims = (int(m.group(2)), int(m.group(3)))
        self.text = text
        self.statements = parse_statements(text)
        self.params = tuple(params)
        letter = "e" if kind == "associative" else "f"
        self.basis = SuperBasis.standard(self.dims[0], self.dims[1], letter)
        want = "product" if kind == "associative" else "bracket"
        for st in self.statements:
            if st.kind != want:
                raise ValueError("%s: unexpected %s statement %r" % (id, st.kind, st.text))
        used = free_names(self.statements)
        declared = {p.name for p in self.params}
        if used - declared:
            raise ValueError("%s: undeclared parameters %s" % (id, sorted(used - declared)))

    @property
    def name(self):
        return self.id

    @property
    def sort_key(self):
        return natural_key(self.id)

    @property
    def is_unital(self):
        return self.kind == "associative" and self.dims[0] > 0

    def dims_text(self):
        return "%d|%d" % self.dims

    def sample_envs(self, count=3):
        return _sample_envs(self.params, count, lambda env: self.instantiate(env))

    def tensor(self, env):
        basis = self.basis
        n = basis.dim
        entries = {}
        par = basis.parities

        def put(i, j, vec):
            for label, c in vec.items():
                k = basis.index(label)
                entries[(i, j, k)] = c

        for st in self.statements:
            i, j = basis.index(st.left), basis.index(st.right)
            vec = evaluate(st, env)
            if self.kind == "associative" and self.is_unital and 0 in (i, j):
                raise ValueError("%s: products with the unit are implicit" % self.id)
            if (i, j) in entries or any(key[:2] == (i, j) for key in entries):
                raise ValueError("%s: duplicate statement for %s" % (self.id, st.text))
            put(i, j, vec)
            if i != j:
                s = -1 if par[i] and par[j] else 1
                if self.kind == "lie":
                    s = -s
                put(j, i, {k: s * c for k, c in vec.items()})
        if self.is_unital:
            for j in range(n):
                entries[(0, j, j)] = ONE
                entries[(j, 0, j)] = ONE
        return SparseTensor3((n, n, n), entries)

    def instantiate(self, env=None):
        env = _normalize_env(env)
        _check_env(self.params, env)
        try:
            t = self.tensor(env)
        except DSLError as exc:
            raise ValueError("%s: %s" % (self.id, exc)) from None
        if self.kind == "associative":
            return SuperAlgebra(self.basis, t, 0 if self.is_unital else None, name=self.id)
        return LieSuperAlgebra(self.basis, t, name=self.id)

    def to_json(self):
        return {"id": self.id, "kind": self.kind, "dims": self.dims_text(),
                "relations": self.text, "params": [p.to_json() for p in self.params]}


def _build_entries():
    out = []
    for id, text in _alg.ASSOCIATIVE:
        out.append(CatalogEntry(id, "associative", text))
    for id, text, params in _alg.LIE:
        ps = [Param(name, nz, cond, samples) for name, (nz, cond, samples) in sorted(params.items())]
        out.append(CatalogEntry(id, "lie", text, ps))
    return out


# ---------------------------------------------------------------- LR rows

class LRRow:
    """One concrete row of a classification table."""

    def __init__(self, id, table, a_id, l_id, action, anchor, options=None):
        options = options or {}
        self.id = id
        self.table = table
        self.a_id = a_id
        self.l_id = l_id
        self.printed = (action, anchor)
        self.fix = options.get("fix")
        self.flag = options.get("flag")
        self.suggest = options.get("suggest")
        self.why = options.get("why", "")
        self.marker = options.get("marker")
        self.nonzero = tuple(options.get("nonzero", ()))
        for part in (self.printed, self.fix, self.suggest):
            if part and part[0] is not None:
                parse_statements(part[0])
                parse_statements(part[1])

    @property
    def is_marker(self):
        return self.marker is not None

    @property
    def flagged(self):
        return self.flag is not None

    @property
    def form(self):
        if self.is_marker:
            return "marker"
        if self.flagged:
            return "flagged"
        return "corrected" if self.fix else "printed"

    @property
    def note(self):
        return self.marker or self.flag or self.why or ""

    @property
    def sort_key(self):
        return natural_key(self.id)

    @property
    def pair(self):
        return "%s/%s" % (self.a_id, self.l_id)

    def data(self, which=None):
        """(action, anchor) text for 'printed', 'corrected' or 'suggested'."""
        if which is None:
            which = "corrected" if self.fix else "printed"
        return {"printed": self.printed, "corrected": self.fix,
                "suggested": self.suggest}[which]

    def params(self, which=None):
        action, anchor = self.data(which)
        names = free_names(parse_statements(action) + parse_statements(anchor))
        out = list(get(self.l_id).params)
        have = {p.name for p in out}
        for n in sorted(names - have):
            out.append(Param(n, n if n in self.nonzero else None))
        return out

    def sample_envs(self, count=3, which=None):
        return _sample_envs(self.params(which), count,
                            lambda env: self.instantiate(env, which))

    def raw_envs(self, count=3, which=None):
        """Samples satisfying only the parameter side conditions."""
        params = self.params(which)
        return _sample_envs(params, count, lambda env: _check_env(params, env))

    def instantiate(self, env=None, which=None):
        if self.is_marker:
            raise ValueError("%s is a marker row without data" % self.id)
        env = _normalize_env(env)
        _check_env(self.params(which), env)
        for expr in self.nonzero:
            if not evaluate_scalar(expr, env):
                raise ParamError("side condition violated: %s != 0" % expr)
        A = get(self.a_id).instantiate(env)
        L = get(self.l_id).instantiate(env)
        action, anchor = self.data(which)
        try:
            act, anc = _lr_tensors(A, L, action, anchor, env)
        except DSLError as exc:
            raise ValueError("%s: %s" % (self.id, exc)) from None
        return LieRinehartStructure(A, L, act, anc, name=self.id)

    def instances(self, samples=3, which=None):
        for env in self.sample_envs(samples, which):
            yield env, self.instantiate(env, which)

    def to_json(self):
        out = {"id": self.id, "table": self.table, "A": self.a_id, "L": self.l_id,
               "form": self.form, "action": self.printed[0], "anchor": self.printed[1]}
        if self.fix:
            out["corrected"] = {"action": self.fix[0], "anchor": self.fix[1]}
        if self.suggest:
            out["suggested"] = {"action": self.suggest[0], "anchor": self.suggest[1]}
        if self.note:
            out["note"] = self.note
        return out


def _lr_tensors(A, L, action, anchor, env):
    act = {}
    if A.unit_index is not None:
        for x in range(L.dim):
            act[(A.unit_index, x, x)] = ONE
    for st in parse_statements(action):
        if st.kind != "action":
            raise DSLError("expected an action statement, got %r" % st.text)
        a, x = A.basis.index(st.left), L.basis.index(st.right)
        if a == A.unit_index:
            raise DSLError("the unit acts as the identity: %r" % st.text)
        for label, c in evaluate(st, env).items():
            act[(a, x, L.basis.index(label))] = c
    anc = {}
    for st in parse_statements(anchor):
        if st.kind != "anchor":
            raise DSLError("expected an anchor statement, got %r" % st.text)
        x, a = L.basis.index(st.left), A.basis.index(st.right)
        for label, c in evaluate(st, env).items():
            anc[(x, a, A.basis.index(label))] = c
    return (SparseTensor3((A.dim, L.dim, L.dim), act),
            SparseTensor3((L.dim, A.dim, A.dim), anc))


def _build_rows():
    out = []
    counter = {}
    for table, items in _rows.TABLES:
        for item in items:
            a_id, l_ids, action, anchor = item[:4]
            opts = item[4] if len(item) > 4 else {}
            for l_id in ([l_ids] if isinstance(l_ids, str) else l_ids):
                key = (a_id, l_id)
                counter[key] = counter.get(key, 0) + 1
                rid = "LR:%s/%s#%d" % (a_id, l_id, counter[key])
                out.append(LRRow(rid, table, a_id, l_id, action, anchor,
                                 dict(opts, **_ROW_OPTIONS.get(rid, {}))))
    return out


# Per-row decisions keyed by id, merged over the inline table options.
from .decisions import ROW_OPTIONS as _ROW_OPTIONS  # noqa: E402


@lru_cache(maxsize=None)
def _tables():
    ents = _build_entries()
    rws = _build_rows()
    return ({e.id: e for e in ents}, tuple(ents), {r.id: r for r in rws}, tuple(rws))


def entries():
    return _tables()[1]


def rows():
    return _tables()[3]


def get(id):
    try:
        return _tables()[0][id]
    except KeyError:
        raise KeyError("unknown catalog id %r" % id) from None


def get_row(id):
    try:
        return _tables()[2][id]
    except KeyError:
        raise KeyError("unknown row id %r" % id) from None


_KIND_ALIASES = {"assoc": "associative", "associative": "associative", "a": "associative",
                 "lie": "lie", "l": "lie", "lr": "lr", "lie-rinehart": "lr"}


def list_entries(kind=None, dims=None, pair=None, table=None):
    """Ids matching the filter, in natural order.

    kind is 'associative', 'lie' or 'lr' (None: both algebra kinds); dims is a
    pair (n, p) or a string 'n|p'; pair and table filter LR rows.
    """
    if kind is not None:
        if kind not in _KIND_ALIASES:
            raise ValueError("unknown kind %r" % kind)
        kind = _KIND_ALIASES[kind]
    if isinstance(dims, str):
        m = re.fullmatch(r"\s*(\d+)\s*\|\s*(\d+)\s*", dims)
        if not m:
            raise ValueError("dims must look like 'n|p', got %r" % dims)
        dims = (int(m.group(1)), int(m.group(2)))
    if kind == "lr" or pair is not None or table is not None:
        out = [r for r in rows()
               if (pair is None or r.pair == pair)
               and (table is None or r.table == table)
               and (dims is None or get(r.l_id).dims == dims)]
        return [r.id for r in sorted(out, key=lambda r: r.sort_key)]
    out = [e for e in entries()
           if (kind is None or e.kind == kind) and (dims is None or e.dims == dims)]
    return [e.id for e in sorted(out, key=lambda e: e.sort_key)]


def instantiate(entry, env=None):
    if isinstance(entry, str):
        entry = get(entry)
    return entry.instantiate(env)


def instantiate_row(row, env=None, which=None):
    if isinstance(row, str):
        row = get_row(row)
    return row.instantiate(env, which)
