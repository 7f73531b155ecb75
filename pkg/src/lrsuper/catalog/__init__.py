"""Built-in classification data: algebras, Lie-Rinehart rows, file format."""

from .core import (
    GENERIC_SAMPLES, CatalogEntry, LRRow, Param, ParamError, entries, get, get_row,
    instantiate, instantiate_row, list_entries, natural_key, rows,
)
from .algebras import DERIVATION_TABLE
from .rows import EXCEPTIONAL_PAIRS
from .fileio import (
    FileFormatError, doc_to_structure, dumps, export_catalog, import_catalog, load, loads,
    save, structure_to_doc,
)

__all__ = [
    "GENERIC_SAMPLES", "CatalogEntry", "LRRow", "Param", "ParamError", "entries", "get",
    "get_row", "instantiate", "instantiate_row", "list_entries", "natural_key", "rows",
    "DERIVATION_TABLE", "EXCEPTIONAL_PAIRS", "FileFormatError", "doc_to_structure", "dumps",
    "export_catalog", "import_catalog", "load", "loads", "save", "structure_to_doc",
]
