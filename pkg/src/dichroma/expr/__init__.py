"""Expression DSLs: directed clique-width k-expressions and di-co-expressions."""
from ._calls import postorder
from .cw import (
    Create,
    CwExpr,
    EdgeInsert,
    Relabel,
    eval_cw,
    format_cw,
    max_label,
    parse_cw,
)
from .cw import Union as CwUnion
from .dico import (
    DUnion,
    Order,
    Series,
    Vertex,
    dico_to_cw,
    eval_dico,
    format_dico,
    parse_dico,
    validate_dico,
)
from .dico import Union as DiCoUnion

__all__ = [
    "Create", "CwExpr", "CwUnion", "EdgeInsert", "Relabel", "eval_cw", "format_cw",
    "max_label", "parse_cw", "DUnion", "DiCoUnion", "Order", "Series", "Vertex",
    "dico_to_cw", "eval_dico", "format_dico", "parse_dico", "validate_dico", "postorder",
]
