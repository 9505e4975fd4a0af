from ._core import (
    NotInImage,
    ParseError,
    classify_a,
    classify_b,
    cycle_string,
    derangements,
    even_expr,
    f_map,
    g_map,
    h,
    h_minus,
    h_plus,
    lambda_inv,
    odd_expr,
    parse_cycles,
    phi,
    pi_minus,
    psi,
    run,
    sequence,
    theta,
)

__all__ = [
    "NotInImage",
    "ParseError",
    "classify_a",
    "classify_b",
    "cycle_string",
    "derangements",
    "even_expr",
    "f_map",
    "g_map",
    "h",
    "h_minus",
    "h_plus",
    "lambda_inv",
    "odd_expr",
    "parse_cycles",
    "phi",
    "pi_minus",
    "psi",
    "run",
    "sequence",
    "theta",
]
