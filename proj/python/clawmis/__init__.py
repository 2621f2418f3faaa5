from ._core import (
    analyze,
    check_constants,
    gen_clawfree,
    gen_cliques,
    gen_setpack,
    gen_tight,
    oracle,
    reduce,
    solve,
    verify_local_opt,
)

__all__ = [
    "analyze",
    "check_constants",
    "gen_clawfree",
    "gen_cliques",
    "gen_setpack",
    "gen_tight",
    "oracle",
    "reduce",
    "solve",
    "verify_local_opt",
]
