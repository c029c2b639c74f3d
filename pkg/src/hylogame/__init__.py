"""Impartial games as recursive coalgebras.

Games are well-founded option graphs; game values are folds of step algebras
over them; hereditarily finite sets form the terminal game; sums of games
induce monoids on those sets, whose minimal quotients (Bouton monoids) are
approximated on bounded universes.
"""
from .bouton import (
    BoutonApproximation,
    FiniteMonoid,
    MinimumFactorization,
    bouton_approximation,
    bouton_game_value,
    classify_element,
    syntactic_factorization,
)
from .errors import (
    BudgetExceeded,
    CarrierError,
    DepthGuardError,
    GameError,
    GameFileError,
    GraphConditionError,
    InstabilityError,
    PathLiftingError,
    SizeGuardError,
    SourceMismatch,
    UnknownSignature,
    WellFoundednessError,
)
from .fileio import export_dot, format_game_file, parse_game_file
from .game import (
    Game,
    GameMorphism,
    RuleGame,
    Subgame,
    accessible,
    build_finite_game,
    check_morphism,
    cogenerated_subgame,
    epi_mono_factorize,
    generated_subgame,
    identity,
    image_subgame,
    inverse_image,
    is_subgame,
    make_game,
    reachable_fragment,
    validate_well_founded,
)
from .hfs import (
    BOTTOM,
    TOP,
    TRUTH,
    HfsArena,
    LabeledHfsArena,
    characteristic_map,
    enumerate_universe,
    xi_reduce,
)
from .play import run_play_loop
from .sums import (
    CONJUNCTIVE,
    CONWAY,
    SELECTIVE,
    SumKind,
    game_sum,
    hfs_sum,
    nim_sum,
    rota_baxter_check,
)
from .universal import (
    ProductGame,
    QuotientGame,
    are_isomorphic,
    coequalizer,
    coproduct,
    count_homs,
    enumerate_homs,
    equalizer,
    product,
    product_map,
    quotient_coequalizer,
)
from .values import (
    BIN,
    BUILTIN_ALGEBRAS,
    EMPTY,
    MEX,
    MNP,
    N,
    NP,
    P,
    REMOTENESS,
    XEM,
    Outcome,
    RemotenessValue,
    ValueAlgebra,
    algebra_step,
    check_algebra_hom,
    get_algebra,
    hfs_value,
    hylo_eval,
    mex,
    xem,
)

__all__ = [
    "BoutonApproximation",
    "FiniteMonoid",
    "MinimumFactorization",
    "bouton_approximation",
    "bouton_game_value",
    "classify_element",
    "syntactic_factorization",
    "BudgetExceeded",
    "CarrierError",
    "DepthGuardError",
    "GameError",
    "GameFileError",
    "GraphConditionError",
    "InstabilityError",
    "PathLiftingError",
    "SizeGuardError",
    "SourceMismatch",
    "UnknownSignature",
    "WellFoundednessError",
    "export_dot",
    "format_game_file",
    "parse_game_file",
    "Game",
    "GameMorphism",
    "RuleGame",
    "Subgame",
    "accessible",
    "build_finite_game",
    "check_morphism",
    "cogenerated_subgame",
    "epi_mono_factorize",
    "generated_subgame",
    "identity",
    "image_subgame",
    "inverse_image",
    "is_subgame",
    "make_game",
    "reachable_fragment",
    "validate_well_founded",
    "BOTTOM",
    "TOP",
    "TRUTH",
    "HfsArena",
    "LabeledHfsArena",
    "characteristic_map",
    "enumerate_universe",
    "xi_reduce",
    "run_play_loop",
    "CONJUNCTIVE",
    "CONWAY",
    "SELECTIVE",
    "SumKind",
    "game_sum",
    "hfs_sum",
    "nim_sum",
    "rota_baxter_check",
    "ProductGame",
    "QuotientGame",
    "are_isomorphic",
    "coequalizer",
    "coproduct",
    "count_homs",
    "enumerate_homs",
    "equalizer",
    "product",
    "product_map",
    "quotient_coequalizer",
    "BIN",
    "BUILTIN_ALGEBRAS",
    "EMPTY",
    "MEX",
    "MNP",
    "N",
    "NP",
    "P",
    "REMOTENESS",
    "XEM",
    "Outcome",
    "RemotenessValue",
    "ValueAlgebra",
    "algebra_step",
    "check_algebra_hom",
    "get_algebra",
    "hfs_value",
    "hylo_eval",
    "mex",
    "xem",
]

__version__ = "0.1.0"
