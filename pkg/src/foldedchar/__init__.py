"""Folding of simply-laced root data and twining characters in exact arithmetic."""

from .characters import Character, freudenthal, support_invariant
from .folding import (
    DiagramAutomorphism,
    FoldedDatum,
    dominant_invariant_check,
    fold,
    from_folded_weight,
    is_sigma_invariant,
    orbit_h,
    orbits,
    parse_cycles,
    to_folded_weight,
)
from .hwmodule import (
    HWModule,
    build_module,
    contravariant_form,
    e_action,
    form_sigma_invariance_check,
    sigma_trace,
)
from .rootdata import (
    RootDatum,
    classify_type,
    make_datum,
    positive_roots,
    reflect,
    weyl_dimension,
    weyl_orbit,
)
from .twining import (
    TorusElement,
    TwiningCharacter,
    folded_character,
    phi,
    twining_character,
    verify_corollary,
    verify_jantzen,
)

__version__ = "0.1.0"
