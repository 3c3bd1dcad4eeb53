"""
Central characters of positive representations of split real quantum groups.

The Casimir operators act on positive representations by scalars ``C_k(t)``
that are characters of the fundamental representations evaluated at real
spectral parameters.  This package builds the root data, the weight systems,
the characters, the characteristic polynomials with their discriminants and
the image region ``Phi(t >= 0)``.
"""
from __future__ import annotations

from .casimir import (CharPoint, ParamContext, central_character, phi, product_D,
                      root_com_check, safe_t_max, virtual_K_scalar,
                      virtual_lowest_point, virtual_weights, weyl_character_oracle)
from .charpoly import char_poly, discriminant_of, factor_check, fundamental_characters
from .errors import *  # noqa: F401,F403
from .polynomials import LaurentPoly, MultiPoly, UniPoly, discriminant, resultant
from .region import emit, sample_boundaries, sample_boundary, sample_region
from .rootdata import (LieType, RootDatum, WeightVec, bourbaki_labels,
                       build_root_datum, diagram_involution, enumerate_weyl,
                       longest_word, parse_lie_type)
from .weights import WeightSystem, fundamental_dims, fundamental_rep, weight_system, weyl_dim

__version__ = "0.1.0"


def datum(name: str) -> RootDatum:
    """Shorthand for ``build_root_datum(parse_lie_type(name))``."""
    return build_root_datum(parse_lie_type(name))
