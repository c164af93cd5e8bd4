"""Exact quantum invariants of braid closures.

The engine computes a braid-closure invariant as a two-variable Laurent
polynomial and derives the generic (coloured Jones) and root-of-unity
(coloured Alexander) families from it by ring specialisations with framing
corrections, all in exact integer arithmetic.
"""

from .braid import (BraidError, BraidWord, NotAKnotError, closure_cycle_count,
                    conjugate, extend, inverse, is_knot, load_knot_table,
                    parse_braid, render_braid, stabilize, writhe)
from .oracles import burau_alexander, kauffman_jones, normalize_unit
from .pairing import (InvariantResult, PairingImageError, SymmetricIndex,
                      UnifiedPairing, ado, ado_zn_route, coloured_jones,
                      jones_from_unified, ado_from_unified,
                      multiarc_to_code_coeff, pairing_support,
                      symmetric_compositions, unified_pairing)
from .rings import (CycLaurent, CycScalar, OneVarLaurent, QS, TwoVarLaurent,
                    XD, cyclotomic_poly, qbinom, qfact, qint, yfact)
from .special import (SpecTarget, eta_generic, eta_root, gamma, gamma_n,
                      psi_generic, psi_root, specialize, truncation_vanishing)
from .verma import (WeightVector, apply_braid, apply_generator,
                    enumerate_basis, representation_matrix_json,
                    rmatrix_entry, rmatrix_series_oracle)

__version__ = "0.1.0"
