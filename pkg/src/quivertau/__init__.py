"""Symbolic workbench for tau-tilting data over bound quiver algebras.

Exact rational computations of the Auslander-Reiten translate, tau-rigidity
certificates, annihilators and quotient presentations, endomorphism algebra
presentations, and projective/global dimensions with machine-checkable
certificates for the infinite case.
"""

from .presentations import (AlgebraElement, BoundQuiver, InternalConsistencyError,
                            Path, PresentationError, Quiver, RecognitionReport,
                            classify_relations, recognize_class, trivial_path)
from .representations import (Morphism, Representation, StringWord, hom_space,
                              is_indecomposable, is_isomorphic, standard_module,
                              string_module, structure)
from .homological import (ChainCycle, MinimalPresentation, PdResult, SyzygyPeriod,
                          gd_conditions, gldim, minimal_presentation,
                          monomial_pd_exact, pd, syzygy_step, tor_quotient_dims)
from .tau import (TauTiltingReport, ar_translate, direct_sum_all, is_tau_tilting,
                  search_tau_tilting_sb, tau_hom_vanishes)
from .annquot import (Ideal, QuotientPresentation, annihilator, ext1_dim,
                      quotient_as_module, quotient_presentation,
                      restrict_to_quotient, theorem_b_classify,
                      tilting_over_quotient_check)
from .endo import (EndoPresentation, end_presentation, gldim_endo,
                   presentations_isomorphic, verify_bounds)
from .dsl import ParseError, SessionFile, parse_presentation, parse_session, serialize_presentation

__version__ = "0.1.0"
