"""Graph factor and [a,b]-covered decision engine with spectral and
extremal verification campaigns."""

from .canon import are_isomorphic, canonical_form, canonical_graph
from .covered import (ComponentClass, CoverageVerdict, StructuralWitness,
                      classify_component, count_odd, epsilon,
                      is_ab_covered_definitional, is_ab_covered_structural,
                      is_matching_covered, theta)
from .enumeration import enumerate_all, enumerate_dense_candidates
from .errors import (CorpusCoverageError, Graph6ParseError,
                     InvalidParameterError, NumericFailureError,
                     ResourceLimitError)
from .factor import (DeficiencyCertificate, DegreeSpec, FactorWitness,
                     find_factor, has_ab_factor, has_factor_containing_edge,
                     has_gf_factor, lovasz_deficiency, q_hat)
from .graph import (Graph, bridges, complement, complete, components,
                    cross_edges, cycle, disjoint_union, empty, from_edges,
                    h_graph, induced_delete, is_independent, join, min_degree,
                    path, relabel)
from .graph6 import encode_graph6, iter_graph6, parse_graph6, read_graph6_file
from .harness import (VerificationReport, run_property_suites,
                      verify_factor_extremal, verify_factor_spectral_extremal,
                      verify_size_extremal, verify_spectral_extremal,
                      write_reports)
from .spectral import (Ordering, QuotientMatrix, SpectralResult, compare_rho,
                       hong_nikiforov_bound, lemma22_check, quotient_matrix,
                       quotient_spectral_radius, spectral_radius)

__version__ = "0.1.0"
