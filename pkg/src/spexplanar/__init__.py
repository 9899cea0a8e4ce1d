"""spexplanar: spectral-extremal toolkit for planar hub-join graphs.

Construct joins of two hub vertices with linear forests, compute their
spectral radii and Perron vectors deterministically, enumerate cycle
spectra with certificates, and run the inequality checks and exhaustive
sweeps that compare these families.
"""

from .graphs import (Graph, GraphConstructionError, Graph6Error,
                     VertexSubsetPair, PlanarBoundsReport, from_edges,
                     from_graph6, to_graph6, union, join, induced_subgraph,
                     is_planar, planar_bounds_check, parse_edge_list,
                     format_edge_list)
from .families import (LinearForest, build_linear_forest, join_with_paths,
                       k2_join, extremal_graph, enumerate_lna, count_lna,
                       path_graph, cycle_graph, complete_graph,
                       complete_bipartite)
from .spectral import (SpectralResult, SurgeryReport, DisconnectedGraphError,
                       ConvergenceError, spectral_radius,
                       spectral_radius_any, rayleigh_quotient,
                       closed_form_rho, certify_strict, surgery_compare,
                       DEFAULT_TOL)
from .cycles import (CycleRecord, CycleSpectrum, SearchBudgetExceeded,
                     find_cycle, validate_cycle, join_cycle_certificate,
                     recognize_hub_forest, cycle_spectrum, in_gnk,
                     DEFAULT_BUDGET)
from .verify import (IntervalWitness, VerificationReport, ArgmaxSweepResult,
                     verify_lemma1, lemma1_sweep, verify_lemma2,
                     verify_claim33, lemma2_sweep, verify_entry_bounds,
                     entry_bounds_sample, argmax_sweep, admissible_forests,
                     merge_threshold, reports_to_csv, rerun, resolve_workers)

__version__ = "0.1.0"
