"""Hourglass plabic graphs: tableau promotion, webs from two-column
tableaux, trip permutations, the fully-reduced predicate, square and
contraction moves, move-class exploration, and cyclic sieving."""

from .explorer import BoundedExplorationError, MoveClass, class_statistics, move_class, tamari_check
from .fraser import fraser_map, recover_matching, recover_polygon, recover_tableau, web_from_triangulation
from .hpgraph import (BLACK, WHITE, Ear, Edge, Face, HourglassGraph, Vertex,
                      apply_contraction, apply_square_move, canonical_form,
                      faces, find_ears, is_contracted, is_proper_ear,
                      isomorphic, normalize_contracted, reflect, remove_ear,
                      restrict, rotate, square_move_sites, standalone_square,
                      star_graph, validate)
from .matchings import (NoncrossingMatching, WeightedPolygonGraph, catalan,
                        claw_sets, dissection, flip_zero_diagonal,
                        matching_from_polygon, matching_from_tableau,
                        tableau_from_matching, triangulate)
from .permutation import Permutation, long_cycle, longest_element
from .sieving import (CyclotomicElement, QPolynomial, csp_check, cyclotomic,
                      eval_root_of_unity, hook_lengths, promotion_fixed_counts,
                      q_factorial, q_hook_poly, q_int)
from .tableaux import (PromotionRecord, RectTableau, column_superstandard,
                       column_tableau, evacuation, prom1_via_matching,
                       prom_all, prom_perm, promotion, promotion_power,
                       standard_tableaux, superstandard)
from .trips import (IntersectionReport, TripLoopError, TripSegment,
                    all_segments, fully_reduced, has_bad_double_crossing,
                    intersections, plabic_reduced, self_intersections,
                    square_fully_reduced, trip_all, trip_perm, trip_segment,
                    underlying_plabic)

__version__ = "0.1.0"
