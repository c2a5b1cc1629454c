"""Exact enumeration and verification of generalized Chung-Feller theorems."""

from .bijections import (BijectionError, motzkin_class, motzkin_class_maps, pair_to_two_colored,
                         schroder_elevate, schroder_flatten, schroder_paths)
from .closed_forms import (DomainError, catalan, eval_form, gen_narayana, narayana, relation_check,
                           sequence, t_number, z_number)
from .cycle import special_vertex_orbit, unique_conjugate_with, verify_equidistribution
from .enumeration import BudgetExceeded, DistributionTable, FamilySpec, enumerate_family
from .paths import Path, PathError, Step, StepSet, build_path, conjugate, conjugates, factor_primes
from .series import Series, SeriesRing, identity_check, lagrange_coeff, named_series
from .stats import Selector, select_vertices
from .theorems import REGISTRY, verify_theorem

__version__ = "0.1.0"
