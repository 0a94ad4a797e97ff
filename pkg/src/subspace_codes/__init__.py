"""Subspace codes for random network coding.

Multilevel construction of constant-dimension codes from Ferrers-diagram
rank-metric codes, puncturing into projective-space codes, and exhaustive
distance verification.
"""

from .finite_field import Field, FieldElement, field_embed, field_make
from .gf_matrix import GFMatrix, kernel, rank, rref, stack
from .subspace_core import (
    Subspace,
    enumerate_grassmannian,
    gaussian_coefficient,
    identifying_vector,
    intersect,
    subspace_distance,
    subspace_from_rows,
)
from .ferrers_forms import (
    EchelonFerrersForm,
    FerrersDiagram,
    diagram_of,
    echelon_ferrers_form,
    lift,
    theorem1_bound,
)
from .rank_metric import LinearMatrixCode, ferrers_code, gabidulin, min_rank_distance, rank_distance
from .multilevel import (
    SkeletonCode,
    SubspaceCode,
    construct_code,
    hamming_distance,
    lexicode_skeleton,
    verify_lemma1,
)
from .puncturing import Hyperplane, coordinate_hyperplane, puncture, verify_min_distance
from .codefile import emit, parse

__version__ = "0.1.0"
