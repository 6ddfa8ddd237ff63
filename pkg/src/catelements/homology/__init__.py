"""Integer homology via normalized chains and Smith normal form."""

from .chain_complex import ChainComplex, boundary_matrix, chain_complex
from .compare import MODEL_NAMES, compare_models, model_simplicial_sets
from .homology import HomologyGroup, HomologyTable, homology, homology_of_complex
from .snf import SparseMatrix, invariant_factors, smith_normal_form

__all__ = ["ChainComplex", "boundary_matrix", "chain_complex", "MODEL_NAMES", "compare_models",
           "model_simplicial_sets", "HomologyGroup", "HomologyTable", "homology", "homology_of_complex",
           "SparseMatrix", "invariant_factors", "smith_normal_form"]
