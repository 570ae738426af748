from .certificate import Certificate, Mode, Verdict, verify_certificate
from .contracts import anchored_search
from .glue import glue
from .planar import planar_boundary_cert, triangle_lift
from .search import Constraints, constrained_search
from .solve import find_k5_verdict, solve, trivial_certificate
from .wagner import wagner_leaf_cert

__all__ = [
    "Certificate", "Constraints", "Mode", "Verdict", "anchored_search", "constrained_search",
    "find_k5_verdict", "glue", "planar_boundary_cert", "solve", "triangle_lift", "trivial_certificate",
    "verify_certificate", "wagner_leaf_cert",
]
