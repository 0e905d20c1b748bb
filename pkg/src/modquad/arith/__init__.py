from .fields import QQ, QuadField, QuadElem, RingMismatch, InvalidField, rational_sqrt, squarefree_part
from .finite import GF, FFElem, UnsupportedExtension, is_prime, least_irreducible
from .poly import Poly, BiPoly, poly_identity
from .roots import rational_roots, roots_in_quad, count_roots_ext, count_roots_fq, DegenerateInput
