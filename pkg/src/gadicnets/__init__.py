"""Word lengths, minimum length g-adic representations, nets in (Z, d_g)
and minimal additive complements."""

from .complements import (EventuallyPeriodicSet, FiniteSet, is_asymptotic_complement,
                          is_complement, is_minimal_on_window, prune_minimal, removable,
                          sumset)
from .errors import (GadicError, InvalidBaseError, NotAComplementError, NotAMemberError,
                     UnreachableError)
from .gadic import (RawRepresentation, SignedDigitRepr, Term, canonical_repr,
                    extend_length, length, shorten)
from .metric_map import distortion_witness, map23, map23_inverse
from .nets import NetSpec, cover_witness, net_check_window, net_member
from .window import Window
from .wordlen import (GeneratingSetSpec, LengthResult, diophantine_search,
                      geodesic_subword_check, smallest_of_length, sphere, word_length)

__version__ = "0.1.0"
