"""Rank-metric and subspace codes with linear-algebraic list decoding."""

from .gf import (ExtensionField, FieldElement, NotPrimeError, PrimeField,
                 ReducibleModulusError, SizeCapError, field_create,
                 field_from_json, field_to_json, primitive_element)
from .linalg import AffineSolution, MatrixGF, kernel_basis, rank, rref, solve_affine
from .linpoly import LinearizedPoly
from .subspaces import (AmbientMismatchError, DimTooLargeError, Subspace,
                        random_complement_error, random_subspace_of, span,
                        zero_subspace)
from .interpolation import (DegenerateReceivedSpaceError,
                            InterpolationPolynomialSet, degree_parameter,
                            interpolate_at)
from .recovery import (AffineSolutionSpace, ListCapExceededError, message_poly,
                       recover_messages, residual_poly)
from .subspace_code import (BadParamsError, RadiusInfo, SubspaceCodeParams,
                            WrongMessageLengthError, decoder_d, encode,
                            guarantee_holds, interpolate, list_decode,
                            radius_info)
from .folded_gabidulin import (DegenerateParamsError, FoldedCodeword,
                               FoldedParams, fg_decoder_d, fg_encode,
                               fg_interpolate, fg_list_decode, fg_max_errors,
                               gabidulin_min_distance_bruteforce,
                               normalized_radius, rank_distance)
from .channels import (ChannelSpec, RankTooLargeError, operator_channel,
                       rank_error_channel)

__version__ = "0.1.0"
