"""Exact lattice arithmetic for special cubic fourfolds.

Decides whether a special cubic fourfold of discriminant d admits an
associated (possibly twisted) K3 surface and counts Fourier-Mukai partners.
All arithmetic is exact; rationals and big integers cross the boundary as
strings.
"""

try:
    from ._cubicfm import *  # noqa: F401,F403
    from ._cubicfm import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension built standalone, e.g. straight off the build tree
    from _cubicfm import *  # noqa: F401,F403

__all__ = [
    "cd_nonempty",
    "has_associated_k3",
    "has_associated_twisted_k3",
    "admissibility",
    "cubic_fm_count",
    "twisted_fm_count",
    "twisted_decomposition",
    "valid_kappas",
    "oguiso_count",
    "euler_phi",
    "ma_bound_generic",
    "special_vector",
    "kd_perp_gram",
    "verify_kdperp_discriminant",
    "lattice_info",
    "standard_names",
    "discriminant_form",
    "smith_normal_form",
    "determinant",
    "verify",
    "InadmissibleError",
    "InvalidKappaError",
]
