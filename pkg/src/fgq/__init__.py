"""Finite FG-quasigroups: identity checks, arithmetic forms, structure and modules."""
from .errors import (CapacityError, CongruenceError, ConfigError, DegenerateInputError, FGQError,
                     InconsistencyError, InvalidFormError, InvalidModuleError, NotAGroupError, NotFGError,
                     PreconditionError, StructureError)
from .genmod import (GenModule, PointedModule, PointedQuasigroup, RPoly, check_module, poly_act, rho,
                     sigma)
from .identities import (IdentityName, batch_is_F, batch_is_FG, check_identity, check_isotope_assoc,
                         identity_witness, is_F, is_FG)
from .isotopes import IsotopeConvention, is_group, principal_isotope
from .linear import (ArithmeticForm, Convention, GroupTable, build_linear, canonical_strong_form,
                     enumerate_forms, extract_form, strong_forms)
from .qcore import CayleyTable, Partition, alpha_beta, is_simple, quotient, validate_table
from .search import SearchSpec, census, enumerate_latin, latin_stack, random_linear
from .structure import classify_simple, mq, mq_congruence, structure_report

__version__ = "0.1.0"

__all__ = [
    "ArithmeticForm",
    "CapacityError",
    "CayleyTable",
    "ConfigError",
    "CongruenceError",
    "Convention",
    "DegenerateInputError",
    "FGQError",
    "GenModule",
    "GroupTable",
    "IdentityName",
    "InconsistencyError",
    "InvalidFormError",
    "InvalidModuleError",
    "IsotopeConvention",
    "NotAGroupError",
    "NotFGError",
    "Partition",
    "PointedModule",
    "PointedQuasigroup",
    "PreconditionError",
    "RPoly",
    "SearchSpec",
    "StructureError",
    "alpha_beta",
    "batch_is_F",
    "batch_is_FG",
    "build_linear",
    "canonical_strong_form",
    "census",
    "check_identity",
    "check_isotope_assoc",
    "check_module",
    "classify_simple",
    "enumerate_forms",
    "enumerate_latin",
    "extract_form",
    "identity_witness",
    "is_F",
    "is_FG",
    "is_group",
    "is_simple",
    "latin_stack",
    "mq",
    "mq_congruence",
    "poly_act",
    "principal_isotope",
    "quotient",
    "random_linear",
    "rho",
    "sigma",
    "strong_forms",
    "structure_report",
    "validate_table",
]
