__version__ = "0.1.0"

import logging

from . import codes, errors, qsc
from .codes import (
    CyclicCode,
    DistanceMethod,
    DistanceReport,
    augment,
    build_minimal_polys,
    build_sextic_generators,
    code_from_generator,
    dual_code,
    dual_oracle,
    is_subcode,
    min_distance,
)
from .cyclotomy import (
    SexticClasses,
    class_coset_decomposition,
    cyclotomic_coset,
    enumerate_valid_pairs,
    negation_map_check,
    sextic_classes,
    smallest_primitive_root,
)
from .errors import PyqscError
from .field import (
    FieldCtx,
    make_extension_field,
    make_field,
    make_prime_field,
    nth_root_of_unity,
)
from .lib import (
    classes_report,
    code_report,
    enumerate_report,
    factor_report,
    qsc_report,
    sync_report,
    table1_report,
)
from .poly import Poly, gcd, poly_order, reciprocal
from .qsc import (
    QscChain,
    QscParams,
    apply_shift,
    coset_representatives,
    encode_shadow,
    family_c_params,
    family_d_params,
    make_chain,
    qsc_params,
    recover_shift,
    run_sync_trials,
)
from .report import OutputFormat, ReportRecord

logging.getLogger(__name__).addHandler(logging.NullHandler())
