from .cyclic import (
    CyclicCode,
    augment,
    code_from_generator,
    dual_code,
    dual_oracle,
    is_dual_containing,
    is_subcode,
    row_spaces_equal,
)
from .decoding import bounded_distance_decode
from .distance import (
    DistanceMethod,
    DistanceReport,
    bch_bound,
    defining_set,
    min_distance,
)
from .sextic import (
    MinimalPolySet,
    SexticGenerators,
    build_minimal_polys,
    build_sextic_generators,
    code_c,
    code_c_bar,
    code_d,
    code_d_bar,
    subset_code,
)
