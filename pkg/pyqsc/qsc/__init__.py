from .chain import QscChain, QscParams, coset_representatives, make_chain, qsc_params
from .families import (
    FamilyParams,
    family_c_params,
    family_d_params,
    family_dimension,
    family_params,
)
from .sync import SyncTrial, apply_shift, encode_shadow, recover_shift, run_sync_trials
