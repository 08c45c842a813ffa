from .construct import (
    ShadowResult, Check, compact_part_map, shadow, shadow_via_killing,
    verify_shadow,
)
from .fingerprint import Fingerprint, fingerprint, inertia
