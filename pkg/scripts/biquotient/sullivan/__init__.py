from .model import SullivanModel, apply_d, validate
from .cohomology import cohomology, euler_bookkeeping, is_cocycle
from .biquotient import cartan_model, kapovitch_model, mirror_name, mirror_rename, universal_model
