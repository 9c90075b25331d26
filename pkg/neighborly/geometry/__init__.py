from neighborly.geometry.divisibility import (
    bipartitions,
    is_k_divisible,
    is_s_k_divisible,
    radon_lower_bound_instance,
    set_partitions,
)
from neighborly.geometry.gale import gale_inverse, gale_transform, radon_partition
from neighborly.geometry.hulls import (
    hulls_intersect,
    meeting_coefficients,
    separating_hyperplane,
    zero_in_hull,
)
from neighborly.geometry.points import (
    affine_image,
    chirotope_signs,
    is_general_position,
    moment_curve_points,
    perturb,
    random_config,
)
from neighborly.geometry.projective import (
    apply_projective,
    find_sign_flip,
    is_k_neighbourly,
    projective_from_signs,
    radon_circuits,
    zero_in_hull_complements,
)
