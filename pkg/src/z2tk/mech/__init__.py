"""Z2 x Z2 graded classical mechanics on symbolic time-dependent fields."""
from .gpoly import (
    DerivativeCapError,
    FieldVar,
    GPoly,
    GradedConstant,
    const,
    deriv_cap,
    fld,
    num,
)
from .variations import (
    CORE_FRAME,
    FRAMES,
    Frame,
    apply_delta,
    apply_generator,
    bracket_on_fields,
    delta_rule,
    generator_rule,
    operator_relations_report,
)
from .lagrangians import (
    Lagrangian,
    MechanicsReport,
    NoetherCharge,
    action1_report,
    build_action1,
    catalogue,
    catalogue_names,
    euler_lagrange,
    is_total_derivative,
    mechanics_report,
    noether_charges,
    on_shell_charges,
    substitute_eom,
)

__all__ = [
    "DerivativeCapError",
    "FieldVar",
    "GPoly",
    "GradedConstant",
    "const",
    "deriv_cap",
    "fld",
    "num",
    "CORE_FRAME",
    "FRAMES",
    "Frame",
    "apply_delta",
    "apply_generator",
    "bracket_on_fields",
    "delta_rule",
    "generator_rule",
    "operator_relations_report",
    "Lagrangian",
    "MechanicsReport",
    "NoetherCharge",
    "action1_report",
    "build_action1",
    "catalogue",
    "catalogue_names",
    "euler_lagrange",
    "is_total_derivative",
    "mechanics_report",
    "noether_charges",
    "on_shell_charges",
    "substitute_eom",
]
