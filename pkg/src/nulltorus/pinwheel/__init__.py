from .pinwheel import (
    SEAM_EULER_SUM,
    InterfaceSurface,
    PinwheelComponent,
    PinwheelDescription,
    assemble,
    blow_up_component,
    closing_condition,
    cp2_pinwheel,
    handle_trade,
    rotate,
    seam_euler_numbers,
    trade_around,
)

__all__ = [
    "InterfaceSurface",
    "PinwheelComponent",
    "PinwheelDescription",
    "SEAM_EULER_SUM",
    "assemble",
    "blow_up_component",
    "closing_condition",
    "cp2_pinwheel",
    "handle_trade",
    "rotate",
    "seam_euler_numbers",
    "trade_around",
]
