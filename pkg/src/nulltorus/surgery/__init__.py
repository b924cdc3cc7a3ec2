from .configuration import (
    ConfigurationKind,
    TorusConfiguration,
    Which,
    bing_pair,
    bing_surgery_step,
)
from .standard import StandardSite, standard_pair, standard_surgeries
from .surgery import (
    Rule,
    TorusSurgerySpec,
    classify,
    luttinger_surgery,
    nullhomologous_surgery,
    torus_surgery,
    trivializing_surgery,
)

__all__ = [
    "ConfigurationKind",
    "Rule",
    "StandardSite",
    "TorusConfiguration",
    "TorusSurgerySpec",
    "Which",
    "bing_pair",
    "bing_surgery_step",
    "classify",
    "luttinger_surgery",
    "nullhomologous_surgery",
    "standard_pair",
    "standard_surgeries",
    "torus_surgery",
    "trivializing_surgery",
]
