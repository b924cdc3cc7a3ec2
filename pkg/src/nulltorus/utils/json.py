from typing import Any

import polars as pl

from nulltorus.lattice import HomClass
from nulltorus.seiberg_witten import SymbolicClass, format_class

##########
# public #
##########


def convert_for_json(data: Any) -> Any:
    if isinstance(data, dict):
        return {str(key): convert_for_json(val) for key, val in data.items()}
    elif isinstance(data, (HomClass, SymbolicClass)):
        return format_class(data)
    elif isinstance(data, tuple) and hasattr(data, "_asdict"):
        return convert_for_json(data._asdict())
    elif isinstance(data, (list, tuple)):
        return [convert_for_json(val) for val in data]
    elif isinstance(data, pl.DataFrame):
        return [convert_for_json(d) for d in data.to_dicts()]
    else:
        return data
