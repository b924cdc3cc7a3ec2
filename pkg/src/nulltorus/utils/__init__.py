from .json import convert_for_json
from .paths import manifests_dir, root_dir

__all__ = ["convert_for_json", "manifests_dir", "root_dir"]
