import warnings

from starlette.config import Config

with warnings.catch_warnings():
    warnings.filterwarnings(
        "ignore", category=UserWarning, module="starlette.config"
    )
    config = Config(".env")

DEBUG = config("DEBUG", cast=bool, default=False)
SEARCH_BOUND = config("SEARCH_BOUND", cast=int, default=20)
SEARCH_WORKERS = config("SEARCH_WORKERS", cast=int, default=1)
FAMILY_SIZE = config("FAMILY_SIZE", cast=int, default=10)
REPORT_DIR = config("REPORT_DIR", default="reports")
# the workbench is deterministic; a seed value is refused by the cli
WORKBENCH_SEED = config("WORKBENCH_SEED", default="")
