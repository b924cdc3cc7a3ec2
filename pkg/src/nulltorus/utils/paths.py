from pathlib import Path

root_dir = Path(__file__).parent / ".." / ".." / ".."
manifests_dir = root_dir / "manifests"
