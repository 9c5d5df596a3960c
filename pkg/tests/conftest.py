import sys
from pathlib import Path

# Allow running the suite from a fresh checkout without installing.
SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    try:
        import cartcodes  # noqa: F401
    except ImportError:
        sys.path.insert(0, str(SRC))
