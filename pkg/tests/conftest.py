import sys
from pathlib import Path

# make the frozen reference tables importable from any test module
sys.path.insert(0, str(Path(__file__).parent))
