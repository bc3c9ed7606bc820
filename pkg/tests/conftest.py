import os
import sys
import tempfile

ROOT = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, os.path.abspath(ROOT))

# keep test runs out of the repository log and quiet on the console
os.environ.setdefault("LOG_FILE", os.path.join(tempfile.gettempdir(), "sphere3c-tests.log"))
os.environ.setdefault("CONSOLE_LOG_LEVEL", "WARNING")
os.environ.setdefault("SPHERE3C_SHOW_PROGRESS", "False")
