import os
import sys

build_dir = os.environ.get("CYCLONE_PYTHON_DIR")
if build_dir:
    sys.path.insert(0, build_dir)
