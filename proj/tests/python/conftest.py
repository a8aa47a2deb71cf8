import json
import os
import pathlib
import subprocess

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("MVSPACE_CLI")
    if not path:
        pytest.skip("MVSPACE_CLI not set")

    def run(*args, expect=0):
        proc = subprocess.run([path, *args], capture_output=True, text=True, check=False)
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    root = pathlib.Path(os.environ.get("MVSPACE_SCHEMAS", pathlib.Path(__file__).resolve().parents[2] / "schemas"))

    def load(name):
        return json.loads((root / f"{name}.json").read_text())

    return load
