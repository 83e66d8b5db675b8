import json
import pathlib
import subprocess

import jsonschema
import pytest


def pytest_addoption(parser):
    parser.addoption("--cli", required=True)
    parser.addoption("--fixture-dir", required=True)
    parser.addoption("--schemas", required=True)


@pytest.fixture(scope="session")
def fixtures(request):
    return pathlib.Path(request.config.getoption("--fixture-dir"))


@pytest.fixture(scope="session")
def run(request):
    cli = request.config.getoption("--cli")

    def _run(*args, stdin=None, expect=0):
        proc = subprocess.run([cli, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=120)
        assert proc.returncode == expect, proc.stderr
        return proc

    return _run


@pytest.fixture(scope="session")
def validate(request):
    root = pathlib.Path(request.config.getoption("--schemas"))

    def _validate(name, text):
        doc = json.loads(text)
        schema = json.loads((root / f"{name}.schema.json").read_text())
        jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
        return doc

    return _validate
