"""CLI documents and the shipped catalog validate against the schemas in docs/."""
import json
from importlib import resources
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from corpora import FIXTURES
from morseres import cli

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load(name):
    return json.loads((SCHEMAS / name).read_text())


def validator(name):
    registry = Registry()
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        registry = registry.with_resource(path.name, Resource.from_contents(doc))
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    schema = load(name)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=registry)


def payload(capsys, tmp_path, doc, *args):
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(doc))
    cli.main([*args, "--format", "json", str(path)])
    return json.loads(capsys.readouterr().out)


def docs():
    for gens, e in FIXTURES.values():
        yield {"generators": [list(g) for g in gens], "artinian": list(e) if e else "auto"}
    yield {"variables": ["a", "b", "c"], "generators": [[1, 1, 0], [1, 0, 1]]}


@pytest.mark.parametrize("doc", list(docs()))
def test_cli_documents_validate(capsys, tmp_path, doc):
    validator("ideal.schema.json").validate(doc)
    for cmd in ("betti", "oracle"):
        validator("betti.schema.json").validate(payload(capsys, tmp_path, doc, cmd))
    cells = payload(capsys, tmp_path, doc, "cells")
    validator("morse_complex.schema.json").validate(cells)
    validator("ideal.schema.json").validate(payload(capsys, tmp_path, doc, "reduce"))


def test_catalog_file_validates():
    text = resources.files("morseres").joinpath("data/catalog.json").read_text()
    validator("catalog.schema.json").validate(json.loads(text))


def test_schema_rejects_bad_documents():
    v = validator("ideal.schema.json")
    assert not v.is_valid({"generators": []})
    assert not v.is_valid({"generators": [[1, 1]], "artinian": "yes"})
    assert not v.is_valid({"generators": [[1, 1]], "extra": 1})
