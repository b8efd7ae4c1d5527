import json

import pytest
import yaml

from idemspec.algebra.catalog import chain3, diamond, n_eps
from idemspec.algebra.structure import PASS, fail
from idemspec.constants import CheckStatus
from idemspec.errors import FormatError
from idemspec.io.emitters import to_data, to_dot, to_json, to_yaml
from idemspec.io.types import CheckResult, VerificationReport
from idemspec.schemes.algebras import truncated_monoid
from idemspec.schemes.scheme import tau_scheme
from idemspec.topology.space import sierpinski


def test_semiring_as_json():
    data = json.loads(to_json(chain3()))
    assert data["kind"] == "semiring"
    assert data["elements"] == ["0", "m", "1"]
    assert data["mul"][1] == ["0", "m", "m"]
    assert data["idealic"] is True


def test_json_is_stable():
    assert to_json(diamond()) == to_json(diamond())


def test_unicode_names_survive():
    assert "ε" in to_json(n_eps())
    assert "ε" in to_yaml(n_eps())


def test_yaml_keeps_key_order():
    text = to_yaml(truncated_monoid())
    assert text.index("kind") < text.index("elements") < text.index("mul")
    assert yaml.safe_load(text)["one"] == "1"


def test_space_closed_sets_largest_first():
    assert to_data(sierpinski())["closed"] == [["c", "o"], ["c"], []]


def test_verdicts_and_reports():
    assert to_data(fail("idempotency", 1)) == {"ok": False, "law": "idempotency", "witness": ["1"]}
    assert to_data(PASS)["ok"] is True
    report = VerificationReport("sheaf", [CheckResult("a", CheckStatus.PASS), CheckResult("b", CheckStatus.SKIPPED)])
    data = to_data(report)
    assert data["ok"] is True
    assert data["counts"] == {"pass": 1, "fail": 0, "skipped": 1}


def test_scheme_data():
    data = to_data(tau_scheme(sierpinski()))
    assert data["type"] == "semiring"
    assert [s["size"] for s in data["sections"]] == [1, 2, 3]


def test_dot_of_a_chain():
    dot = to_dot(chain3(), "C3")
    assert dot.startswith('digraph "C3" {')
    assert '"0" -> "m";' in dot and '"m" -> "1";' in dot
    assert '"0" -> "1";' not in dot


def test_dot_of_a_space():
    dot = to_dot(sierpinski())
    assert '"c" -> "o";' in dot


def test_unsupported_objects():
    with pytest.raises(FormatError):
        to_data(object())
    with pytest.raises(FormatError):
        to_dot(truncated_monoid())
