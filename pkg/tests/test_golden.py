from __future__ import annotations

import json

import pytest

from minwalks import golden


@pytest.fixture(scope="module")
def committed():
    return golden.load()


def test_committed_files_are_canonical_json(committed):
    for name in golden.SECTIONS:
        text = (golden.GOLDEN_DIR / f"{name}.json").read_text(encoding="utf-8")
        assert text == golden.dumps(json.loads(text))


def test_oracle_regenerates_committed_files(committed):
    assert golden.diff(committed, golden.generate()) == []


def test_production_path_reproduces_committed_files(committed):
    assert golden.diff(committed, golden.compute()) == []


def test_diff_pinpoints_first_mismatch(committed):
    tampered = json.loads(json.dumps(committed))
    tampered["coherence"][3]["maxDelta"] += 1
    tampered["space"]["merge"]["merged"] = []
    problems = golden.diff(committed, tampered)
    assert problems[0].startswith("coherence[3]:")
    assert problems[1] == "space: section differs"


def test_golden_traces_cover_the_worked_examples(committed):
    by_pair = {(r["alpha"], r["beta"]): r for r in committed["traces"]}
    assert by_pair[("0", "w^2")]["points"] == ["w^2", "w", "1", "0"]
    assert by_pair[("2", "w*2")]["rho2"] == 3
    assert by_pair[("2", "w")]["rho2"] == 1
