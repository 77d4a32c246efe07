import random

from bforder import freegroup
from bforder.braid import braid_permutation, is_pure
from bforder.cli import run
from bforder.fuzz import (
    PROPERTIES,
    FuzzConfig,
    format_report,
    rand_pure_braid,
    run_all,
    run_property,
)

import pytest


def test_config_validation():
    with pytest.raises(ValueError):
        FuzzConfig(cases=0)
    with pytest.raises(ValueError):
        FuzzConfig(max_strands=1)


def test_pure_generator_is_pure():
    rng = random.Random(7)
    for _ in range(200):
        p = rand_pure_braid(rng, rng.randint(2, 6), 24)
        assert is_pure(p) and braid_permutation(p).is_identity()
        assert len(p.letters) <= 24 or p.n > 2


def test_same_seed_same_report():
    cfg = FuzzConfig(seed=11, cases=15)
    a = format_report(run_all(cfg), cfg)
    b = format_report(run_all(cfg), cfg)
    assert a == b
    assert a.endswith("all invariants hold")


def test_parallel_matches_serial():
    cfg = FuzzConfig(seed=3, cases=12)
    for name in ("comb_roundtrip", "bf_axioms"):
        assert run_property(name, cfg, jobs=2).failures == run_property(name, cfg).failures


def test_default_seed_passes(capsys):
    assert run(["fuzz", "--cases", "100"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("all invariants hold")
    assert len(out.splitlines()) == len(PROPERTIES) + 2


def test_corrupted_sign_is_caught(capsys, monkeypatch):
    honest = freegroup.sign_free
    monkeypatch.setattr(freegroup, "sign_free", lambda w, ceiling=None: -honest(w, ceiling))
    code = run(["fuzz", "--cases", "20", "--property", "magnus_order"])
    out = capsys.readouterr().out
    assert code == 1
    assert "magnus_order: 20 cases FAILED" in out
    assert "1 property violated" in out
    # the dump carries a shrunk counterexample
    assert " case " in out and "= -r " in out


def test_bad_config_is_usage_error(capsys):
    assert run(["fuzz", "--cases", "0"]) == 2
