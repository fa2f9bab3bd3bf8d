import os
import subprocess

import pytest

import cyclone


def test_counts():
    assert cyclone.count(6, 2) == 14
    assert cyclone.count(8, 3) == 138
    assert cyclone.count(10, 3, workers=2, budget=10) == 8477


def test_enumerate_small():
    assert cyclone.enumerate(4, 2) == ["{{1,2,3},{1,3,4}}", "{{1,2,4},{2,3,4}}"]
    assert len(cyclone.enumerate(6, 2)) == 14


def test_gkz_and_root():
    assert cyclone.gkz(4, 2, "{{1,2,3},{1,3,4}}") == [8, 2, 8, 6]
    assert cyclone.gkz(5, 3, "{{1,2,3,5},{1,3,4,5}}") == [96, 48, 96, 48, 96]
    assert cyclone.root(6, 2) == "{{1,2,3},{1,3,4},{1,4,5},{1,5,6}}"


def test_big_entries_are_python_ints():
    top = cyclone.root(19, 14)
    entries = cyclone.gkz(19, 14, top)
    assert all(isinstance(e, int) for e in entries)
    assert max(entries) > 2**64


def test_check():
    assert cyclone.check(4, 2, "{{1,2,3},{1,3,4}}") == []
    assert "volume 2 of 8" in cyclone.check(4, 2, "{{1,2,3}}")
    assert cyclone.canonical("{ {1,3,4},{3,2,1} }") == "{{1,2,3},{1,3,4}}"


def test_errors():
    with pytest.raises(cyclone.CycloneError):
        cyclone.count(3, 3)
    with pytest.raises(ValueError):
        cyclone.canonical("{{1,2}")


def test_poset_summary():
    p = cyclone.poset_summary(6, 2)
    assert (p["nodes"], p["edges"], p["tree"]) == (14, 21, 13)
    assert p["audit_ok"]
    assert p["dot"].startswith("digraph hst1 {")


def test_ratios():
    rows = cyclone.ratios(9)
    assert [r["decimal"] for r in rows] == ["1.000", "1.045", "0.832"]
    assert rows[1]["codim5"] == 138 and rows[1]["d2"] == 132


@pytest.mark.skipif("CYCLONE_BIN" not in os.environ, reason="cli binary not provided")
def test_cli_binary():
    binary = os.environ["CYCLONE_BIN"]
    out = subprocess.run([binary, "count", "-n", "9", "-d", "4"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "357\n"
    bad = subprocess.run([binary, "count", "-n", "2", "-d", "2"], capture_output=True, text=True)
    assert bad.returncode == 2
