import io
import json

import pytest

from lmov import quantum_engine
from lmov.braid_link import catalog
from lmov.cache import DiskCache
from lmov.cli import main
from lmov.qt_ring import RationalQT, bracket, t_pow


def run(argv, env_cache=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_disk_cache_round_trip(tmp_path):
    c = DiskCache(tmp_path)
    v = RationalQT(bracket(2) + t_pow(3)).div_bracket(3, 2)
    key = ("W", "abc", ((2, 1),), "v")
    assert c.get(key) is None
    c.put(key, v)
    assert c.get(key) == v
    assert len(c) == 1
    assert not list(tmp_path.rglob("*.tmp"))


def test_engine_uses_disk_cache(tmp_path):
    c = DiskCache(tmp_path)
    quantum_engine.set_disk_cache(c)
    quantum_engine.clear_cache()
    first = quantum_engine.colored_invariant(catalog("trefoil"), ((2,),))
    assert len(c) == 1
    quantum_engine.clear_cache()
    assert quantum_engine.colored_invariant(catalog("trefoil"), ((2,),)) == first


def test_catalog_command():
    code, text = run(["catalog"])
    assert code == 0
    assert [r["name"] for r in json.loads(text)][:3] == ["unknot", "hopf", "trefoil"]


def test_invariant_command():
    code, text = run(["invariant", "--link", "unknot", "--color", "[1]"])
    assert code == 0
    rec = json.loads(text)
    assert rec["kind"] == "W"
    assert rec["convention_version"] == "mirror-R-1"
    assert "timings" not in rec
    value = RationalQT.from_json(rec["payload"]["value"])
    from lmov.symfun import quantum_dimension
    assert value == quantum_dimension((1,))


def test_lmov_command_json_and_csv():
    code, text = run(["lmov", "--link", "unknot", "--degree", "1"])
    assert code == 0
    rec = json.loads(text)
    assert rec["payload"]["tables"] == [{"B": [[1]], "entries": [[0, -1, 1], [0, 1, -1]]}]
    code, text = run(["--format", "csv", "lmov", "--link", "unknot", "--degree", "1"])
    assert code == 0
    assert text.splitlines() == ["link,B,g,2Q,N", "unknot,[[1]],0,-1,1", "unknot,[[1]],0,1,-1"]


def test_explicit_braid():
    code, text = run(["invariant", "--link", '{"strands": 2, "word": [1, 1, 1]}',
                      "--color", "[1]"])
    assert code == 0
    _, ref = run(["invariant", "--link", "trefoil", "--color", "[1]"])
    assert json.loads(text)["payload"]["value"] == json.loads(ref)["payload"]["value"]


@pytest.mark.parametrize("argv", [
    ["invariant", "--link", "nope", "--color", "[1]"],
    ["invariant", "--link", "trefoil", "--color", "[1,2]"],
    ["invariant", "--link", "hopf", "--color", "[1]"],
    ["--max-degree", "2", "invariant", "--link", "trefoil", "--color", "[3]"],
    ["lmov", "--link", "trefoil", "--degree", "0"],
    ["--workers", "0", "catalog"],
    ["bogus"],
])
def test_usage_errors_exit_2(argv):
    code, _ = run(argv)
    assert code == 2


def test_timings_flag():
    code, text = run(["--timings", "invariant", "--link", "unknot", "--color", "[1]"])
    assert code == 0 and "timings" in json.loads(text)


def test_repeat_runs_identical(tmp_path, monkeypatch):
    argv = ["lmov", "--link", "hopf", "--degree", "2"]
    _, plain = run(argv)
    monkeypatch.setenv("LMOV_CACHE_DIR", str(tmp_path))
    quantum_engine.clear_cache()
    _, cold = run(argv)
    quantum_engine.clear_cache()
    _, warm = run(argv)
    assert plain == cold == warm
    assert len(DiskCache(tmp_path)) > 0


def test_verify_suite():
    code, text = run(["verify", "--suite", "combinatorics"])
    assert code == 0
    assert json.loads(text)["payload"]["ok"]
