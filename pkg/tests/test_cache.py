import json
import logging

from tautilt import cache
from tautilt.cli import main
from tautilt.counting import CountEngine


def test_round_trip(tmp_path, capsys):
    path = tmp_path / "counts.json"
    assert main(["--cache", str(path), "table", "t_lin"], engine=CountEngine()) == 0
    capsys.readouterr()
    data = json.loads(path.read_text())
    assert data["version"] == cache.VERSION
    assert all(isinstance(e["value"], str) for e in data["entries"])

    fresh = CountEngine()
    assert main(["--cache", str(path), "count", "t_lin", "--r", "6", "--n", "12"], engine=fresh) == 0
    assert capsys.readouterr().out.strip() == "35862"
    assert fresh.computed == 0


def test_lossless_for_big_values(tmp_path):
    e = CountEngine()
    big = e.t_cyc(2, 400)
    path = tmp_path / "c.json"
    cache.store_from(e, path)
    loaded = cache.cache_load(path)
    assert loaded[("T_CYC", 2, 400)] == big
    assert loaded == e.memo


def test_env_var(tmp_path, monkeypatch, capsys):
    path = tmp_path / "env.json"
    monkeypatch.setenv(cache.CACHE_ENV, str(path))
    assert main(["count", "s_lin", "--r", "2", "--n", "4"], engine=CountEngine()) == 0
    assert path.exists()
    assert capsys.readouterr().out.strip() == "29"


def test_no_cache_when_unset(monkeypatch):
    monkeypatch.delenv(cache.CACHE_ENV, raising=False)
    assert cache.resolve_path(None) is None


def test_corrupt_file_warns_and_recomputes(tmp_path, capsys, caplog):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        code = main(["--cache", str(path), "count", "t_lin", "--r", "6", "--n", "12"], engine=CountEngine())
    assert code == 0
    assert capsys.readouterr().out.strip() == "35862"
    assert "corrupt" in caplog.text


def test_bad_entries_rejected(tmp_path, caplog):
    path = tmp_path / "bad.json"
    entry = {"family": "T_LIN", "r": 2, "n": 3, "value": 3}  # not a string
    path.write_text(json.dumps({"format": cache.FORMAT_TAG, "version": cache.VERSION, "entries": [entry]}))
    with caplog.at_level(logging.WARNING):
        assert cache.cache_load(path) == {}
    assert "corrupt" in caplog.text


def test_version_mismatch_ignored(tmp_path, caplog):
    path = tmp_path / "old.json"
    entry = {"family": "T_LIN", "r": 2, "n": 3, "value": "3"}
    path.write_text(json.dumps({"format": cache.FORMAT_TAG, "version": 99, "entries": [entry]}))
    with caplog.at_level(logging.WARNING):
        assert cache.cache_load(path) == {}
    assert "version" in caplog.text


def test_missing_file_is_empty(tmp_path):
    assert cache.cache_load(tmp_path / "nope.json") == {}
