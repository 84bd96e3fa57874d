import json

from basiclocus import affweyl, cache
from basiclocus.cli import main

ARGS = ["eo", "--family", "C", "--rank", "3", "--lambda", "omega:2", "--removed-vertex", "0"]
KEY = ("C", 3, "adjoint")


def _run(capsys, extra):
    affweyl.clear_caches()
    assert main(ARGS + extra) == 0
    return capsys.readouterr().out


def test_cold_then_warm_identical(tmp_path, capsys):
    cold = _run(capsys, ["--cache-dir", str(tmp_path)])
    path = cache.cache_path(tmp_path, KEY)
    assert path.exists()
    warm = _run(capsys, ["--cache-dir", str(tmp_path)])
    assert cold == warm == _run(capsys, [])


def test_env_var_sets_directory(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    _run(capsys, [])
    assert cache.cache_path(tmp_path, KEY).exists()


def test_version_bump_is_a_miss(tmp_path, capsys):
    _run(capsys, ["--cache-dir", str(tmp_path)])
    affweyl.clear_caches()
    assert cache.load(tmp_path, KEY)["hit"]
    affweyl.clear_caches()
    assert not cache.load(tmp_path, KEY, version="999")["hit"]


def test_tampered_line_skipped(tmp_path, capsys, caplog):
    ref = _run(capsys, ["--cache-dir", str(tmp_path)])
    path = cache.cache_path(tmp_path, KEY)
    lines = path.read_text().splitlines()
    rec = json.loads(lines[1])
    x, w, r = json.loads(rec["d"])
    rec["d"] = json.dumps([x, w, not r], separators=(",", ":"))   # flip a Bruhat answer, keep old hash
    lines[1] = json.dumps(rec)
    lines.append("not json")
    path.write_text("\n".join(lines) + "\n")
    affweyl.clear_caches()
    stats = cache.load(tmp_path, KEY)
    assert stats["skipped"] == 2
    assert _run(capsys, ["--cache-dir", str(tmp_path)]) == ref


def test_garbage_header_ignored(tmp_path, capsys):
    path = cache.cache_path(tmp_path, KEY)
    path.write_text("{{{\n")
    assert _run(capsys, ["--cache-dir", str(tmp_path)]) == _run(capsys, [])
