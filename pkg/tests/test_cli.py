import io
import json
import math
import os
import subprocess
import sys

import pytest

from zetakit import cli
from zetakit.critical_line import read_table, table_to_csv, write_table


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def plain_value(text, key):
    for line in text.splitlines():
        k, _, v = line.partition("  ")
        if k.strip() == key:
            return v.strip()
    raise KeyError(key)


# ---- zeta eval ---------------------------------------------------------------

def test_zeta_eval_examples():
    code, text = run(["zeta", "eval", "--re", "0.5", "--im", "0"])
    assert code == 0
    assert plain_value(text, "re") == "-1.460354509"
    assert plain_value(text, "im") == "0"
    code, text = run(["zeta", "eval", "--re", "-1", "--im", "0"])
    assert plain_value(text, "re") == "-0.08333333333"


def test_zeta_eval_pole(capsys):
    code, text = run(["zeta", "eval", "--re", "1", "--im", "0"])
    assert code == 2
    assert text == ""
    err = capsys.readouterr().err
    assert "pole at s=1" in err
    assert len(err.strip().splitlines()) == 1


def test_zeta_eval_json_csv():
    code, text = run(["zeta", "eval", "--re", "2", "--format", "json"])
    rec = json.loads(text)
    assert set(rec) == {"s_re", "s_im", "re", "im", "err"}
    # default tol is 1e-10; a tighter flag reaches rounding level
    assert rec["re"] == pytest.approx(math.pi ** 2 / 6, abs=1e-10)
    tight = json.loads(run(["zeta", "eval", "--re", "2", "--tol", "1e-15", "--format", "json"])[1])
    assert tight["re"] == pytest.approx(math.pi ** 2 / 6, abs=1e-14)
    code, text = run(["zeta", "eval", "--re", "2", "--format", "csv"])
    lines = text.split("\n")
    assert lines[0] == "s_re,s_im,re,im,err"
    assert float(lines[1].split(",")[2]) == rec["re"]


def test_zeta_eval_deterministic():
    argv = ["zeta", "eval", "--re", "0.5", "--im", "100", "--format", "json"]
    assert run(argv) == run(argv)


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        cli.main(["zeta", "eval"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["primes", "theta", "10"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["zeta", "eval", "--re", "1", "--format", "xml"])
    assert info.value.code == 2


# ---- primes ------------------------------------------------------------------

def test_primes_examples():
    assert plain_value(run(["primes", "pi", "100"])[1], "value") == "25"
    assert plain_value(run(["primes", "bigpi", "100"])[1], "value") == "28.53333333"
    assert plain_value(run(["primes", "psi", "10"])[1], "value").startswith("7.832")
    rec = json.loads(run(["primes", "bigpi", "100", "--format", "json"])[1])
    assert rec["value"] == pytest.approx(28 + 8 / 15, abs=1e-13)


def test_primes_errors(capsys):
    assert run(["primes", "pi", "1e9"])[0] == 2
    assert run(["primes", "pi", "-3"])[0] == 2
    assert run(["primes", "pi", "nan"])[0] == 2
    err = capsys.readouterr().err
    assert err.count("zetakit: error") == 3


# ---- zeros scan and the cache ------------------------------------------------

def test_scan_examples(tmp_path):
    cache = str(tmp_path / "zeros.csv")
    code, text = run(["zeros", "scan", "--t-max", "30", "--cache", cache])
    assert code == 0
    rows = [line.split() for line in text.splitlines() if line and line[0].isdigit()]
    assert [r[0] for r in rows] == ["1", "2", "3"]
    assert rows[-1][1].startswith("25.0108")
    assert "PASS" in text
    first = open(cache, "rb").read()
    # rerun: idempotent, nothing new, cache bytes unchanged
    code, text = run(["zeros", "scan", "--t-max", "30", "--cache", cache])
    assert code == 0
    assert not any(line and line[0].isdigit() for line in text.splitlines())
    assert open(cache, "rb").read() == first
    # extend
    code, text = run(["zeros", "scan", "--t-max", "100", "--cache", cache])
    assert code == 0 and "PASS" in text
    tab = read_table(cache)
    assert len(tab) == 29
    assert [z.index for z in tab] == list(range(1, 30))


def test_scan_extension_matches_direct(tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    run(["zeros", "scan", "--t-max", "40", "--cache", a])
    run(["zeros", "scan", "--t-max", "80", "--cache", a])
    run(["zeros", "scan", "--t-max", "80", "--cache", b])
    ta, tb = read_table(a), read_table(b)
    assert len(ta) == len(tb)
    assert max(abs(x.t - y.t) for x, y in zip(ta, tb)) < 2e-9


def test_scan_json(tmp_path):
    cache = str(tmp_path / "zeros.csv")
    code, text = run(["zeros", "scan", "--t-max", "30", "--cache", cache, "--format", "json"])
    rec = json.loads(text)
    assert [z["index"] for z in rec["zeros"]] == [1, 2, 3]
    assert abs(rec["zeros"][0]["t"] - 14.134725) < 1e-5
    assert rec["verify"]["passed"] is True and rec["verify"]["count"] == 3


def test_scan_csv_deterministic(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        code, text = run(["zeros", "scan", "--t-max", "60", "--format", "csv",
                          "--cache", str(tmp_path / name)])
        outs.append(text)
    assert outs[0] == outs[1]
    assert outs[0].split("\n")[0] == "index,t,err"
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_scan_count_mismatch_warns(tmp_path, capsys):
    cache = tmp_path / "zeros.csv"
    code, text = run(["zeros", "scan", "--t-max", "50", "--step", "4", "--cache", str(cache)])
    assert code == 0
    assert "WARN" in capsys.readouterr().err
    assert "FAIL" in text
    assert not cache.exists()


def test_scan_corrupt_cache(tmp_path, capsys):
    cache = tmp_path / "zeros.csv"
    cache.write_text("index,t,err\n2,1.0,1e-9\n1,0.5,1e-9\n")
    assert run(["zeros", "scan", "--t-max", "30", "--cache", str(cache)])[0] == 3
    assert "corrupt" in capsys.readouterr().err
    assert run(["explicit", "psi", "100", "--cache", str(cache)])[0] == 3


def test_scan_bad_t_max(tmp_path):
    assert run(["zeros", "scan", "--t-max", "-5", "--cache", str(tmp_path / "z.csv")])[0] == 2


def test_cache_env_and_flag_precedence(tmp_path, monkeypatch):
    env_path = tmp_path / "env.csv"
    flag_path = tmp_path / "flag.csv"
    monkeypatch.setenv(cli.CACHE_ENV, str(env_path))
    assert cli.default_cache_path() == str(env_path)
    run(["zeros", "scan", "--t-max", "20"])
    assert env_path.exists()
    run(["zeros", "scan", "--t-max", "20", "--cache", str(flag_path)])
    assert flag_path.exists()
    monkeypatch.delenv(cli.CACHE_ENV)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    assert cli.default_cache_path() == str(tmp_path / "xdg" / "zetakit" / "zeros.csv")


def test_cache_round_trip_bytes(tmp_path, zeros_560):
    p = tmp_path / "z.csv"
    write_table(zeros_560, p)
    first = p.read_bytes()
    write_table(read_table(p), p)
    assert p.read_bytes() == first
    assert first.decode() == table_to_csv(zeros_560)


# ---- explicit ----------------------------------------------------------------

@pytest.fixture(scope="module")
def big_cache(tmp_path_factory, zeros_560):
    p = tmp_path_factory.mktemp("cache") / "zeros.csv"
    write_table(zeros_560, p)
    return str(p)


def test_explicit_examples(big_cache):
    rec = json.loads(run(["explicit", "psi", "100", "--pairs", "300", "--cache", big_cache,
                          "--format", "json"])[1])
    assert abs(rec["value"] - 94.05) < 0.5
    assert abs(rec["delta"]) < 0.5
    assert rec["n_zero_pairs"] == 300
    rec = json.loads(run(["explicit", "bigpi", "100", "--pairs", "200", "--cache", big_cache,
                          "--format", "json"])[1])
    assert abs(rec["value"] - 28.53) < 0.1
    rec = json.loads(run(["explicit", "pi", "100", "--pairs", "200", "--cache", big_cache,
                          "--format", "json"])[1])
    assert round(rec["value"]) == 25
    assert rec["exact"] == 25


def test_explicit_decomposition_rendered(big_cache):
    code, text = run(["explicit", "psi", "100", "--pairs", "10", "--cache", big_cache])
    assert code == 0
    for key in ("value", "smooth_part", "oscillatory_part", "tail_part", "exact", "delta"):
        plain_value(text, key)
    assert plain_value(text, "tail_part") == "0"


def test_explicit_insufficient_cache(tmp_path, big_cache, capsys):
    code, text = run(["explicit", "psi", "100", "--pairs", "400", "--cache", big_cache])
    assert code == 2 and text == ""
    err = capsys.readouterr().err
    assert "312 zeros, 400 needed" in err
    assert "zeros scan --t-max" in err
    # the suggested height does cover 400 zeros
    t_hint = float(err.split("--t-max ")[1].split()[0])
    assert f"--cache {big_cache}'" in err
    from zetakit.critical_line import count_zeros_formula
    assert count_zeros_formula(t_hint) >= 401
    missing = str(tmp_path / "none.csv")
    assert run(["explicit", "bigpi", "100", "--cache", missing])[0] == 2
    # psi with no zeros at all is just its smooth part
    assert run(["explicit", "psi", "100", "--cache", missing])[0] == 0


def test_explicit_deterministic(big_cache):
    argv = ["explicit", "pi", "500", "--pairs", "300", "--cache", big_cache, "--format", "csv"]
    assert run(argv) == run(argv)


# ---- casimir -----------------------------------------------------------------

def test_casimir_examples():
    rec1 = json.loads(run(["casimir", "--a", "1", "--area", "1", "--format", "json"])[1])
    assert set(rec1) == {"energy", "force_per_area", "a", "area"}
    assert abs(rec1["force_per_area"] + math.pi ** 2 / 240) < 1e-14
    rec2 = json.loads(run(["casimir", "--a", "2", "--format", "json"])[1])
    assert rec2["force_per_area"] == pytest.approx(rec1["force_per_area"] / 16, rel=1e-14)
    code, text = run(["casimir", "--a", "1e-6"])
    assert code == 0
    assert "force_per_area_si_Pa" in text and "energy_si_J" in text
    code, text = run(["casimir", "--a", "1", "--format", "csv"])
    assert text.split("\n")[0] == "energy,force_per_area,a,area"


def test_casimir_domain():
    assert run(["casimir", "--a", "0"])[0] == 2
    assert run(["casimir", "--a", "1", "--area", "-1"])[0] == 2


# ---- as a process ------------------------------------------------------------

def _proc(args, **kw):
    return subprocess.run([sys.executable, "-m", "zetakit", *args], capture_output=True, text=True, **kw)


def test_process_exit_codes(tmp_path):
    ok = _proc(["primes", "pi", "100", "--format", "json"])
    assert ok.returncode == 0 and json.loads(ok.stdout)["value"] == 25
    assert ok.stderr == ""
    pole = _proc(["zeta", "eval", "--re", "1"])
    assert pole.returncode == 2 and pole.stdout == "" and "pole" in pole.stderr
    bad = tmp_path / "bad.csv"
    bad.write_text("garbage\n")
    corrupt = _proc(["zeros", "scan", "--t-max", "20", "--cache", str(bad)])
    assert corrupt.returncode == 3
    env = dict(os.environ, ZETAKIT_CACHE=str(tmp_path / "env.csv"))
    scan = _proc(["zeros", "scan", "--t-max", "30", "--format", "csv"], env=env)
    assert scan.returncode == 0 and (tmp_path / "env.csv").exists()
    assert "PASS" in scan.stderr


def test_process_byte_identical():
    args = ["casimir", "--a", "0.5", "--format", "json"]
    a, b = _proc(args), _proc(args)
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0
