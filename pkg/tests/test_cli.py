import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from enumseq.cache import CacheFile, cache_path, load_or_new
from enumseq.cli import run
from enumseq.config import RunConfig

K11 = """\
1 1 10 10 10 10 10 10 10 10 10 10 10 8
1 1 10 10 10 10 10 10 10 10 10 10 10 8
5 9 10 7 8 6 10 2 7 8 6 10 8 5
4 1 5 8 6 7 10 8 2 6 7 10 8 8
0 9 3 2 2 0 0 0 0 0 0 0 1 5
9 3 10 0 1 4 8 10 7 6 2 8 10 7
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 2 5 1 1 0 0 0 0 0 0 0 8 10
0 2 2 2 7 0 0 0 0 0 0 0 10 1
0 10 0 10 2 0 0 0 0 0 0 0 8 3
0 2 8 9 3 0 0 0 0 0 0 0 7 5"""


@pytest.fixture
def cli(tmp_path, monkeypatch):
    monkeypatch.setenv("ENUMSEQ_CACHE_DIR", str(tmp_path))
    monkeypatch.delenv("ENUMSEQ_PRECISION", raising=False)
    return lambda *argv: run(list(argv))


def rows(text):
    return [json.loads(line) for line in text.splitlines()]


def test_v_single(cli, tmp_path):
    status, out = cli("v", "--n", "6")
    assert status == 0
    assert rows(out) == [{"method": "defn", "n": 6, "value": "305093061"}]
    assert CacheFile.read(cache_path(tmp_path, "v")).get(6) == "305093061"


def test_v_conventions(cli):
    _, out = cli("v", "--from", "0", "--to", "1")
    assert [r["value"] for r in rows(out)] == ["-1", "1"]


def test_v_csv_and_methods(cli):
    status, out = cli("v", "--from", "2", "--to", "4", "--format", "csv")
    assert status == 0 and out.splitlines()[0] == "method,n,value"
    status, out = cli("v", "--n", "5", "--method", "stirling")
    assert status == 0 and "698005" in out
    status, out = cli("v", "--n", "4", "--method", "equivariant", "--weights", "1,2,3,4,5")
    assert status == 0 and rows(out)[0]["value"] == "2875"


def test_v_bad_args(cli):
    assert cli("v")[0] == 2
    assert cli("v", "--from", "5", "--to", "2")[0] == 2
    assert cli("v", "--n", "3", "--weights", "1,2")[0] == 2
    assert cli("v", "--n", "3", "--precision", "5")[0] == 2


def test_table_k4(cli):
    status, out = cli("table", "--seq", "v", "--mod", "4", "--depth", "7", "--format", "text")
    assert status == 0
    grid = [line.split() for line in out.splitlines()]
    assert [set(r) for r in grid] == [{"1"}, {"1"}, {"3"}, {"3"}]


def test_table_k11(cli):
    _, out = cli("table", "--seq", "v", "--mod", "11", "--depth", "14", "--format", "text")
    assert [line.split() for line in out.splitlines()] == [line.split() for line in K11.splitlines()]


def test_table_qd_mod5(cli):
    status, out = cli("table", "--seq", "qd", "--mod", "5", "--depth", "4", "--format", "text")
    assert status == 0
    assert set(out.split()) == {"0"}


def test_table_bad_modulus(cli):
    assert cli("table", "--mod", "1")[0] == 2


def test_verify_examples(cli):
    for argv in (("verify", "--theorem", "1", "--k", "8"),
                 ("verify", "--theorem", "2.1", "--p", "5"),
                 ("verify", "--lemma", "carl", "--p", "3", "--l", "2")):
        status, out = cli(*argv)
        assert status == 0, argv
        assert all(r["pass"] for r in json.loads(out))


def test_verify_missing_param(cli):
    assert cli("verify", "--theorem", "1")[0] == 2
    assert cli("verify")[0] == 2


def test_exit_code_on_asserted_failure(cli, monkeypatch):
    import enumseq.cli as mod
    from enumseq.reports import Counterexample, TheoremReport

    def broken(args):
        return [TheoremReport("fake", {}, False, Counterexample(1, 0, 1), True)]

    monkeypatch.setattr(mod, "_verify_reports", broken)
    assert cli("verify", "--theorem", "1", "--k", "4")[0] == 1


def test_observations_strict(cli):
    status, out = cli("verify", "--observations", "nd", "--dmax", "60")
    assert status == 0 and not any(r["asserted"] for r in json.loads(out))
    status, out = cli("verify", "--observations", "nd", "--dmax", "60", "--strict")
    reps = json.loads(out)
    assert all(r["asserted"] for r in reps)
    assert status == (0 if all(r["pass"] for r in reps) else 1)


def test_derive(cli):
    status, out = cli("derive", "--form", "D", "--terms", "7")
    doc = json.loads(out)
    assert status == 0 and doc["coefficients"][:2] == ["-9/4", "969/160"]
    assert doc["coefficients"][-1] == "-4442983688169/1146880000"
    doc = json.loads(cli("derive", "--form", "log", "--terms", "2")[1])
    assert doc["constant"] == {"log2": "-9/2", "log3": "3/2", "logpi": "-1", "unit": "-3"}
    assert cli("derive", "--terms", "0")[0] == 2


def test_instantons(cli):
    status, out = cli("instantons", "--dmax", "3")
    r = rows(out)
    assert status == 0
    assert [x["value"] for x in r[:2]] == ["2875", "609250"]
    assert all(x["integral"] for x in r)


def test_curves_and_asymp(cli, tmp_path):
    status, out = cli("curves", "--dmax", "120")
    assert status == 0 and rows(out)[3]["value"] == "620"
    nd = cache_path(tmp_path, "nd")
    assert nd.exists()
    status, out = cli("asymp", "--file", str(nd), "--variant", "II", "--k", "8", "--transform", "nd",
                      "--prec", "60")
    doc = json.loads(out)
    assert status == 0 and doc["form"] == "II"
    assert doc["leading"]["B"]["digits"] >= 10
    assert doc["leading"]["B"]["value"].startswith("-1.98")  # log 0.1380...


def test_asymp_errors(cli, tmp_path):
    assert cli("asymp")[0] == 2
    assert cli("asymp", "--file", str(tmp_path / "missing.txt"))[0] == 2
    f = tmp_path / "short.txt"
    f.write_text("1 1\n2 2\n")
    assert cli("asymp", "--file", str(f), "--k", "5")[0] == 2


def test_output_determinism(cli):
    a = cli("derive", "--form", "log", "--terms", "5")
    b = cli("derive", "--form", "log", "--terms", "5")
    assert a == b
    a = cli("verify", "--theorem", "1", "--k", "5")
    assert a == cli("verify", "--theorem", "1", "--k", "5")


def test_cache_reuse(cli, tmp_path):
    cli("v", "--n", "10")
    first = cache_path(tmp_path, "v").read_text()
    cli("v", "--n", "8")
    assert cache_path(tmp_path, "v").read_text() == first
    assert first.splitlines()[0].startswith("# seq=v count=11")


@given(st.lists(st.integers(-10 ** 60, 10 ** 60), max_size=30), st.integers(0, 5))
def test_cache_round_trip(values, start):
    cf = CacheFile("v", start, [str(v) for v in values])
    back = CacheFile.loads(cf.dumps())
    assert back.values == cf.values and back.start == start
    assert [int(v) for v in back.values] == values


def test_cache_file_on_disk(tmp_path):
    cf = CacheFile("nd", 1, ["1", "1", "12"])
    cf.write(cache_path(tmp_path, "nd"))
    assert load_or_new(tmp_path, "nd", 1).values == ["1", "1", "12"]
    assert load_or_new(tmp_path, "nd", 0).values == []
    assert load_or_new(None, "nd", 1).values == []


def test_cache_rejects_gaps():
    with pytest.raises(ValueError):
        CacheFile.loads("1 5\n3 7\n")
    with pytest.raises(ValueError):
        CacheFile.loads("# seq=v count=3\n0 -1\n1 1\n")


def test_config_precedence(tmp_path):
    env = {"ENUMSEQ_PRECISION": "80", "ENUMSEQ_CACHE_DIR": str(tmp_path)}
    assert RunConfig.resolve({}, env).precision == 80
    assert RunConfig.resolve({"precision": 100}, env).precision == 100
    assert RunConfig.resolve({}, {}).precision == 60
    assert RunConfig.resolve({}, env).cache_dir == Path(tmp_path)
    assert RunConfig.resolve({"cache_dir": ""}, env).cache_dir is None
    assert RunConfig.resolve({}, {"ENUMSEQ_CACHE_DIR": ""}).cache_dir is None
    with pytest.raises(ValueError):
        RunConfig.resolve({"precision": 10}, {})
    with pytest.raises(ValueError):
        RunConfig.resolve({}, {"ENUMSEQ_PRECISION": "abc"})
