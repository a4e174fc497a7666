import csv
import io
import json
import re
import subprocess
import sys

import pytest

from hfdinv.cli import main
from hfdinv.scan import CSV_HEADER, ScanConfig, SlopeExpr, ordered_map, scan_to_string


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def _no_floats(text):
    return not re.search(r"\d\.\d|e[+-]\d", text)


def test_alex_pretzel3():
    code, out = run("alex", "--pretzel", "3")
    assert code == 0
    assert "V:         2 2 1 1 1 0" in out
    assert "genus:     5" in out


def test_alex_unknot_and_pretzel4():
    code, out = run("alex", "--alexander", "1")
    assert code == 0 and "genus:     0" in out and "torsion:   0\n" in out and "V:         0\n" in out
    code, out = run("alex", "--pretzel", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["genus"] == 6 and len(doc["V"]) == 7


def test_dinv_tables_signs():
    code, out = run("dinv", "--pretzel", "4", "--slope", "11", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) == 11
    assert all(e["d"].startswith("-") for e in doc["entries"])
    code, out = run("dinv", "--pretzel", "3", "--slope", "21/2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "d_num", "d_den"] and len(rows) == 22
    assert all(int(r[1]) <= 0 for r in rows[1:])


def test_dinv_unknot_text():
    code, out = run("dinv", "--alexander", "1", "--slope", "2")
    lines = out.splitlines()
    assert lines[1].split() == ["0", "1/4"]
    assert lines[2].split() == ["1", "-1/4"]
    assert lines[-1] == "max d = 1/4, max 4d = 1"


def test_dinv_integral_indexing():
    code, out = run("dinv", "--pretzel", "3", "--slope", "10", "--indexing", "integral", "--format", "json")
    doc = json.loads(out)
    assert [e["index"] for e in doc["entries"]] == list(range(-4, 6))
    code, _ = run("dinv", "--pretzel", "3", "--slope", "21/2", "--indexing", "integral")
    assert code == 1


@pytest.mark.parametrize("argv, conclusion", [
    (("--pretzel", "4", "--slope", "11"), "NO_WEAK_FILLING"),
    (("--pretzel", "3", "--slope", "31/3"), "NO_WEAK_FILLING"),
    (("--pretzel", "11", "--slope", "25"), "INCONCLUSIVE"),
])
def test_obstruct(argv, conclusion):
    code, out = run("obstruct", *argv)
    assert code == 0
    assert out.strip().endswith(f"conclusion: {conclusion}")
    code, out = run("obstruct", *argv, "--format", "json")
    assert json.loads(out)["conclusion"] == conclusion


def test_obstruct_text_has_chain():
    _, out = run("obstruct", "--pretzel", "4", "--slope", "11")
    assert "Owens-Strle" in out and "b2+ = 0" in out


def test_exit_codes():
    assert run("obstruct", "--pretzel", "3")[0] == 1  # missing slope
    assert run("obstruct", "--pretzel", "3", "--slope", "0")[0] == 1
    assert run("obstruct", "--pretzel", "3", "--slope", "x/2")[0] == 1
    assert run("obstruct", "--alexander", "t + t^-1", "--slope", "3")[0] == 2
    assert run("alex", "--alexander", "t^^2")[0] == 2
    assert run("alex", "--pretzel", "0")[0] == 1
    assert run("alex")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1


def scan_rows(*argv):
    code, out = run("scan", *argv)
    assert code == 0
    return list(csv.DictReader(io.StringIO(out)))


def test_scan_integral_family():
    rows = scan_rows("--family", "pretzel_integral", "--range", "4..10")
    assert len(rows) == 7
    assert [r["knot"] for r in rows] == [f"P(-2,3,{2 * q + 1})" for q in range(4, 11)]
    for r in rows:
        if r["squarefree"] == "true":
            assert r["conclusion"] == "NO_WEAK_FILLING"


def test_scan_rational_family():
    rows = scan_rows("--family", "pretzel_rational_on_q3", "--range", "1..12")
    by_p = {int(r["slope"].split("/")[1]): r for r in rows}
    assert len(rows) == 12
    # 81 = 3^4 and 121 = 11^2 are the non-square-free orders here
    assert {p for p, r in by_p.items() if r["conclusion"] == "INCONCLUSIVE"} == {8, 12}
    assert by_p[12]["delta"] == "121" and by_p[12]["squarefree"] == "false"


def test_scan_empty_filter_intersection():
    code, out = run("scan", "--family", "pretzel_integral", "--range", "11..12", "--only-squarefree")
    assert code == 0
    assert out == ",".join(CSV_HEADER) + "\n"


def test_scan_custom_and_row_errors():
    rows = scan_rows("--family", "custom", "--alexander", "t - 1 + t^-1", "--label", "trefoil",
                     "--slope-expr", "n - 2", "--range", "1..5")
    assert [r["error"] != "" for r in rows] == [True, True, False, False, False]
    assert rows[2]["knot"] == "trefoil" and rows[2]["slope"] == "1/1"
    assert "n=1" in rows[0]["error"]


def test_scan_bad_config_is_usage_error():
    assert run("scan", "--family", "custom", "--range", "1..3")[0] == 1
    assert run("scan", "--family", "pretzel_integral", "--range", "1..3", "--slope-expr", "q**2")[0] == 1
    assert run("scan", "--family", "pretzel_integral")[0] == 1


def test_scan_exact_output_formats():
    for fmt in ("csv", "json", "text"):
        code, out = run("scan", "--family", "pretzel_rational_on_q3", "--range", "1..6", "--format", fmt)
        assert code == 0 and _no_floats(out)
    _, out = run("scan", "--family", "pretzel_rational_on_q3", "--range", "1..3", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["max4d"] == "-10/11" and rows[0]["squarefree"] is True
    assert rows[1]["max4d"] == "0/1"


def test_scan_deterministic_across_jobs():
    a = scan_to_string(ScanConfig("pretzel_integral", 4, 50, jobs=1))
    b = scan_to_string(ScanConfig("pretzel_integral", 4, 50, jobs=8))
    c = scan_to_string(ScanConfig("pretzel_integral", 4, 50, jobs=3))
    assert a == b == c


def _square(x):
    return x * x


def test_ordered_map_bounded_window():
    assert list(ordered_map(_square, range(50), jobs=3, window=2)) == [x * x for x in range(50)]


def test_slope_expr():
    assert SlopeExpr("(10*p+1)/p", "p")(3) == __import__("fractions").Fraction(31, 3)
    with pytest.raises(ValueError):
        SlopeExpr("__import__('os')", "p")
    with pytest.raises(ValueError):
        SlopeExpr("q + 1", "p")


def test_config_file(tmp_path):
    cfg = tmp_path / "scan.cfg"
    cfg.write_text("family = pretzel_rational_on_q3\nrange = 1..4\njobs = 2\nonly-squarefree = yes\n")
    rows = scan_rows("--config", str(cfg))
    assert len(rows) == 4
    # flag wins over the file
    rows = scan_rows("--config", str(cfg), "--range", "8..9")
    assert [r["delta"] for r in rows] == ["91"]
    cfg.write_text("bogus = 1\n")
    assert run("scan", "--config", str(cfg))[0] == 1


def test_verify_subset_and_list():
    code, out = run("verify", "--only", "v-sequence", "--only", "integral-negativity", "--range", "q=4..20")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(l.startswith("PASS") for l in lines)
    code, out = run("verify", "--list")
    assert "scan-determinism" in out
    assert run("verify", "--only", "nope")[0] == 1


def test_verify_failure_exit_code(monkeypatch):
    from hfdinv import verify

    broken = verify.Check("broken", "always fails", lambda r: "boom")
    monkeypatch.setattr(verify, "CHECKS", verify.CHECKS + (broken,))
    monkeypatch.setattr("hfdinv.cli.run_checks", verify.run_checks)
    code, out = run("verify", "--only", "broken")
    assert code == 3 and out.startswith("FAIL")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hfdinv", "alex", "--pretzel", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "P(-2,3,7)" in res.stdout
