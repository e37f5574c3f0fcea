import math
import subprocess
import sys

import pytest

from st3.lpoly import EmpiricalProfile, LPolyFormatError, LPolyRecord, ingest, parse_line
from st3.sample import UnsupportedSampler, sample, sample_profile
from st3.stats import moment
from st3.cli import main


def test_parse_and_normalize():
    rec = parse_line("5 -4 8 -12", 1)
    a1, a2, a3 = rec.normalized()
    assert abs(a1 + 4 / math.sqrt(5)) < 1e-12
    assert parse_line("# comment", 1) is None
    assert parse_line("", 2) is None
    with pytest.raises(LPolyFormatError):
        parse_line("5 1 2", 3)


def test_weil_bound_rejection():
    with pytest.raises(LPolyFormatError):
        LPolyRecord(7, 20, 0, 0).check_weil()
    LPolyRecord(7, 15, 0, 0).check_weil()


def test_density_counters():
    prof = EmpiricalProfile()
    prof.add(LPolyRecord(2, 0, 0, 0))
    assert prof.density_counts == {(True, 0, True): 1}
    prof.add(LPolyRecord(5, -4, 8, -12))
    assert prof.count == 2
    z = prof.z_estimates()
    assert z[1][0] == 0.5  # a1 = 0 on half the records
    assert z[0][3] == 0.5  # a2 = 0 exactly on half


def test_profile_merge_associative():
    p1, p2 = EmpiricalProfile(), EmpiricalProfile()
    p1.add(LPolyRecord(2, 0, 0, 0))
    p2.add(LPolyRecord(5, -4, 8, -12))
    merged = p1.merge(p2)
    assert merged.count == 2
    assert abs(merged.moment(1, 0, 0) - (0 + -4 / math.sqrt(5)) / 2) < 1e-12


def test_ingest_file(tmp_path):
    f = tmp_path / "lpolys.txt"
    f.write_text("# sample\n2 0 0 0\n5 -4 8 -12\n\n3 1 1 1\n")
    prof = ingest(str(f))
    assert prof.count == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("7 20 0 0\n")
    with pytest.raises(LPolyFormatError):
        ingest(str(bad))


def test_sampler_deterministic(by_name):
    g = by_name["N(U(3))"]
    assert list(sample(g, 25, seed=9)) == list(sample(g, 25, seed=9))
    assert list(sample(g, 5, seed=1)) != list(sample(g, 5, seed=2))


def test_sampler_unsupported(by_name):
    with pytest.raises(UnsupportedSampler):
        list(sample(by_name["USp(6)"], 1))
    with pytest.raises(UnsupportedSampler):
        list(sample(by_name["SU(2)xUSp(4)"], 1))


def test_sampler_nu3_half_zero(by_name):
    g = by_name["N(U(3))"]
    n = 4000
    zeros = sum(1 for a1, _a2, _a3 in sample(g, n, seed=4) if abs(a1) < 1e-9)
    # z_1 = 1/2: three-sigma binomial window
    sigma = math.sqrt(0.25 / n)
    assert abs(zeros / n - 0.5) <= 3 * sigma + 1e-9


def test_sampler_moments_match_exact(by_name):
    g = by_name["A(1,1)"]  # connected U(1)_3
    prof = sample_profile(g, 20000, seed=21)
    exact = float(moment(g, 0, 1, 0))
    est = prof.moment(0, 1, 0)
    assert abs(est - exact) < 0.5


def test_cli_roots_and_diagonal(capsys):
    assert main(["roots", "--mode", "single"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 16
    assert main(["diagonal", "--group", "1.6.A.1.1a", "-m", "1"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["0,0,0,1", "1,0,0,1", "1,1,0,1", "1,1,1,1"]


def test_cli_moments_and_densities(capsys):
    assert main(["moments", "--group", "N(U(3))", "--simplex", "2"]) == 0
    out = dict(line.rsplit(",", 1) for line in capsys.readouterr().out.splitlines())
    assert out["0,0,0"] == "1"
    assert main(["densities", "--group", "N(U(3))"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[1].startswith("1/2")


def test_cli_catalog_show(capsys):
    assert main(["catalog", "show", "J(E(168))"]) == 0
    out = capsys.readouterr().out
    assert "components: 336" in out


def test_cli_sample_and_match(tmp_path, capsys):
    assert main(["sample", "--group", "A(1,1)", "-n", "5", "--seed", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5 and all(len(l.split(",")) == 3 for l in lines)
    f = tmp_path / "data.txt"
    f.write_text("2 0 0 0\n3 1 1 1\n5 -4 8 -12\n")
    assert main(["match", "--input", str(f), "--variant", "a", "--tol", "50",
                 ]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "label,max_deviation"
    assert main(["match", "--input", str(tmp_path / "missing.txt"),
                 "--variant", "a", "--tol", "1"]) == 2


def test_cli_usage_errors(capsys):
    assert main(["moments", "--group", "not-a-group"]) == 2
    assert main(["nonsense"]) == 2


def test_cli_entrypoint_subprocess():
    proc = subprocess.run([sys.executable, "-m", "st3.cli", "roots",
                           "--mode", "single"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "1/90,19/90,7/9" in proc.stdout


def test_density_estimators_converge(by_name):
    from st3.stats import densities

    names = ["N(U(3))", "J(A(1,1))", "J(A(1,2))", "H(a)", "U(1)xJ(C_1)",
             "M(C_2)", "Js(A(2,2))", "U(1)xC_{2,1}"]
    n = 4000
    for name in names:
        g = by_name[name]
        exact = float(densities(g)[1][0])  # z_1
        prof = sample_profile(g, n, seed=31)
        est = prof.z_estimates()[1][0]
        sigma = math.sqrt(max(exact * (1 - exact), 0.25 / n) / n)
        assert abs(est - exact) <= 3 * sigma + 1e-9, (name, est, exact)
