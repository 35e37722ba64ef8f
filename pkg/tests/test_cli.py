import json
import subprocess
import sys

import pytest

from conftest import DATA
from planocc.cli import run

QUAD = str(DATA / "quad_diagonal.map")
HEX = str(DATA / "hexagon_chord_pendant.map")


def call(*argv):
    import io

    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_xi():
    assert call("xi", "--ell", "2") == (0, "xi_2 = 7/108\n", "")


def test_count_maps():
    code, out, _ = call("count", "maps", "--n", "0")
    assert code == 0 and out.strip().endswith("1")
    assert call("count", "maps", "--n", "5")[1].strip() == "m = 2916"


def test_pattern_report():
    code, out, _ = call("pattern", "--map", QUAD, "--order", "10")
    assert code == 0
    t_line = next(ln for ln in out.splitlines() if ln.startswith("T: "))
    assert t_line.startswith("T: n=5: 2, n=6: 42, n=7: 632, n=8: 8380")
    assert "c1 = 419/209952" in out
    assert "tau: n=0: 29/26244, n=1: -419/52488, n=2: 361/13122" in out


def test_submap_report():
    code, out, _ = call("submap", "--map", QUAD, "--order", "8")
    assert code == 0
    assert "c1' = 214528/4782969" in out
    assert "rho: n=0: 118784/4782969, n=1: -858112/4782969, n=2: 641024/4782969" in out


def test_float_flag():
    _, out, _ = call("pattern", "--map", QUAD, "--order", "8", "--float")
    assert "c1 = 419/209952  (approx 0.00199569)" in out


def test_series_commands():
    _, out, _ = call("series", "M", "--order", "3")
    assert out.strip() == "M(z,1): n=0: 1, n=1: 2, n=2: 9, n=3: 54"
    _, out, _ = call("series", "M", "--order", "1", "--u")
    assert "n=1: 1*u^1 + 1*u^2" in out
    _, out, _ = call("series", "F", "--ell", "3", "--order", "5")
    assert out.strip() == "F_3: n=0: 0, n=1: 0, n=2: 0, n=3: 1, n=4: 9, n=5: 78"
    assert call("series", "F", "--order", "5")[0] == 1


def test_pstar_and_local_prob():
    assert call("pstar", "--k", "1")[1].strip() == "p*_1 = 1/12"
    code, out, _ = call("local-prob", "--map", QUAD)
    assert code == 0 and out.startswith("local_probability = ")


def test_json_round_trip():
    _, out, _ = call("--format", "json", "pattern", "--map", QUAD, "--order", "9")
    obj = json.loads(out)
    assert obj["T"]["6"] == "42" and obj["c1"] == "419/209952"
    assert json.dumps(obj, separators=(", ", ": ")) + "\n" == out
    _, out2, _ = call("pattern", "--map", QUAD, "--order", "9", "--format", "json")
    assert out2 == out


def test_oracle_verify_passes():
    code, out, _ = call("oracle", "verify", "--map", QUAD, "--nmax", "6")
    assert code == 0
    assert "failures = 0" in out
    assert "PASS pattern n=6: oracle=42 series=42" in out


def test_usage_errors():
    assert call()[0] == 1
    assert call("xi", "--ell", "1")[0] == 1
    assert call("bogus")[0] == 1
    assert call("count", "maps")[0] == 1


def test_bad_maps(tmp_path):
    code, _, err = call("pattern", "--map", str(tmp_path / "missing.map"))
    assert code == 2 and "cannot read" in err
    torus = tmp_path / "torus.map"
    torus.write_text("E 2\nalpha 1 0 3 2\nsigma 2 3 1 0\nroot 0\n")
    code, _, err = call("pattern", "--map", str(torus))
    assert code == 2 and "NotPlanar" in err and len(err.strip().splitlines()) == 1
    loop = tmp_path / "loop.map"
    loop.write_text("E 1\nalpha 1 0\nsigma 1 0\nroot 0\n")
    assert call("pattern", "--map", str(loop))[0] == 2


def test_resource_limit():
    assert call("oracle", "verify", "--map", QUAD, "--nmax", "9")[0] == 4


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planocc.cli", "xi", "--ell", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "xi_3 = 53/1296"


@pytest.mark.parametrize("path", [QUAD, HEX])
def test_bundled_maps_load(path):
    assert call("local-prob", "--map", path)[0] == 0
