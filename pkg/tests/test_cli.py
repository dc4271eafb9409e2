import json
import subprocess
import sys

import pytest

from chromahom import cells
from chromahom.cli import main
from chromahom.graphs import format_edge_list, wheel


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_json(capsys):
    code, out, _ = run(capsys, "cohomology", "K4", "--m", "3", "--i", "1", "--j", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["rank"] == 2 and data["invariant_factors"] == [3, 3, 6]
    assert data["chain_ranks"] == {"0": 16, "1": 18, "2": 0}


def test_cohomology_text_shows_both_notations(capsys):
    code, out, _ = run(capsys, "cohomology", "P5", "--m", "2", "--j", "4")
    assert "Z_2" in out and "primary form" in out


def test_dichromatic_prints_chromatic_grading(capsys):
    code, out, _ = run(capsys, "cohomology", "K3", "--m", "3", "--i", "0", "--j", "3",
                       "--variant", "dichromatic", "--format", "json")
    data = json.loads(out)
    assert data["chromatic_j"] == 3 and data["j"] == 3


def test_homology_convention(capsys):
    _, out, _ = run(capsys, "cohomology", "K3", "--m", "3", "--i", "0", "--j", "3",
                    "--convention", "homology", "--format", "json")
    assert json.loads(out)["group"] == "Z_3 + Z"


def test_edge_list_and_mesh_files(tmp_path, capsys):
    f = tmp_path / "w5.txt"
    f.write_text(format_edge_list(wheel(5)))
    _, out, _ = run(capsys, "cohomology", str(f), "--j", "7", "--format", "json")
    assert json.loads(out)["group"] == "Z_3^3 + Z^5"
    mesh = tmp_path / "rp2.mesh"
    mesh.write_text(cells.format_quad_mesh(cells.boundary_quotient_grid(5, 2)))
    _, out, _ = run(capsys, "cell", str(mesh), "--variant", "4-only", "--format", "json")
    assert json.loads(out)["h1"]["group"] == "Z_2"


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "P7", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "graph,m,i,j,torsion"
    assert "P7,3,1,9,Z_3" in lines


def test_guard_error_exit_code(capsys):
    code, _, err = run(capsys, "cohomology", "K4", "--j", "5", "--max-cells", "10")
    assert code == 3 and "exceeds the cap" in err


def test_bad_input_exit_code(capsys):
    code, _, err = run(capsys, "stats", "Q9")
    assert code == 2 and "unknown family" in err


def test_table_and_conjecture(capsys):
    code, out, _ = run(capsys, "table", "wheels", "--range", "5:6", "--format", "json")
    data = json.loads(out)
    assert any(c["status"] == "differs" for c in data["cells"])  # W5 at 2v-4
    code, out, _ = run(capsys, "conjecture", "8.10", "--range", "2:4", "--format", "json")
    assert json.loads(out)["confirmed_in_range"] is True


def test_verify_exit_status(capsys):
    code, out, _ = run(capsys, "verify", "mesh")
    assert code == 0 and "3/3" in out


def test_stats_and_families(capsys):
    _, out, _ = run(capsys, "stats", "K4", "--format", "json")
    assert json.loads(out)["t3"] == 4
    _, out, _ = run(capsys, "families")
    assert "Gts:<k>" in out


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "chromahom.cli", "cohomology", "K5", "--j", "7"],
                       capture_output=True, text=True, check=True)
    assert "Z_3^3 + Z_6 + Z^10" in r.stdout
