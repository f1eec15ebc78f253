"""End-to-end tests of the command line interface.

Everything runs in-process through main(argv) so exit codes and output
can be asserted directly.  Exit code contract: 0 success, 1 failed
verdict, 2 usage errors (argparse), 3 I/O or validation errors.
"""

import io
import json

import pytest

from optiplanar import Drawing, dodecahedron, dumps_drawing, save_drawing
from optiplanar.cli import main


def skeleton_file(tmp_path, plane, name="skeleton.json"):
    """Store a crossing-free drawing wrapping the given plane graph."""
    edges = sorted(plane.edges, key=min)
    base = {}
    paths = {}
    for i, e in enumerate(edges):
        dart = min(e)
        base[i] = (plane.origin(dart), plane.head(dart))
        paths[i] = (dart,)
    path = tmp_path / name
    save_drawing(Drawing(plane, (), base, paths), path)
    return path


@pytest.fixture
def dodeca_file(tmp_path):
    out = tmp_path / "dodeca.json"
    assert main(["generate", "--class", "2opt",
                 "--skeleton", "dodecahedron", "-o", str(out)]) == 0
    return out


@pytest.fixture
def hex_file(tmp_path):
    out = tmp_path / "hex.json"
    assert main(["generate", "--class", "3opt",
                 "--skeleton", "theta:3", "-o", str(out)]) == 0
    return out


def test_generate_writes_a_loadable_document(dodeca_file):
    doc = json.loads(dodeca_file.read_text())
    assert doc["format_version"] == 1
    assert doc["metadata"]["generator"] == {"class": "2opt",
                                            "skeleton": "dodecahedron"}


def test_generate_records_missing_middle(tmp_path):
    out = tmp_path / "mm.json"
    assert main(["generate", "--class", "3opt", "--skeleton", "theta:2",
                 "--missing-middle", "1", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["metadata"]["generator"]["missing_middle"] == 1


def test_verify_passes_matching_class(dodeca_file, hex_file, capsys):
    assert main(["verify", "--class", "2opt", str(dodeca_file)]) == 0
    assert "optimal 2-planar (n=20, m=90)" in capsys.readouterr().out
    assert main(["verify", "--class", "3opt", str(hex_file)]) == 0
    assert main(["verify", "--class", "3opt", "--mode", "count",
                 str(hex_file)]) == 0


def test_verify_fails_wrong_class(dodeca_file, capsys):
    assert main(["verify", "--class", "3opt", str(dodeca_file)]) == 1
    out = capsys.readouterr().out
    assert "NOT optimal 3-planar" in out
    assert "FAIL density: m = 90, bound = 99" in out


def test_verify_multiple_inputs_all_must_pass(dodeca_file, hex_file,
                                              tmp_path, capsys):
    second = tmp_path / "second.json"
    assert main(["generate", "--class", "2opt", "--skeleton", "theta:4",
                 "-o", str(second)]) == 0
    assert main(["verify", "--class", "2opt",
                 str(dodeca_file), str(second)]) == 0
    assert main(["verify", "--class", "2opt",
                 str(dodeca_file), str(hex_file)]) == 1
    out = capsys.readouterr().out.splitlines()
    assert any("NOT optimal 2-planar" in line for line in out)


def test_generate_to_stdout_verify_from_stdin(capsys, monkeypatch):
    assert main(["generate", "--class", "2opt",
                 "--skeleton", "theta:2"]) == 0
    text = capsys.readouterr().out
    assert json.loads(text)["format_version"] == 1
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    assert main(["verify", "--class", "2opt", "-"]) == 0
    assert "-: optimal 2-planar" in capsys.readouterr().out


def test_generate_from_skeleton_file(tmp_path, capsys):
    sk = skeleton_file(tmp_path, dodecahedron())
    out = tmp_path / "drawing.json"
    assert main(["generate", "--class", "2opt",
                 "--skeleton", f"file:{sk}", "-o", str(out)]) == 0
    assert main(["verify", "--class", "2opt", str(out)]) == 0


def test_skeleton_file_with_crossings_is_refused(dodeca_file, tmp_path,
                                                 capsys):
    assert main(["generate", "--class", "2opt",
                 "--skeleton", f"file:{dodeca_file}"]) == 3
    assert "crossing-free" in capsys.readouterr().err


def test_analyze_output(dodeca_file, capsys):
    assert main(["analyze", str(dodeca_file)]) == 0
    out = capsys.readouterr().out
    for line in ("vertices: 20",
                 "edges: 90",
                 "crossings: 60",
                 "crossing histogram: 0:30 2:60",
                 "simple: yes",
                 "fan-planar: yes",
                 "skeleton: n=20 m=30 f=12 connected=yes face-lengths=[5]",
                 "density: 2-planar bound 90 (slack 0), "
                 "3-planar bound 99 (slack -9)",
                 "optimal: 2-planar yes, 3-planar no"):
        assert line in out


def test_barvis_on_the_dodecahedron(dodeca_file, tmp_path, capsys):
    svg = tmp_path / "bars.svg"
    assert main(["barvis", str(dodeca_file), "--svg", str(svg)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == \
        "bars: 20  segments: 90  max bars crossed by a segment: 1"
    assert svg.read_text().startswith("<svg")


def test_barvis_refuses_nonsimple_input(hex_file, capsys):
    assert main(["barvis", str(hex_file)]) == 1
    assert "needs a simple graph" in capsys.readouterr().err


def test_export_formats(dodeca_file, tmp_path, capsys):
    svg = tmp_path / "out.svg"
    assert main(["export", "--format", "svg", str(dodeca_file),
                 "-o", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")
    assert main(["export", "--format", "dot", str(dodeca_file)]) == 0
    assert capsys.readouterr().out.startswith("graph drawing {")


def test_usage_errors_exit_2(capsys):
    for argv in (["generate", "--class", "4opt", "--skeleton", "theta:2"],
                 ["verify", "input.json"],
                 ["frobnicate"],
                 []):
        with pytest.raises(SystemExit) as stop:
            main(argv)
        assert stop.value.code == 2
        capsys.readouterr()


def test_io_errors_exit_3(tmp_path, capsys):
    assert main(["verify", "--class", "2opt",
                 str(tmp_path / "absent.json")]) == 3
    assert "error:" in capsys.readouterr().err
    assert main(["generate", "--class", "2opt",
                 "--skeleton", "theta:3"]) == 3
    assert "must be even" in capsys.readouterr().err
    assert main(["generate", "--class", "2opt",
                 "--skeleton", "cube"]) == 3
    assert "unknown skeleton" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["analyze", str(bad)]) == 3
    assert "error:" in capsys.readouterr().err
