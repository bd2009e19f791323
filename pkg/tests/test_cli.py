import json

import pytest

from dgh.cli import main


@pytest.fixture()
def files(tmp_path):
    c3 = {"vertices": ["0", "1", "2"], "arrows": [["0", "1"], ["1", "2"], ["2", "0"]]}
    c6 = {
        "vertices": [str(i) for i in range(6)],
        "arrows": [[str(i), str((i + 1) % 6)] for i in range(6)],
    }
    (tmp_path / "c3.json").write_text(json.dumps(c3))
    (tmp_path / "c6.json").write_text(json.dumps(c6))
    (tmp_path / "p.json").write_text(
        json.dumps(
            {
                "source": "c6.json",
                "target": "c3.json",
                "assignment": {str(i): str(i % 3) for i in range(6)},
            }
        )
    )
    (tmp_path / "cover.json").write_text(
        json.dumps({"members": {"a": ["0", "1"], "b": ["1", "2"], "c": ["2", "0"]}})
    )
    (tmp_path / "bad.json").write_text(
        json.dumps({"vertices": ["a", "a"], "arrows": []})
    )
    (tmp_path / "loop.json").write_text(
        json.dumps({"vertices": ["a"], "arrows": [["a", "a"]]})
    )
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


class TestExitCodes:
    def test_homology_passes(self, files, capsys):
        code, out = run(capsys, "homology", files / "c3.json")
        assert code == 0
        data = json.loads(out)
        assert data["H"][0] == {"rank": 1, "torsion": []}
        assert data["H"][1] == {"rank": 1, "torsion": []}

    def test_missing_file_is_input_error(self, files, capsys):
        assert main(["info", str(files / "missing.json")]) == 2

    def test_duplicate_vertices_input_error(self, files, capsys):
        assert main(["info", str(files / "bad.json")]) == 2

    def test_self_loop_input_error(self, files, capsys):
        assert main(["info", str(files / "loop.json")]) == 2

    def test_budget_exceeded(self, files, capsys):
        code = main(
            ["--max-maps", "2", "classes", str(files / "c3.json"), str(files / "c3.json")]
        )
        assert code == 3

    def test_env_budget(self, files, capsys, monkeypatch):
        monkeypatch.setenv("DGH_BUDGET", "4")
        assert main(["nerve", str(files / "c3.json")]) == 3
        monkeypatch.setenv("DGH_BUDGET", "not-a-number")
        assert main(["nerve", str(files / "c3.json")]) == 2

    def test_failed_check_exits_one(self, files, capsys):
        # three overlapping arcs of the 3-cycle are not closed, so some cube
        # escapes the cover
        code, out = run(
            capsys, "check", "cover", files / "c3.json", files / "cover.json"
        )
        assert code == 1


class TestDeterminism:
    def test_byte_identical_reports(self, files, capsys):
        _, first = run(capsys, "homology", files / "c3.json")
        _, second = run(capsys, "homology", files / "c3.json")
        assert first == second
        _, third = run(capsys, "verify", "paper", "--suite", "rho")
        _, fourth = run(capsys, "verify", "paper", "--suite", "rho")
        assert third == fourth


class TestCommands:
    def test_info(self, files, capsys):
        code, out = run(capsys, "info", files / "c3.json")
        assert code == 0
        assert json.loads(out) == {
            "arrows": 3,
            "components": 1,
            "pass": True,
            "vertices": 3,
        }

    def test_pi0(self, files, capsys):
        code, out = run(capsys, "pi0", files / "c3.json")
        assert json.loads(out)["count"] == 1

    def test_text_format_renders_json_content(self, files, capsys):
        code, out = run(capsys, "--format", "text", "info", files / "c3.json")
        assert code == 0
        assert "vertices: 3" in out

    def test_classes(self, files, capsys):
        code, out = run(
            capsys, "classes", files / "c3.json", files / "c3.json"
        )
        assert code == 0
        assert json.loads(out)["classes"] >= 1

    def test_antower(self, files, capsys):
        code, out = run(
            capsys,
            "antower",
            files / "c3.json",
            "--base",
            "0",
            "--stages",
            "6",
        )
        assert code == 0
        assert json.loads(out)["class_counts"] == [1, 1, 1, 1, 2, 3]

    def test_nerve_counts(self, files, capsys):
        code, out = run(capsys, "nerve", files / "c3.json", "--maxdim", "2")
        data = json.loads(out)
        assert data["cubes"] == [3, 6, 18]
        assert data["nondegenerate"] == [3, 3, 3]

    def test_pi1(self, files, capsys):
        code, out = run(capsys, "pi1", files / "c3.json", "--base", "0")
        data = json.loads(out)
        assert data["abelianization"] == {"rank": 1, "torsion": []}

    def test_check_covering(self, files, capsys):
        code, out = run(capsys, "check", "covering", files / "p.json", "--l", "2")
        assert code == 0
        assert json.loads(out)["is_l_covering"] is True

    def test_check_covering_fails_at_three(self, files, capsys):
        code, out = run(capsys, "check", "covering", files / "p.json", "--l", "3")
        assert code == 1

    def test_check_lifting(self, files, capsys):
        code, out = run(
            capsys,
            "check",
            "lifting",
            files / "p.json",
            "--horn",
            "1,1,0,2",
        )
        assert code == 0

    def test_check_kan(self, files, capsys):
        code, out = run(capsys, "check", "kan", "--m", "1", "--n", "2")
        assert code == 0

    def test_check_rho(self, files, capsys):
        code, out = run(capsys, "check", "rho", "--m", "2", "--n", "2")
        assert code == 0

    def test_check_shrinkings(self, files, capsys):
        code, out = run(capsys, "check", "shrinkings", "><><", "><")
        assert code == 0
        data = json.loads(out)
        assert data["count"] >= 1

    def test_compare(self, files, capsys):
        (files / "rot.json").write_text(
            json.dumps(
                {
                    "source": "c3.json",
                    "target": "c3.json",
                    "assignment": {"0": "1", "1": "2", "2": "0"},
                }
            )
        )
        code, out = run(capsys, "compare", files / "rot.json", "--maxdim", "2")
        assert code == 0
        data = json.loads(out)
        assert data["iso_below_top"] is True
        assert data["degrees"]["1"]["matrix"] == [[1]]

    def test_nerve_theorem(self, files, capsys):
        (files / "trivial_cover.json").write_text(
            json.dumps({"members": {"all": ["0", "1", "2"]}})
        )
        code, out = run(
            capsys,
            "nerve-theorem",
            files / "c3.json",
            files / "trivial_cover.json",
        )
        # the cycle is not contractible, so the one-member cover cannot be
        # a consistent nerve witness
        assert code == 1
        assert json.loads(out)["consistent"] is False

    def test_check_ddr(self, files, capsys):
        (files / "i1.json").write_text(
            json.dumps({"vertices": ["a", "b"], "arrows": [["a", "b"]]})
        )
        (files / "eta.json").write_text(
            json.dumps({"assignment": {"a": "a", "b": "a"}})
        )
        code, out = run(
            capsys,
            "check",
            "ddr",
            files / "i1.json",
            "--part",
            "a",
            "--eta",
            files / "eta.json",
        )
        assert code == 0
        assert json.loads(out)["pass"] is True

    def test_verify_suite_header(self, files, capsys):
        code, out = run(capsys, "verify", "paper", "--suite", "closure")
        assert code == 0
        data = json.loads(out)
        assert data["suite"] == "closure"
        assert isinstance(data["anchor"], str) and data["anchor"]

    def test_unknown_suite(self, files, capsys):
        assert main(["verify", "paper", "--suite", "nope"]) == 2
