"""End-to-end checks of the command line interface."""

import json
import subprocess
import sys

import pytest

from cubeforms.cli import main

CUBE_M4 = '{"entries":[0,1,1,0,1,0,0,-1]}'
CORNER_M20 = '{"entries":[1,0,0,1,0,1,-5,0]}'


def run_main(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestWorkedExamples:
    def test_forms_of_the_identity_cube(self, capsys):
        code, out = run_main(
            capsys, ["forms-of", "--field", "Q", "--disc", "-4", CUBE_M4]
        )
        assert code == 0
        payload = json.loads(out)
        unit_form = {
            "a": {"u": "1", "v": "0"},
            "b": {"u": "0", "v": "0"},
            "c": {"u": "1", "v": "0"},
        }
        assert payload == {"forms": [unit_form, unit_form, unit_form]}

    def test_classgroup_order_three(self, capsys):
        code, out = run_main(capsys, ["classgroup", "--field", "Q", "--disc", "-23"])
        assert code == 0
        payload = json.loads(out)
        assert payload["order"] == 3
        table = payload["table"]
        # a finite group's multiplication table is a latin square
        n = len(table)
        for row in table:
            assert sorted(row) == list(range(n))
        for col in zip(*table):
            assert sorted(col) == list(range(n))

    def test_output_is_byte_stable(self, capsys):
        _, first = run_main(
            capsys, ["forms-of", "--field", "Q", "--disc", "-4", CUBE_M4]
        )
        _, second = run_main(
            capsys, ["forms-of", "--field", "Q", "--disc", "-4", CUBE_M4]
        )
        assert first == second

    def test_console_script_matches_in_process(self, capsys):
        _, expected = run_main(
            capsys, ["forms-of", "--field", "Q", "--disc", "-4", CUBE_M4]
        )
        proc = subprocess.run(
            [sys.executable, "-m", "cubeforms.cli", "forms-of", "--field", "Q",
             "--disc", "-4", CUBE_M4],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == expected


class TestPipelines:
    def test_disc(self, capsys):
        code, out = run_main(capsys, ["disc", "--field", "Q", CORNER_M20])
        assert code == 0
        assert json.loads(out) == {"disc": {"u": "-20", "v": "0"}}

    def test_psi_phi_round_trip(self, capsys):
        code, ideal_json = run_main(
            capsys,
            ["psi", "--field", "Q", "--disc", "-20", '{"a":"2","b":"-2","c":"3"}'],
        )
        assert code == 0
        code, form_json = run_main(
            capsys, ["phi", "--field", "Q", "--disc", "-20", ideal_json.strip()]
        )
        assert code == 0
        assert json.loads(form_json) == {
            "a": {"u": "2", "v": "0"},
            "b": {"u": "-2", "v": "0"},
            "c": {"u": "3", "v": "0"},
        }

    def test_identity_cube_composes_as_neutral(self, capsys):
        code, ident = run_main(
            capsys, ["identity-cube", "--field", "Q", "--disc", "-20"]
        )
        assert code == 0
        code, out = run_main(
            capsys,
            [
                "compose-cubes",
                "--field",
                "Q",
                "--disc",
                "-20",
                ident.strip(),
                ident.strip(),
            ],
        )
        assert code == 0
        assert json.loads(out) == json.loads(ident)

    def test_cube_triple_round_trip(self, capsys):
        code, triple_json = run_main(
            capsys, ["psi-prime", "--field", "Q", "--disc", "-20", CORNER_M20]
        )
        assert code == 0
        code, cube_json = run_main(
            capsys, ["phi-prime", "--field", "Q", "--disc", "-20", triple_json.strip()]
        )
        assert code == 0
        # the round trip negates the corner cube over Q
        assert json.loads(cube_json) == {
            "entries": [
                {"u": "-1", "v": "0"},
                {"u": "0", "v": "0"},
                {"u": "0", "v": "0"},
                {"u": "-1", "v": "0"},
                {"u": "0", "v": "0"},
                {"u": "-1", "v": "0"},
                {"u": "5", "v": "0"},
                {"u": "0", "v": "0"},
            ]
        }

    def test_mul_and_invert_ideals(self, capsys):
        code, ideal_json = run_main(
            capsys,
            ["psi", "--field", "Q", "--disc", "-20", '{"a":"2","b":"2","c":"3"}'],
        )
        assert code == 0
        code, inv_json = run_main(
            capsys, ["invert-ideal", "--field", "Q", "--disc", "-20", ideal_json.strip()]
        )
        assert code == 0
        code, prod_json = run_main(
            capsys,
            [
                "mul-ideals",
                "--field",
                "Q",
                "--disc",
                "-20",
                ideal_json.strip(),
                inv_json.strip(),
            ],
        )
        assert code == 0
        code, verdict = run_main(
            capsys, ["is-principal", "--field", "Q", "--disc", "-20", prod_json.strip()]
        )
        assert code == 0
        assert json.loads(verdict)["principal"] is True
        code, verdict = run_main(
            capsys, ["is-principal", "--field", "Q", "--disc", "-20", ideal_json.strip()]
        )
        assert code == 0
        assert json.loads(verdict)["principal"] is False

    def test_reduce_cube_sqrt2(self, capsys):
        code, out = run_main(
            capsys,
            [
                "reduce-cube",
                "--field",
                "Q-sqrt2",
                '{"entries":[0,1,1,-1,1,-1,-1,2]}',
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["cube"]["entries"][0] == {"u": "1", "v": "0"}

    def test_stdin_payload(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(CUBE_M4))
        code, out = run_main(capsys, ["disc", "--field", "Q"])
        assert code == 0
        assert json.loads(out) == {"disc": {"u": "-4", "v": "0"}}

    def test_pretty_format(self, capsys):
        code, out = run_main(
            capsys,
            ["disc", "--field", "Q", "--format", "pretty", CORNER_M20],
        )
        assert code == 0
        assert out.strip() == "-20"


class TestErrorReporting:
    def test_malformed_json_is_a_usage_error(self, capsys):
        code, out = run_main(capsys, ["disc", "--field", "Q", "not json"])
        assert code == 2
        assert json.loads(out)["error"] == "JSONDecodeError"

    def test_wrong_shape_is_a_typed_error_with_the_input(self, capsys):
        code, out = run_main(capsys, ["disc", "--field", "Q", '{"entries":[1,2,3]}'])
        assert code == 1
        payload = json.loads(out)
        assert payload["error"] == "DescriptorMismatch"
        assert payload["input"] == '{"entries":[1,2,3]}'

    def test_nonfundamental_disc_is_a_typed_error(self, capsys):
        code, out = run_main(
            capsys, ["identity-cube", "--field", "Q", "--disc", "18"]
        )
        assert code == 1
        assert json.loads(out)["error"] == "DiscriminantNotFundamental"

    def test_unknown_subcommand_is_usage(self):
        with pytest.raises(SystemExit) as exc:
            main(["definitely-not-a-command"])
        assert exc.value.code == 2


def test_verify_seed_42_exits_clean(capsys):
    code, out = run_main(capsys, ["verify", "--seed", "42", "--format", "json"])
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines() if line.strip()]
    assert len(lines) == 9
    assert all(entry["passed"] for entry in lines)
