import pytest

import main


def run(capsys, *argv):
    code = main.main(list(argv))
    return code, capsys.readouterr()


def test_slope_command(capsys):
    code, out = run(capsys, "slope", "--p", "1", "--q", "2")
    assert code == 0
    lines = out.out.splitlines()
    assert "triple: 1/1 -2/3 -1/3" in lines
    assert "cf_minus_p: [3]" in lines
    assert "cf_minus_q: [1, -2]" in lines


def test_profile_and_threshold(capsys):
    code, out = run(capsys, "profile", "--K", "1,1", "--L", "0,1", "--n", "2")
    assert code == 0
    assert out.out.splitlines() == [
        "n: 2", "family_class: (1, 3)", "delta_mu: 3", "delta_lambda: 1", "delta_nu: 4",
    ]
    code, out = run(capsys, "threshold", "--K", "1,-1", "--L", "0,1", "--bound", "10")
    assert out.out.strip() == "N0: 3"


def test_profile_with_negative_twist_count(capsys):
    code, out = run(capsys, "profile", "--K", "1,0", "--L", "0,1", "--n", "-3")
    assert code == 0
    lines = out.out.splitlines()
    assert "n: -3" in lines
    assert "delta_mu: 3" in lines
    assert "delta_lambda: 1" in lines
    # 1 et -3 de signes opposés
    assert "delta_nu: 2" in lines


def test_threshold_reached_only_at_bound_is_rejected(capsys):
    code, out = run(capsys, "threshold", "--K", "1,-1", "--L", "0,1", "--bound", "3")
    assert code == 2
    assert "augmentez la borne" in out.err


def test_weights_command(capsys):
    code, out = run(capsys, "weights", "--a", "1,1,0", "--m", "1", "--p", "1", "--q", "1")
    assert code == 0
    assert "lambda_alt: 272" in out.out
    assert "strand_model: 12" in out.out


def test_surgery_command(capsys, tmp_path):
    target = tmp_path / "k.diag"
    code, out = run(
        capsys, "surgery", "--a1", "1", "--a2", "1", "--a3", "1", "--m", "1",
        "--b1", "1", "--r", "0", "--export", str(target),
    )
    assert code == 0
    assert "order: 1156" in out.out
    code, out = run(capsys, "surgery", "--load", str(target))
    assert "group: Z/1156" in out.out


def test_surgery_infinite_order(capsys):
    code, out = run(
        capsys, "surgery", "--a1", "1", "--a2", "1", "--a3", "1", "--m", "1",
        "--b1", "1", "--r", "-1156",
    )
    assert code == 0
    assert "order: infini" in out.out


def test_decompose_command(capsys):
    code, out = run(capsys, "decompose", "--xi", "")
    assert code == 0
    assert "omega: 1 -2 1 1" in out.out
    assert "certificate: ok" in out.out


def test_row_and_table_commands(capsys):
    code, out = run(capsys, "row", "--a3", "0", "--a2", "1", "--a1", "0", "--m", "1", "--b1", "2", "--s1xs2")
    assert code == 0
    assert "Z/23 + Z/23" in out.out
    code, out = run(capsys, "table", "--grid", "a3=0,a2=1,a1=1,m=1,b1=1..2", "--format", "kv")
    assert "lambda_alt: 272" in out.out
    assert "lambda_alt: 555" in out.out


def test_export_command(capsys, tmp_path):
    target = tmp_path / "out.diag"
    code, out = run(
        capsys, "export", "--a3", "1", "--a2", "1", "--a1", "1", "--m", "1", "--b1", "1",
        "--out", str(target),
    )
    assert code == 0
    assert target.exists()


def test_value_error_exits_with_usage_code(capsys):
    code, out = run(capsys, "weights", "--a", "1,1,0", "--m", "1", "--p", "2", "--q", "4")
    assert code == 2
    assert "premiers entre eux" in out.err


def test_missing_surgery_parameters(capsys):
    code, _ = run(capsys, "surgery", "--a1", "1")
    assert code == 2


def test_io_error_exits_with_failure(capsys, tmp_path):
    code, out = run(capsys, "surgery", "--load", str(tmp_path / "absent.diag"))
    assert code == 1
    assert "absent.diag" in out.err


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main.main(["row", "--a3", "0"])
    assert exc.value.code == 2


def test_keyboard_interrupt(monkeypatch, capsys):
    def interrupted(args):
        raise KeyboardInterrupt

    monkeypatch.setattr(main, "run", interrupted)
    code, _ = run(capsys, "check")
    assert code == 130
