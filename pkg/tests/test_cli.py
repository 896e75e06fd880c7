import json
import pathlib

import pytest

from sketchlab.cli import main


GOLDEN = pathlib.Path(__file__).parent / "golden"

MP_DOC = """
spec facts over mp {
  Fml: A, A⇒B, B
  Imp: w
  i_lhs(w) = A
  i_rhs(w) = B
  i_res(w) = A⇒B
  Prv: pA, pAB
  prv_f(pA) = A
  prv_f(pAB) = A⇒B
}
prove { apply modus-ponens first }
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def mp_file(tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text(MP_DOC, encoding="utf-8")
    return str(path)


@pytest.fixture
def prog_file(tmp_path):
    path = tmp_path / "prog.txt"
    path.write_text("pair(x := 1, x)\n", encoding="utf-8")
    return str(path)


def test_demo_mp_matches_golden_bytes(capsys):
    code, out, _ = run(capsys, "demo", "mp")
    assert code == 0
    assert out == (GOLDEN / "demo_mp.txt").read_text(encoding="utf-8")


def test_demo_seqprod_matches_golden_bytes(capsys):
    code, out, _ = run(capsys, "demo", "seqprod")
    assert code == 0
    assert out == (GOLDEN / "demo_seqprod.txt").read_text(encoding="utf-8")


def test_eval_left_and_right_match_goldens(capsys, prog_file):
    code, out, _ = run(capsys, "eval", prog_file, "--state", "x=0",
                       "--order", "left")
    assert code == 0
    assert out == (GOLDEN / "eval_left.json").read_text(encoding="utf-8")
    code, out, _ = run(capsys, "eval", prog_file, "--state", "x=0",
                       "--order", "right")
    assert code == 0
    assert out == (GOLDEN / "eval_right.json").read_text(encoding="utf-8")


def test_eval_orders_disagree_on_values(capsys, prog_file):
    _, left, _ = run(capsys, "eval", prog_file, "--state", "x=0",
                     "--order", "left")
    _, right, _ = run(capsys, "eval", prog_file, "--state", "x=0",
                      "--order", "right")
    assert json.loads(left)["value"] != json.loads(right)["value"]


def test_cli_output_is_byte_deterministic(capsys, mp_file):
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "prove", mp_file, "--spec", "facts",
                        "--logic", "mp", "--format", "json")
        outs.add(out)
    assert len(outs) == 1


def test_check_valid_document_exits_zero(capsys, mp_file):
    code, out, _ = run(capsys, "check", mp_file)
    assert code == 0 and out.endswith("ok\n")


def test_check_empty_file_exits_two(capsys, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("spec broken", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and err


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/nowhere.txt")
    assert code == 2 and "error" in err


def test_prove_derives_the_witness(capsys, mp_file):
    code, out, _ = run(capsys, "prove", mp_file, "--spec", "facts",
                       "--logic", "mp", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["spec"]["actions"]["prv_f"]["pB"] == "B"


def test_prove_without_match_exits_one(capsys, tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("""
        spec thin over mp { Fml: A }
        prove { apply modus-ponens first }
    """, encoding="utf-8")
    code, out, _ = run(capsys, "prove", str(path), "--logic", "mp")
    assert code == 1


def test_entail_refuted_exits_one(capsys, tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("""
        spec one over eq { Type: X }
        spec two over eq { Type: X, Y }
        morphism inc { source one target two }
    """, encoding="utf-8")
    code, out, _ = run(capsys, "entail", str(path), "--logic", "eq",
                       "--depth", "2", "--format", "json")
    assert code == 1
    assert json.loads(out)["status"] == "refuted"


def test_bad_state_flag_exits_two(capsys, prog_file):
    code, _, err = run(capsys, "eval", prog_file, "--state", "x:oops")
    assert code == 2


def test_saturate_json_reports_status(capsys, tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("""
        spec endo over eq {
          Type: X
          Term: f
          dom(f) = X
          cod(f) = X
        }
    """, encoding="utf-8")
    code, out, _ = run(capsys, "saturate", str(path), "--logic", "eq",
                       "--depth", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "fixpoint"
    assert "f" in data["spec"]["carriers"]["Term"]


def test_translate_far_from_file(capsys, tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("""
        spec little over dec {
          Type: A
          TermM: m
          m_dom(m) = A
          m_cod(m) = A
        }
    """, encoding="utf-8")
    code, out, _ = run(capsys, "translate", str(path), "--via", "far",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["spec"]["carriers"]["Term"] == ["m"]
