import json
import os
import subprocess
import sys

import pytest

from virtmod.cli import main

HERE = os.path.dirname(__file__)


def data(name):
    return os.path.join(HERE, "data", name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN = [
    ("analyze_z.json", ["analyze", "z.json"]),
    ("analyze_z4.json", ["analyze", "z4.json"]),
    ("analyze_m2z_column.json", ["analyze", "m2z_column.json"]),
    ("analyze_m3f5_column.json", ["analyze", "m3f5_column.json"]),
    ("ring_m2z.json", ["ring", "ring_m2z.json"]),
]


@pytest.mark.parametrize("golden,argv", GOLDEN)
def test_golden_reports(capsys, golden, argv):
    code, out, _ = run(capsys, "--json", argv[0], data(argv[1]))
    assert code == 0
    with open(os.path.join(HERE, "golden", golden)) as fh:
        assert json.loads(out) == json.load(fh)


def test_z4_report_content(capsys):
    _, out, _ = run(capsys, "--json", "analyze", data("z4.json"))
    rep = json.loads(out)
    vss = next(v for v in rep["verdicts"] if v["predicate"] == "virtually_semisimple")
    assert vss["value"] is False
    assert "Z/4Z is not virtually semisimple" in vss["citation"]
    assert rep["decomposition"]["not_decomposable"]["prime"] == "2"


def test_analyze_decomposes_z_plus_z2(capsys):
    code, out, _ = run(capsys, "analyze", data("z_z2.json"), "--json")
    assert code == 0
    parts = [s["descriptor"] for s in json.loads(out)["decomposition"]["summands"]]
    assert parts == [{"ring": "int", "free_rank": 1, "invariant_factors": []},
                     {"ring": "int", "free_rank": 0, "invariant_factors": ["2"]}]


def test_ring_report_flags(capsys):
    code, out, _ = run(capsys, "--json", "ring", data("ring_m2z.json"))
    rep = json.loads(out)
    assert rep["is_left_completely_vss"] is True
    assert rep["is_semisimple"] is False
    code, out, _ = run(capsys, "ring", data("ring_m2z.json"))
    assert code == 0 and "NotVDomain" in out


def test_snf_and_embeds(capsys):
    code, out, _ = run(capsys, "--json", "snf", data("snf.json"))
    rep = json.loads(out)
    assert code == 0 and rep["verified"] and rep["invariant_factors"] == ["2", "4"]
    code, out, _ = run(capsys, "--json", "embeds", data("z4.json"), data("z_z2.json"))
    rep = json.loads(out)
    assert code == 0 and rep["a_embeds_in_b"] is False and rep["b_embeds_in_a"] is False


def test_ks(capsys):
    code, out, _ = run(capsys, "--json", "ks", data("ks_a.json"), data("ks_b.json"))
    rep = json.loads(out)
    assert code == 0 and rep["valid"]
    assert sorted(map(tuple, rep["certificate"]["pairing"])) == [(0, 1), (1, 0)]
    code, _, err = run(capsys, "ks", data("ks_c.json"), data("ks_a.json"))
    assert code == 2 and "a->b" in err


def test_validate(capsys, monkeypatch):
    code, out, _ = run(capsys, "--json", "validate", "virtually_semisimple", "24")
    assert code == 0
    assert json.loads(out) == {"predicate": "virtually_semisimple", "bound": 24,
                               "checked": 37, "mismatches": []}
    monkeypatch.setenv("VIRTMOD_ORACLE_BOUND", "12")
    _, out, _ = run(capsys, "--json", "validate", "semisimple")
    assert json.loads(out)["bound"] == 12
    _, out, _ = run(capsys, "--json", "validate", "semisimple", "--bound", "8")
    assert json.loads(out)["bound"] == 8


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "analyze", data("bad.json"))[0] == 1
    code, _, err = run(capsys, "analyze", data("bad.json"))
    assert "line" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "validate", "nope", "5")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1
    # domain refusals exit 2
    assert run(capsys, "--json", "embeds", data("qx_square.json"), data("qx_square.json"))[0] == 2
    bad_spec = tmp_path / "col.json"
    bad_spec.write_text('{"spec": {"n": 2, "base": "fp:4"}, "generators": 1}')
    assert run(capsys, "analyze", str(bad_spec))[0] == 1
    wrong_ks = tmp_path / "ks.json"
    wrong_ks.write_text('[{"invariant_factors": [4]}]')
    assert run(capsys, "ks", str(wrong_ks), str(wrong_ks))[0] == 2


def test_qx_report_marks_unsupported(capsys):
    code, out, _ = run(capsys, "--json", "analyze", data("qx_square.json"))
    assert code == 0
    rep = json.loads(out)
    qi = next(v for v in rep["verdicts"] if v["predicate"] == "quasi_injective")
    assert qi["value"] is None and "unsupported" in qi["witness"]


def test_ring_flag_for_untagged_input(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text('{"generators": 1, "relations": [[[0, 0, 1]]]}')
    _, out, _ = run(capsys, "--ring", "fp:3", "--json", "analyze", str(f))
    assert json.loads(out)["descriptor"]["ring"] == "fp:3"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "virtmod", "analyze", data("z.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "virtually_simple: True" in proc.stdout
