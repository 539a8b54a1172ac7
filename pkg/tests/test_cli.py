"""CLI surface: dispatch, exit codes, file ingestion, JSON emission."""
import json

import pytest
from click.testing import CliRunner

from toruscert import fileformat
from toruscert.cli import cli, main
from tests.test_embedded import triple_loop_graph


@pytest.fixture
def runner():
    return CliRunner()


def test_certify_writes_certificate(tmp_path, runner):
    out = tmp_path / "cert.json"
    res = runner.invoke(
        cli, ["certify", "--s", "1", "--t", "3", "--delta", "6", "--json", str(out)]
    )
    assert res.exit_code == 0, res.output
    assert "survivors: 0" in res.output
    obj = json.loads(out.read_text())
    assert obj["survivors"] == 0
    assert obj["params"]["s"] == 1 and obj["params"]["t"] == 3


def test_certify_counting_mode(runner):
    res = runner.invoke(
        cli,
        ["certify", "--s", "2", "--t", "2", "--delta", "6", "--s-polarity", "polarized"],
    )
    assert res.exit_code == 0
    assert "distance bound: 6" in res.output


def test_exit_codes_scale_limit_and_usage():
    assert main(["certify", "--s", "9", "--t", "9", "--delta", "6"]) == 2
    assert main(["certify", "--s", "1"]) == 64
    assert main(["nonsense"]) == 64
    assert main(["certify", "--s", "2", "--t", "2", "--delta", "6", "--mode", "enumerate"]) == 64


def test_lemma_parity_exit_codes():
    assert main(["lemma", "parity", "--sign-s", "1", "--sign-t", "-1"]) == 0
    assert main(["lemma", "parity", "--sign-s", "1", "--sign-t", "1"]) == 1


def test_lemma_no_double_parallel_exit_codes():
    assert main(["lemma", "no-double-parallel", "--pairs", "0:1 0:2 1:1"]) == 0
    assert main(["lemma", "no-double-parallel", "--pairs", "0:1 0:1"]) == 1


def test_certify_workers_flag():
    assert main(["certify", "--s", "3", "--t", "3", "--delta", "6", "--workers", "2"]) == 0


def test_lemma_sizes(runner):
    res = runner.invoke(cli, ["lemma", "pos-size", "--t", "4", "--size", "5"])
    assert res.exit_code == 1
    res = runner.invoke(
        cli, ["lemma", "neg-size", "--t", "2", "--size", "4", "--exceptional"]
    )
    assert res.exit_code == 1
    assert "exceptional_route" in res.output
    res = runner.invoke(cli, ["lemma", "neg-size", "--t", "2", "--size", "3"])
    assert res.exit_code == 0


def test_lemma_with_graph_file(tmp_path, runner):
    path = tmp_path / "g.txt"
    fileformat.dump(triple_loop_graph(4, offsets=(1,)), path)
    res = runner.invoke(cli, ["lemma", "degree-face", "--input", str(path), "--reduce"])
    assert res.exit_code == 0, res.output
    res = runner.invoke(cli, ["lemma", "s-cycles", "--input", str(path)])
    assert res.exit_code == 0
    assert "type {" in res.output


def test_perm_command(runner):
    res = runner.invoke(cli, ["perm", "--n", "6", "--alpha", "0", "--epsilon", "-1"])
    assert res.exit_code == 0
    assert "identity permutation" in res.output
    res = runner.invoke(cli, ["perm", "--n", "4", "--alpha", "1", "--epsilon", "1"])
    assert res.exit_code == 0
    assert "(1, 4)" in res.output and "(2, 3)" in res.output


def test_klein_command(runner):
    res = runner.invoke(cli, ["klein", "--m", "2"])
    assert res.exit_code == 0
    assert "q=1" in res.output and "distance=2" in res.output
    res = runner.invoke(cli, ["klein", "--scan", "6"])
    assert res.exit_code == 0
    assert "m=3: none" in res.output
    assert main(["klein"]) == 64


def test_verify_all_fault_injection(tmp_path):
    # a deliberately corrupted expected table must make the suite fail
    assert main(["verify-all", "--fault-inject", "corrupt-klein"]) == 1
