import json

import pytest

import main
from src.export import ReportExporter, render_report, render_text
from src.generators.structures import cyclic_ring
from src.schemas import OracleCheckReport, PartitionReport
from src.storage.structure_file import load_structure, parse_structure


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = main.main([str(arg) for arg in argv])
        return code, capsys.readouterr().out
    return run


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("OUTPUT_FORMAT", "MAX_ENUM_CARRIER", "MAX_SAT_CARRIER", "SATURATION_CAP", "S_MAX", "MAX_WORKERS", "SEED"):
        monkeypatch.delenv(name, raising=False)


def test_no_command_prints_help(run_cli):
    code, out = run_cli()
    assert code == 1
    assert "usage" in out


def test_validate(run_cli, fixture_dir):
    code, out = run_cli("validate", fixture_dir / "k3.ma")
    assert code == 0
    assert "valid: true" in out
    assert "universal_algebra: false" in out


def test_validate_broken_file(run_cli, fixture_dir):
    code, out = run_cli("--format", "json", "validate", fixture_dir / "broken_missing_tuple.ma")
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False
    assert "Stage 3 (Content)" in report["diagnostics"][0]


def test_fundamental_relation_of_m3(run_cli, fixture_dir):
    code, out = run_cli("fundamental", fixture_dir / "m3.ma")
    assert code == 0
    assert "relation: {{0,1},{2}}" in out
    assert "factor_is_universal: true" in out


def test_fundamental_relation_with_identities(run_cli, fixture_dir):
    code, out = run_cli(
        "--format", "json", "fundamental", fixture_dir / "k3.ma", "--identities", fixture_dir / "commutativity.ids"
    )
    assert code == 0
    report = json.loads(out)
    assert report["relation"] == "{{0,1,2}}"
    assert report["blocks"] == [["w0", "w1", "w2"]]
    assert len(report["identities"]) == 2


@pytest.mark.parametrize("filename", ["m3.ma", "k3.ma", "total2.ma", "z2.ma", "z4.ma", "left3.ma"])
def test_oracle_cross_checks_agree(run_cli, fixture_dir, filename):
    code, out = run_cli("--max-sat", "3", "--format", "json", "fundamental", fixture_dir / filename, "--oracle")
    assert code == 0
    checks = {check["name"]: check["status"] for check in json.loads(out)["oracle"]}
    assert checks["enumeration"] == "agree"
    assert checks["strongly-regular"] == "agree"
    assert checks["polynomials"] in ("agree", "skipped")
    if filename == "z4.ma":
        assert checks["polynomials"] == "skipped"


def test_axioms(run_cli, fixture_dir):
    code, out = run_cli("axioms", fixture_dir / "k3.ma")
    assert code == 0
    assert "hyperring: true" in out


def test_axioms_need_binary_operations(run_cli, fixture_dir):
    code, out = run_cli("axioms", fixture_dir / "m3.ma")
    assert code == 2
    assert out == ""


@pytest.mark.parametrize("strategy", ["def1", "adjacent"])
def test_hyperring_alpha(run_cli, fixture_dir, strategy):
    code, out = run_cli("--format", "json", "hyperring-alpha", fixture_dir / "k3.ma", "--strategy", strategy)
    assert code == 0
    report = json.loads(out)
    assert report["converged"] is True
    assert report["converged_at"] == 2
    assert report["relation"] == report["target"] == "{{0,1,2}}"
    assert report["factor_is_commutative_ring"] is True


def test_hyperring_alpha_without_convergence(run_cli, fixture_dir):
    code, out = run_cli("--format", "json", "hyperring-alpha", fixture_dir / "k3.ma", "--smax", "1")
    assert code == 0
    report = json.loads(out)
    assert report["converged"] is False
    assert report["s_max"] == 1


def test_factor_output_is_a_structure_file(run_cli, fixture_dir, tmp_path):
    target = tmp_path / "z4_mod_2.ma"
    code, out = run_cli("--output", target, "factor", fixture_dir / "z4.ma", "--partition", "{{0,2},{1,3}}")
    assert code == 0
    assert out == ""
    assert load_structure(target) == cyclic_ring(2)
    code, out = run_cli("validate", target)
    assert code == 0


def test_factor_with_bad_partition(run_cli, fixture_dir):
    code, _ = run_cli("factor", fixture_dir / "z4.ma", "--partition", "{{0,1}}")
    assert code == 2


@pytest.mark.parametrize(
    "diagram, identities, size",
    [
        ("chain_z4_z2.dia", None, 2),
        ("chain3.dia", None, 2),
        ("chain3.dia", "commutativity.ids", 2),
        ("chain_k3_total2.dia", "commutativity.ids", 2),
    ],
)
def test_colimit(run_cli, fixture_dir, diagram, identities, size):
    argv = ["--format", "json", "colimit", fixture_dir / diagram]
    if identities:
        argv += ["--identities", fixture_dir / identities]
    code, out = run_cli(*argv)
    assert code == 0
    report = json.loads(out)
    assert report["is_isomorphism"] is True
    assert report["top_isomorphic"] is True
    assert report["colimit_size"] == size
    assert report["fundamental_of_colimit_size"] == report["colimit_of_fundamentals_size"]


def test_gen_krasner(run_cli):
    code, out = run_cli("gen", "krasner", "--modulus", "7", "--subgroup", "1,2,4")
    assert code == 0
    algebra = parse_structure(out)
    assert algebra.carrier_size == 3
    assert algebra.name == "krasner(7,{1,2,4})"


@pytest.mark.parametrize(
    "argv, size",
    [
        (["total", "--n", "3"], 3),
        (["cyclic-group"], 4),
        (["cyclic-ring", "--n", "5"], 5),
        (["inflated-ring", "--n", "4", "--ideal", "0,2"], 4),
        (["left-projection"], 3),
        (["random", "--n", "2", "--signature", "u/1,f/2"], 2),
    ],
)
def test_gen_kinds(run_cli, argv, size):
    code, out = run_cli("gen", *argv)
    assert code == 0
    assert parse_structure(out).carrier_size == size


def test_gen_random_is_reproducible(run_cli):
    first = run_cli("--seed", "11", "gen", "random", "--n", "3")
    second = run_cli("--seed", "11", "gen", "random", "--n", "3")
    assert first == second


def test_gen_rejects_bad_parameters(run_cli):
    assert run_cli("gen", "krasner", "--subgroup", "2")[0] == 2
    assert run_cli("gen", "random", "--signature", "plus")[0] == 2
    assert run_cli("gen", "total", "--n", "0")[0] == 2


def test_json_output_is_deterministic(run_cli, fixture_dir):
    first = run_cli("--format", "json", "fundamental", fixture_dir / "k3.ma")
    second = run_cli("--format", "json", "fundamental", fixture_dir / "k3.ma")
    assert first == second
    assert json.loads(first[1])["command"] == "fundamental"


def test_missing_input_file(run_cli, tmp_path):
    code, _ = run_cli("fundamental", tmp_path / "nowhere.ma")
    assert code == 1


def test_configuration_errors(run_cli, fixture_dir, monkeypatch):
    monkeypatch.setenv("MAX_WORKERS", "0")
    assert run_cli("validate", fixture_dir / "k3.ma")[0] == 1
    monkeypatch.setenv("MAX_WORKERS", "2")
    monkeypatch.setenv("OUTPUT_FORMAT", "xml")
    assert run_cli("validate", fixture_dir / "k3.ma")[0] == 1


def test_environment_selects_output_format(run_cli, fixture_dir, monkeypatch):
    monkeypatch.setenv("OUTPUT_FORMAT", "json")
    code, out = run_cli("validate", fixture_dir / "k3.ma")
    assert code == 0
    assert json.loads(out)["valid"] is True


# Report rendering

def _partition_report():
    return PartitionReport(
        source="k3.ma",
        name="K3",
        carrier_size=3,
        relation="{{0,1,2}}",
        blocks=[["w0", "w1", "w2"]],
        block_count=1,
        factor_is_universal=True,
        oracle=[OracleCheckReport(name="enumeration", status="agree", expected="{{0,1,2}}", actual="{{0,1,2}}")],
    )


def test_text_rendering_of_nested_reports():
    text = render_report(_partition_report(), "text")
    assert "oracle:\n  - name: enumeration\n    status: agree\n" in text
    assert "block_count: 1\n" in text


def test_structures_render_as_file_text():
    assert render_text({"command": "gen", "structure": "elements: a\n"}) == "elements: a\n"


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report(_partition_report(), "yaml")


def test_exporter_writes_into_output_dir(tmp_path):
    exporter = ReportExporter(tmp_path / "reports")
    text = exporter.write(_partition_report(), "json", "k3.json")
    assert (tmp_path / "reports" / "k3.json").read_text(encoding="utf-8") == text
    assert json.loads(text)["name"] == "K3"
