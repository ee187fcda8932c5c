import pytest

from conftest import FIXTURES, load_text
from tptpmodels.cli import main


def fx(name):
    return str(FIXTURES / name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lint_clean_model_exits_zero(capsys):
    code, out, err = run(capsys, "lint", fx("tff_cats_reused.s"))
    assert code == 0
    assert "ok" in out


def test_lint_malformed_file_exits_two_with_position(capsys, tmp_path):
    bad = tmp_path / "bad.p"
    bad.write_text("fof(a,axiom,p( | q).\n")
    code, out, err = run(capsys, "lint", str(bad))
    assert code == 2
    assert "SyntaxError" in err
    assert "1:" in err  # line of the offending token


def test_lint_missing_distinctness_warns_but_exits_zero(capsys, tmp_path):
    weakened = load_text("tff_cats_reused.s").replace(
        "    & $distinct(d_garfield,d_arlene,d_nermal)\n", "")
    path = tmp_path / "weak.s"
    path.write_text(weakened)
    code, out, err = run(capsys, "lint", str(path))
    assert code == 0
    assert "DistinctnessUnstated" in err


def test_lint_unreadable_file_exits_two(capsys, tmp_path):
    code, out, err = run(capsys, "lint", str(tmp_path / "missing.p"))
    assert code == 2
    assert "cannot read" in err


def test_check_expected_countersatisfiable(capsys):
    code, out, err = run(capsys, "check",
                         "--problem", fx("fof_grades.p"),
                         "--model", fx("fof_grades_model.s"),
                         "--expect", "CounterSatisfiable")
    assert code == 0
    assert "% SZS status CounterSatisfiable for fof_grades" in out
    assert "all_created_equal\tconjecture\t-\tfalse" in out


def test_check_expectation_mismatch_exits_one(capsys):
    code, out, err = run(capsys, "check",
                         "--problem", fx("fof_grades.p"),
                         "--model", fx("fof_grades_model.s"),
                         "--expect", "Satisfiable")
    assert code == 1


def test_check_gave_up_exits_three(capsys):
    code, out, err = run(capsys, "check",
                         "--problem", fx("tff_lineage.p"),
                         "--model", fx("tff_lineage_int.s"))
    assert code == 3
    assert "% SZS status GaveUp for tff_lineage" in out


def test_check_kripke_countermodel(capsys):
    code, out, err = run(capsys, "check",
                         "--problem", fx("nxf_weather.p"),
                         "--model", fx("nxf_weather_model.s"),
                         "--expect", "CounterSatisfiable")
    assert code == 0
    assert "c\tconjecture\tlocal\tfalse" in out


def test_emit_verify_kripke_to_stdout(capsys):
    code, out, err = run(capsys, "emit-verify",
                         "--problem", fx("nxf_weather.p"),
                         "--model", fx("nxf_weather_model.s"))
    assert code == 0
    assert "$$fomlModel" in out
    assert "conjecture-local" in out
    assert "conjecture-global" in out


def test_emit_verify_classical_to_file(capsys, tmp_path):
    out_path = tmp_path / "verify.p"
    code, out, err = run(capsys, "emit-verify",
                         "--problem", fx("fof_grades.p"),
                         "--model", fx("fof_grades_model.s"),
                         "-o", str(out_path))
    assert code == 0
    assert out == ""
    text = out_path.read_text()
    assert "fof(grades_interpretation,axiom," in text


def test_emit_verify_without_logic_spec_exits_two(capsys, tmp_path):
    stripped = "\n".join(
        line for line in load_text("nxf_weather.p").splitlines()
        if "logic" not in line and "$modal" not in line
        and "$constants" not in line and "$quantification" not in line
        and "$modalities" not in line)
    path = tmp_path / "nologic.p"
    path.write_text(stripped)
    code, out, err = run(capsys, "emit-verify",
                         "--problem", str(path),
                         "--model", fx("nxf_weather_model.s"),
                         "--flavor", "kripke_foml")
    assert code == 2
    assert "MissingLogicSpec" in err


def test_upgrade_rewrites_roles(capsys):
    code, out, err = run(capsys, "upgrade", fx("fof_grades_model_legacy.s"))
    assert code == 0
    assert "interpretation-domains" in out
    assert "fi_domain" not in out


def test_regrain_to_fine(capsys):
    code, out, err = run(capsys, "regrain", fx("tff_cats_reused.s"), "--to", "fine")
    assert code == 0
    assert "interpretation-domains(cat, cat)" in out
    assert "interpretation-mappings(loves, cat)" in out


def test_regrain_coarse_is_stable(capsys):
    code1, out1, _ = run(capsys, "regrain", fx("fof_grades_model.s"), "--to", "coarse")
    assert code1 == 0
    code2, out2, _ = run(capsys, "regrain", fx("fof_grades_model.s"), "--to", "coarse")
    assert out1 == out2  # byte-identical output for identical inputs


def test_dot_worlds_view(capsys):
    code, out, err = run(capsys, "dot", fx("nxf_weather_model.s"))
    assert code == 0
    assert out.count("->") == 5
    assert 'peripheries=2' in out


def test_dot_domains_view(capsys):
    code, out, err = run(capsys, "dot", fx("tff_cats_reused.s"), "--view", "domains")
    assert code == 0
    assert '"cat.d_garfield" -> "cat.d_garfield" [label="loves"];' in out


def test_dot_render_writes_an_image(capsys, tmp_path):
    image = tmp_path / "worlds.png"
    code, out, err = run(capsys, "dot", fx("nxf_weather_model.s"),
                         "-o", str(tmp_path / "worlds.dot"),
                         "--render", str(image))
    assert code == 0
    assert image.stat().st_size > 0


def test_eval_subcommand(capsys):
    code, out, err = run(capsys, "eval",
                         "--model", fx("nxf_weather_model.s"),
                         "--formula", "{$possible} @ ( ~ rains )")
    assert code == 0
    assert out.strip() == "false"
    code, out, err = run(capsys, "eval",
                         "--model", fx("fof_grades_model.s"),
                         "--formula", 'mystery("a")')
    assert code == 3
    assert out.startswith("unknown")


def test_assemble_summary_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "assemble", fx("nxf_weather_model.s"))
    code2, out2, _ = run(capsys, "assemble", fx("nxf_weather_model.s"))
    assert code1 == code2 == 0
    assert out1 == out2
    assert "kind\tkripke" in out1
    assert "world\tw1\tlocal" in out1


def test_usage_error_exits_two(capsys):
    assert main(["regrain", fx("tff_cats_reused.s"), "--to", "nope"]) == 2
