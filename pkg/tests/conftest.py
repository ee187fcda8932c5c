from pathlib import Path

import pytest

from tptpmodels.syntax import parse_file

FIXTURES = Path(__file__).parent / "fixtures"

MODEL_FIXTURES = [
    "fof_grades_model.s",
    "fof_grades_model_medium.s",
    "fof_grades_model_fine.s",
    "fof_grades_model_legacy.s",
    "tff_cats_reused.s",
    "tff_cats_reused_medium.s",
    "tff_cats_separate.s",
    "tff_cats_separate_fine.s",
    "tff_cats_compact.s",
    "tff_lineage_peano.s",
    "tff_lineage_int.s",
    "thf_coffee_model.s",
    "thf_coffee_model_mixed.s",
    "nxf_weather_model.s",
    "nxf_weather_model_medium.s",
    "nxf_weather_model_fine.s",
    "nxf_weather_model_compact.s",
    "nxf_weather_local_model.s",
]

PROBLEM_FIXTURES = [
    "fof_grades.p",
    "tff_cats.p",
    "tff_lineage.p",
    "thf_coffee.p",
    "nxf_weather.p",
    "nxf_weather_local.p",
]

ALL_FIXTURES = PROBLEM_FIXTURES + MODEL_FIXTURES


def load_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def load_units(name: str):
    units, diagnostics = parse_file(load_text(name))
    errors = [d for d in diagnostics if d.severity == "error"]
    assert not errors, f"{name}: {errors}"
    return units


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def units():
    return load_units
