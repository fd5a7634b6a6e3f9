"""Tests for the run-config grammar."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from acidfront.errors import InvalidSpec, ParseError, UnknownExperiment, UnknownKey
from acidfront.experiments import EXPERIMENTS, get_experiment
from acidfront.files import RunConfig, parse_config, render_config, with_overrides
from acidfront.models import Analysis, CflPolicy, ModelVariant, SweepParameter


def test_parse_minimal_config():
    """Test a config naming only a builtin experiment."""
    config = parse_config("experiment = oneeq_heterogeneous\n")

    assert config.experiment == "oneeq_heterogeneous"
    assert config.explicit() == {"experiment": "oneeq_heterogeneous"}


def test_parse_all_value_kinds():
    """Test numbers, booleans, enums, lists, meshes and paths."""
    text = """
    # one-equation run
    experiment = oneeq_heterogeneous
    variant = ONEEQ
    d = 0.25          # slower front
    snapshot_count = 9
    exact = no
    shape = True
    values = 0.5, 1, 2
    meshes = 0.05:0.001, 0.01:0.0001
    parameter = d
    cfl_policy = fail
    output_dir = out/runs
    """

    config = parse_config(text)

    assert config.variant is ModelVariant.ONE_EQ
    assert config.d == 0.25
    assert config.snapshot_count == 9
    assert config.exact is False
    assert config.shape is True
    assert config.values == (0.5, 1.0, 2.0)
    assert config.meshes == ((0.05, 0.001), (0.01, 0.0001))
    assert config.parameter is SweepParameter.D
    assert config.cfl_policy is CflPolicy.FAIL
    assert config.output_dir == Path("out/runs")


def test_repeated_key_last_wins():
    """Test later lines override earlier ones."""
    config = parse_config("experiment = oneeq_heterogeneous\nd = 0.1\nd = 0.3\n")

    assert config.d == 0.3


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("experiment = oneeq_heterogeneous\nd 0.5\n", 2),
        ("experiment = oneeq_heterogeneous\n\n\ndx = -0.1\n", 4),
        ("experiment = oneeq_heterogeneous\nsnapshot_count = 2.5\n", 2),
        ("experiment = oneeq_heterogeneous\nshape = maybe\n", 2),
        ("experiment = oneeq_heterogeneous\nmeshes = 0.05\n", 2),
        ("experiment = oneeq_heterogeneous\nd =\n", 2),
        ("variant = fourier\n", 1),
    ],
)
def test_parse_errors_carry_line_number(text, line):
    """Test malformed lines report where they are."""
    with pytest.raises(ParseError) as excinfo:
        parse_config(text)

    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_unknown_key():
    """Test keys outside the grammar."""
    with pytest.raises(UnknownKey, match="'speedup'"):
        parse_config("experiment = oneeq_heterogeneous\nspeedup = 2\n")


def test_unknown_or_missing_experiment():
    """Test builtin names are checked and one is required for a run."""
    with pytest.raises(UnknownExperiment, match="table9"):
        parse_config("experiment = table9\n")
    with pytest.raises(UnknownExperiment, match="names no experiment"):
        parse_config("d = 0.5\n")
    with pytest.raises(UnknownExperiment):
        parse_config("# nothing here\n\n")

    assert parse_config("d = 0.5\n", require_experiment=False).d == 0.5


@pytest.mark.parametrize("name", list(EXPERIMENTS))
def test_builtin_config_round_trip(name):
    """Test rendering a builtin's config and parsing it back reproduces the experiment."""
    config = RunConfig.for_experiment(name)

    parsed = parse_config(render_config(config))

    assert parsed.model_dump() == config.model_dump()
    assert parsed.to_spec().model_dump() == get_experiment(name).model_dump()


def test_to_spec_applies_overrides():
    """Test explicit keys replace the builtin's values."""
    config = parse_config("experiment = oneeq_heterogeneous\nd = 0.25\nt_final = 2\nsnapshot_count = 3\n")

    spec = config.to_spec()

    assert spec.name == "oneeq_heterogeneous"
    assert spec.params.d == 0.25
    assert spec.time.n_steps == 2000
    assert len(spec.time.snapshot_times) == 3
    assert spec.grid.dx == pytest.approx(0.05)


def test_to_spec_variant_change_drops_foreign_fields():
    """Test switching variant discards parameters the new variant cannot take."""
    config = parse_config("experiment = full_homogeneous\nvariant = twoeq\nx_left = 0\nx_right = 2\nx_jump = 1\n")

    spec = config.to_spec()

    assert spec.variant is ModelVariant.TWO_EQ
    assert spec.params.D is None and spec.params.c is None
    assert spec.left_state == (0.0, 1.0)


def test_to_spec_discards_inherited_exact_comparison():
    """Test a homogeneous override silently drops the builtin's exact comparison."""
    spec = parse_config("experiment = oneeq_heterogeneous\nd = 2\n").to_spec()

    assert Analysis.EXACT_COMPARE not in spec.analyses
    assert Analysis.SHAPE in spec.analyses


def test_to_spec_rejects_explicit_exact_comparison_on_homogeneous_run():
    """Test an explicit exact request that cannot be honoured."""
    config = parse_config("experiment = oneeq_heterogeneous\nd = 2\nexact = true\n")

    with pytest.raises(ValidationError, match="exact comparison"):
        config.to_spec()


def test_to_spec_from_variant_only():
    """Test a bare variant starts from that variant's default builtin."""
    spec = parse_config("variant = epsilon\nepsilon = 0.1\n").to_spec()

    assert spec.name == "epsilon_base"
    assert spec.params.epsilon == 0.1


def test_to_spec_uses_default():
    """Test the caller's default when the config names nothing."""
    spec = parse_config("d = 0.25\n", require_experiment=False).to_spec(default="epsilon_base")

    assert spec.variant is ModelVariant.EPSILON_SYSTEM
    assert spec.params.d == 0.25


def test_to_sweep_from_builtin_and_from_keys():
    """Test sweeps from a builtin name and from parameter and values."""
    builtin = parse_config("sweep = r_sweep\n").to_sweep()
    custom = parse_config(
        "experiment = twoeq_homogeneous\nparameter = d\nvalues = 1, 2, 4\n"
    ).to_sweep()

    assert builtin.parameter is SweepParameter.R
    assert builtin.base.name == "r_sweep"
    assert custom.parameter is SweepParameter.D
    assert custom.values == (1.0, 2.0, 4.0)


def test_to_sweep_needs_parameter_and_values():
    """Test an incomplete sweep description."""
    with pytest.raises(InvalidSpec, match="parameter"):
        parse_config("experiment = twoeq_homogeneous\nvalues = 1, 2\n").to_sweep()


def test_study_defaults():
    """Test epsilon values and meshes fall back to the builtin lists."""
    config = parse_config("", require_experiment=False)

    assert config.epsilon_values()[0] == 1.0
    assert config.mesh_list() == ((0.05, 0.001), (0.01, 0.0001))


def test_with_overrides_appends_after_file():
    """Test --set values land after the file so they win."""
    text = with_overrides("experiment = oneeq_heterogeneous\nd = 0.1", ["d=0.3", "dt=0.0005"])

    assert text.splitlines()[-2:] == ["d=0.3", "dt=0.0005"]
    assert parse_config(text).d == 0.3
    assert with_overrides("x = 1\n", []) == "x = 1\n"
