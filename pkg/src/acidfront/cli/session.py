"""Config loading and error-to-exit-code mapping shared by the commands."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import ValidationError

from ..config import get_settings
from ..errors import AcidFrontError, IoError, NumericalError
from ..files import RunConfig, parse_config, with_overrides
from ..models import CflPolicy
from .display import display_error, failure_line

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2


def load_config(
    config_file: Path | None, overrides: list[str] | None, *, require_experiment: bool
) -> RunConfig:
    """
    Read the config file (if any) and append --set overrides.

    Raises:
        IoError: If the file cannot be read
        InputError: If the text does not parse
    """
    text = ""
    if config_file is not None:
        try:
            text = config_file.read_text(encoding="utf-8")
        except OSError as e:
            raise IoError(str(config_file), e.strerror or str(e)) from e
    return parse_config(with_overrides(text, overrides or []), require_experiment=require_experiment)


def output_root(config: RunConfig) -> Path:
    return config.output_dir if config.output_dir is not None else get_settings().output_dir


def cfl_policy(config: RunConfig) -> CflPolicy:
    return config.cfl_policy if config.cfl_policy is not None else get_settings().cfl_policy


def _unwrap(error: BaseException) -> BaseException:
    """The library error a pydantic ValidationError wraps, if any."""
    if isinstance(error, ValidationError):
        for detail in error.errors():
            original = detail.get("ctx", {}).get("error")
            if isinstance(original, BaseException):
                return original
    return error


def _message(error: BaseException) -> str:
    notes = getattr(error, "__notes__", [])
    return "; ".join([str(error), *notes])


@contextmanager
def guarded() -> Iterator[None]:
    """
    Map library failures to exit codes.

    Numerical failures exit with 2, everything else the library raises
    (validation, parsing, I/O) with 1. One machine-parsable line goes to
    standard error.
    """
    try:
        yield
    except (AcidFrontError, ValidationError) as e:
        original = _unwrap(e)
        code = EXIT_NUMERICAL if isinstance(original, NumericalError) else EXIT_INPUT
        display_error(f"{type(original).__name__}: {original}")
        failure_line(type(original).__name__, _message(original))
        raise typer.Exit(code) from None
