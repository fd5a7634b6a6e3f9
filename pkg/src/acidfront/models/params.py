"""Model parameter sets for every variant."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .enums import ModelVariant


class ModelParams(BaseModel):
    """
    Parameters {d, r, D, c, epsilon} tagged with the model variant.

    D and c belong to the full model only, epsilon to the relaxed system only.
    The two-equation reduction is rescaled so that D is normalised away, and
    setting D there is rejected rather than silently ignored.
    """

    model_config = ConfigDict(frozen=True)

    variant: ModelVariant = Field(description="Model variant")
    d: float = Field(description="Healthy-cell death rate due to acid", ge=0)
    r: float = Field(default=1.0, description="Tumour growth rate", ge=0)
    D: float | None = Field(
        default=None,
        description="Tumour diffusion constant (full model only)",
        ge=0,
    )
    c: float | None = Field(
        default=None,
        description="Acid production/reabsorption rate (full model only)",
        gt=0,
    )
    epsilon: float | None = Field(
        default=None,
        description="Relaxation time of the healthy-cell equation (epsilon system only)",
        gt=0,
    )

    @model_validator(mode="after")
    def check_variant_fields(self) -> "ModelParams":
        if self.variant is ModelVariant.FULL_MODEL:
            if self.D is None or self.c is None:
                raise ValueError("full model requires both D and c")
        elif self.D is not None:
            raise ValueError(f"D is normalised in the {self.variant.value} model and must not be set")
        if self.variant is ModelVariant.EPSILON_SYSTEM and self.epsilon is None:
            raise ValueError("epsilon system requires epsilon")
        return self

    @property
    def diffusion(self) -> float:
        """Tumour diffusion multiplier of the implicit bracket."""
        return self.D if self.D is not None else 1.0

    @property
    def heterogeneous(self) -> bool:
        """True in the coexistence regime d < 1."""
        return self.d < 1.0

    def with_value(self, name: str, value: float) -> "ModelParams":
        """Copy with one parameter replaced (validated)."""
        return ModelParams.model_validate({**self.model_dump(), name: value})
