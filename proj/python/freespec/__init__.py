"""Brown measures and spectra of products and sums in free products of 2x2 matrix algebras."""

from ._freespec import (
    DiracInputError,
    DomainError,
    Error,
    InvalidMeasure,
    IoError,
    PreconditionError,
    RadialMeasure,
    ResourceError,
    SingularityError,
    brown_example_64,
    brown_example_65,
    brown_product,
    brown_sum_nilpotents,
    classify,
    decompose,
    decomposed_power_trace,
    ellipse_families_equal,
    haagerup_larsen,
    moments,
    s_transform,
    simulate,
    spectral_radius,
    spectrum_example_66,
    spectrum_product,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
