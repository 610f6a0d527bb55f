from dataclasses import dataclass, replace

from django.conf import settings


@dataclass(frozen=True)
class RunConfig:
    """Flags shared by the long-running commands, defaulting to project settings"""
    jobs: int
    tol: float
    symmetry: bool
    dedup_tol: float
    triangle_separation: float
    oracle_sample_rate: float
    oracle_seed: int
    out: str = None

    @classmethod
    def from_settings(cls, **overrides):
        base = cls(
            jobs=settings.AXISLAB_JOBS,
            tol=settings.AXISLAB_H2_TOLERANCE,
            symmetry=settings.AXISLAB_SEARCH_SYMMETRY,
            dedup_tol=settings.AXISLAB_DEDUP_TOLERANCE,
            triangle_separation=settings.AXISLAB_TRIANGLE_SEPARATION,
            oracle_sample_rate=settings.AXISLAB_ORACLE_SAMPLE_RATE,
            oracle_seed=settings.AXISLAB_ORACLE_SEED,
        )
        return replace(base, **{key: value for key, value in overrides.items() if value is not None})
