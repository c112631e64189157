from typing import Literal, Optional

from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Global settings for the kernel.

    Values are never read from the environment or from files; the CLI derives
    a per-invocation copy with ``settings.model_copy(update=...)``.
    """

    rank_bound: int = Field(64, gt=0)
    threads: int = Field(1, ge=1)
    undefined_terms: Literal["skip", "error", "clamp"] = "skip"
    output_format: Literal["plain", "json", "latex"] = "plain"
    schur_method: Literal["peel", "alternant"] = "peel"
    log_level: str = "WARNING"
    log_dir: Optional[str] = None
    total_warning_n: int = Field(6, ge=1)

    model_config = {"validate_assignment": True}


settings = Settings()
