from pydantic_settings import BaseSettings, SettingsConfigDict

VERSION = "0.1.0"

SIZE_CONVENTIONS = ["intervals", "points"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="RIESZ_TAU_")

    threads: int = 1
    dense_cap: int = 4096

    quadrature_tol: float = 1e-10
    quadrature_max_points: int = 2**22
    example4_quadrature_tol: float = 1e-9
    # Example 4 has no manufactured solution; its right-hand side is random
    rhs_seed: int = 0

    pcg_tol: float = 1e-8
    pcg_max_iter: int = 10_000
    # Published tables print "*" beyond 10^3 iterations
    table_max_iter: int = 1000

    lanczos_max_iter: int = 500
    lanczos_tol: float = 1e-8

    banded_bandwidth: int = 8
    singular_tol: float = 1e-14

    size_convention: str = "intervals"


config = Settings()


def interior_points(size: int, convention: str = None) -> int:
    """Map a published grid size (e.g. 2^k) to the number of interior points."""
    convention = convention or config.size_convention
    if convention == "intervals":
        return size - 1
    if convention == "points":
        return size
    raise ValueError(
        f"Unknown size convention: {convention}. Choose from {SIZE_CONVENTIONS}"
    )
