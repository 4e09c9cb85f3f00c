from pydantic import BaseSettings


class Settings(BaseSettings):
    PROJECT_NAME: str = "fvscaling"
    PROJECT_VERSION: str = "0.1.0"
    log_level: str = "INFO"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    max_iters: int = 100
    reference_cells: int = 1000
    reference_cfl: float = 0.9
    reference_projection: str = "sample"
    traffic_delta: float = 1e-6
    csv_float_format: str = "%.9g"
    golden_dir: str = "./golden"

    class Config:
        env_file = ".env"
        env_prefix = "FVSCALING_"


settings = Settings()
