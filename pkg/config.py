import os


def _env_int(name, default):
    return int(os.environ.get(name, default))


def _env_bool(name, default):
    return os.environ.get(name, str(default)).strip().lower() in ("1", "true", "yes", "on")


class Config:
    SQLALCHEMY_DATABASE_URI = os.environ.get("DATABASE_URL", "sqlite:///bettilab.db")
    SQLALCHEMY_TRACK_MODIFICATIONS = False
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

    # Coefficient fields and monomial order
    FIELD_PRIME = _env_int("FIELD_PRIME", 32003)
    CROSS_CHECK_PRIME = _env_int("CROSS_CHECK_PRIME", 65537)
    MONOMIAL_ORDER = os.environ.get("MONOMIAL_ORDER", "degrevlex")

    # Vertex caps for the exponential searches
    MAX_VERTICES = _env_int("MAX_VERTICES", 64)
    PRIMES_VERTEX_CAP = _env_int("PRIMES_VERTEX_CAP", 24)
    BOUNDS_VERTEX_CAP = _env_int("BOUNDS_VERTEX_CAP", 16)

    # Koszul oracle: refuse strands above this many estimated nonzeros
    ORACLE_BUDGET_NNZ = _env_int("ORACLE_BUDGET_NNZ", 200_000_000)

    DEFAULT_SEED = _env_int("DEFAULT_SEED", 20240601)
    DEFAULT_JOBS = _env_int("DEFAULT_JOBS", 1)
    RESULT_CACHE_ENABLED = _env_bool("RESULT_CACHE_ENABLED", True)


class DevConfig(Config):
    DEBUG = True


class ProdConfig(Config):
    DEBUG = False


class TestConfig(Config):
    TESTING = True
    SQLALCHEMY_DATABASE_URI = "sqlite:///:memory:"
    LOG_LEVEL = "WARNING"


config_by_name = {
    "development": DevConfig,
    "production": ProdConfig,
    "testing": TestConfig,
    "default": DevConfig,
}
