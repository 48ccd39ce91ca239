import logging
import os

from dotenv import load_dotenv

# ============ Configuração ============
# Valores padrão podem ser sobrescritos por variáveis de ambiente ou por um .env
load_dotenv()


class ConfigError(ValueError):
    """Variável BICLUSTER_* com valor que não pode ser interpretado."""


# Valores inválidos caem no padrão e ficam registrados aqui; validate() os reporta
ERRORS: list[str] = []


def _env(name: str, default, parse):
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return parse(raw.strip())
    except ValueError:
        ERRORS.append(f"{name}={raw!r} inválido")
        return default


def _env_flag(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() not in ("0", "false", "no", "off", "")


def _log_level(raw: str) -> str:
    level = raw.upper()
    # getLevelNamesMapping() is 3.11+; it returns a copy of _nameToLevel
    names = logging.getLevelNamesMapping() if hasattr(logging, "getLevelNamesMapping") else logging._nameToLevel
    if level not in names:
        raise ValueError(level)
    return level


def validate():
    if ERRORS:
        raise ConfigError("configuração inválida: " + "; ".join(ERRORS))


# ========= Limites da força bruta =========
# Fmin só é pedido em subgrafos de 6 vértices; o mínimo exato aceita até 8 (oráculo de teste)
FMIN_MAX_VERTICES = _env("BICLUSTER_FMIN_MAX_VERTICES", 6, int)
MINIMUM_MAX_VERTICES = _env("BICLUSTER_MINIMUM_MAX_VERTICES", 8, int)

# ========= Análise de ramificação =========
BRANCHING_BOUND = _env("BICLUSTER_BRANCHING_BOUND", 3.116, float)
BRANCHING_SLACK = _env("BICLUSTER_BRANCHING_SLACK", 1e-6, float)
ROOT_TOLERANCE = _env("BICLUSTER_ROOT_TOLERANCE", 1e-9, float)

# ========= Solver / logs =========
CHECK_BASE_CASE = _env_flag("BICLUSTER_CHECK_BASE_CASE", True)
LOG_LEVEL = _env("BICLUSTER_LOG_LEVEL", "WARNING", _log_level)
