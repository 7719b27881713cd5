# utils/run_config.py - 运行参数（默认值 < 配置文件 < 命令行）

from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from dotenv import dotenv_values

try:
    from config import (
        BATTERY_CHOICES, DEFAULT_D0, DEFAULT_ELL, DEFAULT_JOBS, DEFAULT_M, DEFAULT_MODE,
        DEFAULT_MODES, DEFAULT_N, DEFAULT_PARITY, DEFAULT_Q0, DEFAULT_SEED, SERRE_MODE_BOUND
    )
except ImportError:
    import sys
    project_root = Path(__file__).resolve().parents[1]
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))
    from config import (
        BATTERY_CHOICES, DEFAULT_D0, DEFAULT_ELL, DEFAULT_JOBS, DEFAULT_M, DEFAULT_MODE,
        DEFAULT_MODES, DEFAULT_N, DEFAULT_PARITY, DEFAULT_Q0, DEFAULT_SEED, SERRE_MODE_BOUND
    )
from modules.superdata import ParityData, parse_parity, standard_parity

MODE_CHOICES = ("symbolic", "numeric", "both")
ZETA_CHOICES = ("derived", "formal")


class ConfigError(ValueError):
    """参数错误（命令行退出码 2）"""


@dataclass
class RunConfig:
    """一次运行的全部参数"""
    m: int = DEFAULT_M
    n: int = DEFAULT_N
    ell: int = DEFAULT_ELL
    modes: int = DEFAULT_MODES
    parity: str = DEFAULT_PARITY
    mode: str = DEFAULT_MODE
    q0: Fraction = Fraction(DEFAULT_Q0)
    d0: Fraction = Fraction(DEFAULT_D0)
    seed: int = DEFAULT_SEED
    jobs: int = DEFAULT_JOBS
    out: Optional[str] = None
    serre_modes: int = SERRE_MODE_BOUND
    battery: str = "default"
    zeta: str = "derived"
    warnings: List[str] = field(default_factory=list)

    @property
    def kappa(self) -> int:
        return self.m + self.n

    def parity_data(self) -> ParityData:
        if self.parity == "standard":
            return standard_parity(self.m, self.n)
        return parse_parity(self.parity)

    def to_dict(self) -> dict:
        return {f.name: (str(getattr(self, f.name)) if isinstance(getattr(self, f.name), Fraction)
                         else getattr(self, f.name))
                for f in fields(self) if f.name != "warnings"}


_INT_FIELDS = ("m", "n", "ell", "modes", "seed", "jobs", "serre_modes")
_FRACTION_FIELDS = ("q0", "d0")
_FIELD_NAMES = tuple(f.name for f in fields(RunConfig) if f.name != "warnings")


def _coerce(name: str, value):
    if value is None:
        return None
    try:
        if name in _INT_FIELDS:
            return int(value)
        if name in _FRACTION_FIELDS:
            return Fraction(str(value))
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(f"参数 {name} 的取值无效: {value!r}")
    return str(value)


def read_config_file(path: str) -> Dict[str, object]:
    """
    读取 key = value 形式的配置文件

    Raises:
        ConfigError: 文件不存在或包含未知键
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise ConfigError(f"配置文件不存在: {path}")
    raw = dotenv_values(file_path)
    unknown = sorted(k for k in raw if k not in _FIELD_NAMES)
    if unknown:
        raise ConfigError(f"配置文件中有未知的键: {', '.join(unknown)}")
    return {k: _coerce(k, v) for k, v in raw.items() if v is not None and v != ""}


def load_run_config(flags: Dict[str, object] = None, config_path: str = None) -> RunConfig:
    """
    合并参数：命令行 > 配置文件 > config.py 默认值，并校验

    Args:
        flags: 命令行给出的参数（值为 None 表示未给出）
        config_path: 配置文件路径（可选）
    """
    merged: Dict[str, object] = {}
    if config_path:
        merged.update(read_config_file(config_path))
    for name, value in (flags or {}).items():
        if name in _FIELD_NAMES and value is not None:
            merged[name] = _coerce(name, value)
    explicit = set(merged)
    config = RunConfig(**merged)
    validate(config, explicit)
    return config


def validate(config: RunConfig, explicit=frozenset()):
    """校验参数；不满足等价区间 ℓ < κ-2 时只记录警告"""
    if config.parity != "standard":
        try:
            pd = parse_parity(config.parity)
        except ValueError as e:
            raise ConfigError(str(e))
        if "m" not in explicit and "n" not in explicit:
            config.m, config.n = pd.m, pd.n
        elif (pd.m, pd.n) != (config.m, config.n):
            raise ConfigError(f"奇偶序列 {config.parity} 与 (m, n)=({config.m}, {config.n}) 不符")
    if config.m < 0 or config.n < 0:
        raise ConfigError("m, n 必须非负")
    if config.ell < 1:
        raise ConfigError(f"ℓ 必须 ≥ 1: {config.ell}")
    if config.modes < 0:
        raise ConfigError(f"模式界 R 必须非负: {config.modes}")
    if config.serre_modes < 0:
        raise ConfigError(f"Serre 模式界必须非负: {config.serre_modes}")
    if config.jobs < 1:
        raise ConfigError(f"jobs 必须 ≥ 1: {config.jobs}")
    if config.mode not in MODE_CHOICES:
        raise ConfigError(f"mode 必须是 {MODE_CHOICES} 之一: {config.mode}")
    if config.battery not in BATTERY_CHOICES:
        raise ConfigError(f"battery 必须是 {BATTERY_CHOICES} 之一: {config.battery}")
    if config.zeta not in ZETA_CHOICES:
        raise ConfigError(f"zeta 必须是 {ZETA_CHOICES} 之一: {config.zeta}")
    for name in _FRACTION_FIELDS:
        value = getattr(config, name)
        if value == 0 or (name == "q0" and abs(value) == 1):
            raise ConfigError(f"特化点 {name}={value} 不可用")
    if config.ell >= config.kappa - 2:
        config.warnings.append(
            f"ℓ={config.ell} ≥ κ-2={config.kappa - 2}：函子不在等价区间内，结果仍然有效"
        )
    return config


def require_distinct_ranks(config: RunConfig, suite: str):
    """
    ζ = q₁^{n-m} 与函子空间只在 m ≠ n 时有定义

    finite 套件不涉及 ζ；daha 套件在 zeta=formal 时不涉及。
    """
    if config.m != config.n or suite == "finite" or (suite == "daha" and config.zeta == "formal"):
        return
    raise ConfigError(f"{suite} 要求 m ≠ n (m=n={config.m})")
