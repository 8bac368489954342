import configparser
import logging
import os

from checks.report import CheckConfig
from core.tolerance import DEFAULT_TOLERANCE, TolerancePolicy

SEED_ENV_VAR = "POOLING_LAB_SEED"

logger = logging.getLogger(__name__)


class ConfigManager:
    """配置管理器，负责读取容差、检验与日志配置"""

    def __init__(self, config_source=None):
        """
        初始化配置管理器。

        Args:
            config_source: 配置的来源。
                           可以是配置文件路径 (str)，或配置字典 (dict)。
                           如果为 None，则使用空的配置。
        """
        self.config = configparser.ConfigParser()
        self.config_path = None

        if isinstance(config_source, str):
            self.config_path = config_source
            if os.path.exists(self.config_path):
                self.config.read(self.config_path, encoding='utf-8')
            else:
                logger.debug("config file %s not found, using defaults", self.config_path)
        elif isinstance(config_source, dict):
            # {'SECTION_NAME': {'key': 'value'}}
            self.config.read_dict(config_source)
        elif config_source is None:
            pass
        else:
            raise TypeError("config_source must be a file path (str), a dictionary, or None.")

    def get_tolerance_policy(self, eps_value=None):
        """读取 [TOLERANCE]；eps_value 参数优先于配置文件"""
        if 'TOLERANCE' not in self.config:
            policy = DEFAULT_TOLERANCE
        else:
            section = self.config['TOLERANCE']
            policy = TolerancePolicy(
                eps_simplex=section.getfloat('eps_simplex', fallback=DEFAULT_TOLERANCE.eps_simplex),
                eps_value=section.getfloat('eps_value', fallback=DEFAULT_TOLERANCE.eps_value),
                eps_bisect=section.getfloat('eps_bisect', fallback=DEFAULT_TOLERANCE.eps_bisect),
            )
        if eps_value is not None:
            policy = policy.with_eps_value(eps_value)
        return policy

    def get_seed(self, cli_seed=None):
        """种子优先级：命令行 > 环境变量 POOLING_LAB_SEED > [CHECK] seed > 0"""
        if cli_seed is not None:
            return int(cli_seed)
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed:
            try:
                return int(env_seed)
            except ValueError:
                logger.warning("ignoring non-integer %s=%r", SEED_ENV_VAR, env_seed)
        return self.config.getint('CHECK', 'seed', fallback=0)

    def get_check_config(self, seed=None, trials=None):
        """读取 [CHECK] 并合并命令行覆盖项"""
        defaults = CheckConfig()
        state_sizes = self.config.get('CHECK', 'state_sizes', fallback=None)
        sizes = tuple(int(s) for s in state_sizes.split(',')) if state_sizes else defaults.state_sizes

        return CheckConfig(
            seed=self.get_seed(seed),
            trials=int(trials) if trials is not None else self.config.getint('CHECK', 'trials', fallback=defaults.trials),
            act_range=self.config.getfloat('CHECK', 'act_range', fallback=defaults.act_range),
            h_samples=self.config.getint('CHECK', 'h_samples', fallback=defaults.h_samples),
            state_sizes=sizes,
            show_progress=self.config.getboolean('CHECK', 'show_progress', fallback=defaults.show_progress),
        )

    def get_log_level(self):
        level = self.config.get('LOGGING', 'level', fallback='WARNING').upper()
        return getattr(logging, level, logging.WARNING)

    def get_config(self, section, key, fallback=None):
        """获取指定配置项"""
        return self.config.get(section, key, fallback=fallback)

    def set_config(self, section, key, value):
        """设置指定配置项 (仅内存)"""
        if not self.config.has_section(section):
            self.config.add_section(section)
        self.config.set(section, key, str(value))
