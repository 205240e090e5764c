from .config import AppConfig, LoggingConfig, NumericConfig, SearchConfig, VerifyConfig

__all__ = ["AppConfig", "LoggingConfig", "NumericConfig", "SearchConfig", "VerifyConfig"]
