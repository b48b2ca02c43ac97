from .main import main, run
from .verify import CHECKS, CheckResult, verify_paper

__all__ = ["CHECKS", "CheckResult", "main", "run", "verify_paper"]
