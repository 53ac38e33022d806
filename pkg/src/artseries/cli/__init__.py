"""Expression parser, evaluator, REPL and batch runner."""
from .evaluator import Evaluator, SessionConfig
from .main import main, run_batch, run_repl
from .syntax import parse, parse_program, pretty

__all__ = ["Evaluator", "SessionConfig", "main", "parse", "parse_program", "pretty", "run_batch", "run_repl"]
