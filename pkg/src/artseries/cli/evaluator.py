"""Evaluate parsed statements against the library."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .. import calculus, power, profinite, scalar, series as ser
from .. import symmetric as sym
from ..compose import associativity_defect, comp_inverse, compose, lagrange_coefficient
from ..config import DEFAULT_WINDOW, tolerance
from ..errors import SeriesError
from ..serialize import load_path
from .syntax import Assign, BinOp, Call, Imag, Name, Neg, Num, Pow, Str

REPEATED_MUL_LIMIT = 8


class EvaluationError(SeriesError):
    """Unknown names, wrong argument counts or kinds."""


@dataclass
class SessionConfig:
    orientation: ser.Orientation = ser.NOETHERIAN
    window: Fraction = DEFAULT_WINDOW
    tol: float = 1e-9
    exponents: str = "Q"
    nvars: int = 3
    cutoff: Fraction = Fraction(5)
    bound: int = 24

    def __post_init__(self):
        self.orientation = ser.Orientation.coerce(self.orientation)
        self.window = scalar.exponent(self.window)
        self.cutoff = scalar.exponent(self.cutoff)
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise ValueError("tolerance must be a positive finite number")
        if self.exponents not in ("Q", "N"):
            raise ValueError("exponents must be Q or N")

    @property
    def bound_value(self) -> Fraction:
        # Noetherian windows sit above the data, Artinian ones below.
        if self.orientation is ser.NOETHERIAN:
            return self.window
        return -self.window


def is_scalar(v) -> bool:
    return isinstance(v, (Fraction, complex, int)) and not isinstance(v, bool)


# the spellings format_value uses, so printed results can be read back
CONSTANTS = {"true": True, "false": False, "none": None}


@dataclass
class Evaluator:
    config: SessionConfig = field(default_factory=SessionConfig)
    env: dict = field(default_factory=dict)

    def __post_init__(self):
        self.functions: dict[str, Callable] = {
            "inv": self.f_inv,
            "D": self.f_derivative,
            "compose": self.f_compose,
            "compinv": self.f_compinv,
            "lagrange": self.f_lagrange,
            "dual": self.f_dual,
            "coeff": self.f_coeff,
            "deg": self.f_deg,
            "trunc": self.f_trunc,
            "pow": self.f_pow,
            "cpow": self.f_cpow,
            "arg": self.f_arg,
            "defect": self.f_defect,
            "load": self.f_load,
            "eq": self.f_eq,
            "check": self.f_check,
            "m": self.f_monomial,
            "e": self.f_generator("e"),
            "h": self.f_generator("h"),
            "p": self.f_generator("p"),
            "ebasis": self.f_basis("e"),
            "hbasis": self.f_basis("h"),
            "pbasis": self.f_basis("p"),
            "omega": self.f_omega,
            "triangular": self.f_triangular,
            "embed": self.f_embed,
            "factsum": self.f_factsum,
            "integral": self.f_integral,
        }

    # -- statements ---------------------------------------------------------------

    def run(self, node):
        """Evaluate a statement; assignments bind and return the value."""
        with tolerance(self.config.tol):
            if isinstance(node, Assign):
                value = self.eval(node.value)
                self.env[node.name] = value
                return value
            return self.eval(node)

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Imag):
            return complex(0, node.value)
        if isinstance(node, Str):
            return node.value
        if isinstance(node, Name):
            return self.lookup(node.id)
        if isinstance(node, Neg):
            return self.negate(self.eval(node.operand))
        if isinstance(node, BinOp):
            return self.binop(node.op, self.eval(node.left), self.eval(node.right))
        if isinstance(node, Pow):
            return self.power(self.eval(node.base), node.exponent, node.branch)
        if isinstance(node, Call):
            fn = self.functions.get(node.func)
            if fn is None:
                raise EvaluationError(f"unknown function {node.func!r}")
            args = [self.eval(a) for a in node.args]
            return fn(args, node.branch)
        raise EvaluationError(f"cannot evaluate {node!r}")

    def lookup(self, name: str):
        if name in self.env:
            return self.env[name]
        if name in CONSTANTS:
            return CONSTANTS[name]
        if name == "x":
            return ser.monomial(1, 1, self.config.bound_value, self.config.orientation)
        raise EvaluationError(f"unbound name {name!r}")

    # -- arithmetic -----------------------------------------------------------------

    def negate(self, v):
        if is_scalar(v):
            return -v
        if isinstance(v, (ser.Series, sym.SymSeries, profinite.Pseudointeger)):
            return -v
        raise EvaluationError(f"cannot negate {type(v).__name__}")

    def _lift(self, v, like):
        # Scalars meet a value of another kind: embed where that makes sense.
        if isinstance(like, profinite.Pseudointeger):
            if isinstance(v, Fraction) and v.denominator == 1:
                return profinite.embed(int(v), like.bound)
            raise EvaluationError("only integers combine with pseudointegers")
        if isinstance(v, Fraction):
            return complex(v)
        return v

    def binop(self, op: str, a, b):
        if is_scalar(a) and is_scalar(b):
            if op == "/" and b == 0:
                raise EvaluationError("division by zero")
            return {"+": lambda: a + b, "-": lambda: a - b,
                    "*": lambda: a * b, "/": lambda: a / b}[op]()
        if is_scalar(a):
            a = self._lift(a, b)
        if is_scalar(b):
            b = self._lift(b, a)
        if op == "/":
            if isinstance(b, ser.Series):
                b = ser.invert(b, self.config.exponents)
                op = "*"
            elif isinstance(b, sym.SymSeries):
                b = sym.sym_invert(b)
                op = "*"
            elif isinstance(b, complex):
                if b == 0:
                    raise EvaluationError("division by zero")
                b = 1 / b
                op = "*"
        try:
            result = {"+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b}[op]()
        except TypeError:
            result = NotImplemented
        if result is NotImplemented:
            raise EvaluationError(
                f"unsupported operands for {op}: {type(a).__name__}, {type(b).__name__}"
            )
        return result

    def power(self, base, t: Fraction, branch):
        n = 0 if branch is None else branch
        if is_scalar(base):
            if isinstance(base, Fraction) and t.denominator == 1 and n == 0:
                if base == 0 and t <= 0:
                    return scalar.cpow(0, t, 0)
                return base ** int(t)
            return scalar.cpow(complex(base), t, n)
        if isinstance(base, ser.Series):
            # Integer powers agree on every branch.
            if t.denominator == 1 and 0 <= t <= REPEATED_MUL_LIMIT:
                result = base.constant_like(1)
                for _ in range(int(t)):
                    result = ser.mul(result, base)
                return result
            if t < 0 and self.config.exponents == "N":
                ser.invert(base, "N")
            return power.pow(base, t, n)
        if isinstance(base, sym.SymSeries) and t.denominator == 1 and t >= 0 and n == 0:
            result = sym.constant(1, base.nvars, base.cutoff)
            for _ in range(int(t)):
                result = sym.sym_mul(result, base)
            return result
        if isinstance(base, profinite.Pseudointeger) and t.denominator == 1 and t >= 0:
            result = profinite.embed(1, base.bound)
            for _ in range(int(t)):
                result = result * base
            return result
        raise EvaluationError(f"cannot raise {type(base).__name__} to {t}")

    # -- argument helpers -------------------------------------------------------------

    @staticmethod
    def _arity(name: str, args, *counts):
        if len(args) not in counts:
            raise EvaluationError(f"{name} takes {' or '.join(map(str, counts))} arguments")

    def _series(self, name: str, v) -> ser.Series:
        if isinstance(v, ser.Series):
            return v
        if is_scalar(v):
            return ser.constant(complex(v), self.config.bound_value, self.config.orientation)
        raise EvaluationError(f"{name} needs a series, got {type(v).__name__}")

    @staticmethod
    def _rational(name: str, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, complex) and v.imag == 0 and float(v.real).is_integer():
            return Fraction(int(v.real))
        raise EvaluationError(f"{name} needs an exact rational, got {v!r}")

    def _integer(self, name: str, v) -> int:
        q = self._rational(name, v)
        if q.denominator != 1:
            raise EvaluationError(f"{name} needs an integer, got {q}")
        return int(q)

    # -- series functions ---------------------------------------------------------

    def f_inv(self, args, branch):
        self._arity("inv", args, 1)
        (v,) = args
        if isinstance(v, sym.SymSeries):
            return sym.sym_invert(v)
        if is_scalar(v):
            return self.binop("/", Fraction(1), v)
        return ser.invert(self._series("inv", v), self.config.exponents)

    def f_derivative(self, args, branch):
        self._arity("D", args, 1)
        return calculus.derivative(self._series("D", args[0]))

    def f_compose(self, args, branch):
        self._arity("compose", args, 2)
        f, g = (self._series("compose", v) for v in args)
        return compose(f, g, branch or 0)

    def f_compinv(self, args, branch):
        self._arity("compinv", args, 1)
        return comp_inverse(self._series("compinv", args[0]), branch or 0)

    def f_lagrange(self, args, branch):
        self._arity("lagrange", args, 3)
        f = self._series("lagrange", args[0])
        return lagrange_coefficient(
            f, self._rational("lagrange", args[1]), self._rational("lagrange", args[2])
        )

    def f_dual(self, args, branch):
        self._arity("dual", args, 1)
        return ser.dualize(self._series("dual", args[0]))

    def f_coeff(self, args, branch):
        self._arity("coeff", args, 2)
        return ser.coefficient_at(self._series("coeff", args[0]), self._rational("coeff", args[1]))

    def f_deg(self, args, branch):
        self._arity("deg", args, 1)
        d = ser.degree(self._series("deg", args[0]))
        return d if isinstance(d, Fraction) else complex(d)

    def f_trunc(self, args, branch):
        self._arity("trunc", args, 2)
        return ser.truncate(self._series("trunc", args[0]), self._rational("trunc", args[1]))

    def f_pow(self, args, branch):
        self._arity("pow", args, 2)
        return power.pow(self._series("pow", args[0]), self._rational("pow", args[1]), branch or 0)

    def f_cpow(self, args, branch):
        self._arity("cpow", args, 2)
        return scalar.cpow(complex(args[0]), self._rational("cpow", args[1]), branch or 0)

    def f_arg(self, args, branch):
        self._arity("arg", args, 1)
        (v,) = args
        if is_scalar(v):
            return complex(scalar.arg(complex(v)))
        return complex(power.arg_of(self._series("arg", v)))

    def f_defect(self, args, branch):
        self._arity("defect", args, 3)
        f, g, h = (self._series("defect", v) for v in args)
        return associativity_defect(f, g, h, 1 if branch is None else branch)

    def f_load(self, args, branch):
        self._arity("load", args, 1)
        if not isinstance(args[0], str):
            raise EvaluationError("load needs a quoted path")
        try:
            return load_path(args[0])
        except OSError as exc:
            raise EvaluationError(f"cannot read {args[0]!r}: {exc.strerror}") from None

    def f_eq(self, args, branch):
        self._arity("eq", args, 2)
        a, b = args
        if isinstance(a, ser.Series) or isinstance(b, ser.Series):
            return ser.approx_eq(self._series("eq", a), self._series("eq", b))
        if isinstance(a, sym.SymSeries) and isinstance(b, sym.SymSeries):
            return sym.sym_approx_eq(a, b)
        if isinstance(a, profinite.Pseudointeger) or isinstance(b, profinite.Pseudointeger):
            return a == b
        if a is None or b is None or isinstance(a, bool) or isinstance(b, bool):
            return a == b
        return abs(complex(a) - complex(b)) <= self.config.tol

    def f_check(self, args, branch):
        """``check(value)`` fails the statement unless ``value`` is true."""
        self._arity("check", args, 1)
        if args[0] is not True:
            raise EvaluationError(f"check failed: got {args[0]!r}")
        return True

    # -- symmetric functions ------------------------------------------------------

    def _parts(self, name, args):
        return [self._rational(name, a) for a in args]

    def f_monomial(self, args, branch):
        return sym.monomial(self._parts("m", args), self.config.nvars, self.config.cutoff)

    def f_generator(self, family: str):
        def fn(args, branch):
            self._arity(family, args, 1)
            k = self._integer(family, args[0])
            return sym.generator(family, k, self.config.nvars, self.config.cutoff)

        return fn

    def f_basis(self, family: str):
        def fn(args, branch):
            beta = self._parts(f"{family}basis", args)
            return sym.basis_product(
                family, beta, branch or 0, self.config.nvars, self.config.cutoff
            )

        return fn

    def f_omega(self, args, branch):
        self._arity("omega", args, 1)
        if not isinstance(args[0], sym.SymSeries):
            raise EvaluationError("omega needs a symmetric series")
        return sym.omega(args[0])

    def f_triangular(self, args, branch):
        if not args or args[0] not in sym.FAMILIES:
            raise EvaluationError('triangular needs a family "e", "h" or "p" first')
        beta = self._parts("triangular", args[1:])
        nvars = max(self.config.nvars, len(beta))
        return sym.triangularity_check(args[0], beta, nvars, sym.weight(beta) + 1)

    # -- pseudointegers --------------------------------------------------------------

    def f_embed(self, args, branch):
        self._arity("embed", args, 1)
        return profinite.embed(self._integer("embed", args[0]), self.config.bound)

    def f_factsum(self, args, branch):
        self._arity("factsum", args, 0)
        return profinite.factorial_sum_element(self.config.bound)

    def f_integral(self, args, branch):
        self._arity("integral", args, 1)
        if not isinstance(args[0], profinite.Pseudointeger):
            raise EvaluationError("integral needs a pseudointeger")
        k = profinite.is_integral(args[0])
        return None if k is None else Fraction(k)


def format_value(v, digits: int = 12) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return ser.format_number(v, digits)
    return str(v)
