"""Safe evaluation of the small expression language used in the catalogue file.

Grammar: integers, the variables of the model (``x``, ``y``, ``z``),
``+ - * /``, integer powers (``^`` or ``**``), parentheses and ``sqrt(n)``
for an integer n, which produces an element of Q(sqrt(squarefree(n))).
Floats and every other construct are rejected.  Expressions are walked
through :mod:`ast`, never passed to ``eval``.
"""

from __future__ import annotations

import ast
from fractions import Fraction

from ..arith.fields import QQ, QuadElem, rational_sqrt, squarefree_part
from ..arith.poly import BiPoly, Poly


class ExprError(ValueError):
    pass


class RatFunc:
    """num/den with num, den BiPoly over one ring (no cancellation attempted)."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        if den is None:
            den = BiPoly({(0, 0): 1}, num.ring)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def const(cls, c, ring=QQ) -> RatFunc:
        return cls(BiPoly({(0, 0): c}, ring))

    def _lift(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, BiPoly):
            return RatFunc(o)
        return RatFunc(BiPoly({(0, 0): o}, self.ring))

    def __add__(self, o):
        o = self._lift(o)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def is_polynomial(self) -> bool:
        return self.den.total_degree == 0

    def as_bipoly(self) -> BiPoly:
        if not self.is_polynomial():
            raise ExprError("expression is not a polynomial")
        c = self.den.coeff(0, 0)
        return BiPoly({k: v / c for k, v in self.num.t.items()}, self.ring)

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _sqrt_of(n) -> QuadElem | Fraction:
    n = Fraction(n)
    r = rational_sqrt(n) if n >= 0 else None
    if r is not None:
        return r
    if n.denominator != 1:
        raise ExprError("sqrt of a non-integer")
    d = squarefree_part(int(n))
    m = rational_sqrt(Fraction(int(n), d))
    return QuadElem(0, m, d)


def _eval_node(node, env):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, env)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExprError(f"only integer literals are allowed, got {node.value!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise ExprError(f"unknown name {node.id!r}")
        return env[node.id]
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand, env)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ExprError("unsupported unary operator")
    if isinstance(node, ast.BinOp) and isinstance(node.op, _BINOPS):
        a = _eval_node(node.left, env)
        if isinstance(node.op, ast.Pow):
            e = _eval_node(node.right, env)
            if not isinstance(e, Fraction) or e.denominator != 1:
                raise ExprError("exponents must be integer constants")
            return a ** int(e)
        b = _eval_node(node.right, env)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        return a / b
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt":
        if len(node.args) != 1 or node.keywords:
            raise ExprError("sqrt takes one argument")
        arg = _eval_node(node.args[0], env)
        if not isinstance(arg, Fraction):
            raise ExprError("sqrt argument must be a rational constant")
        return _sqrt_of(arg)
    raise ExprError(f"unsupported syntax: {ast.dump(node)[:60]}")


def _parse(text: str):
    if not isinstance(text, str):
        raise ExprError(f"expected an expression string, got {type(text).__name__}")
    try:
        return ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc.msg}") from None


def eval_constant(text: str):
    """Value of a constant expression: Fraction or QuadElem."""
    return _eval_node(_parse(text), {})


def eval_bivariate(text: str, ring=QQ, names=("x", "y")) -> RatFunc:
    env = {names[0]: RatFunc(BiPoly({(1, 0): 1}, ring))}
    if len(names) > 1:
        env[names[1]] = RatFunc(BiPoly({(0, 1): 1}, ring))
    v = _eval_node(_parse(text), env)
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, QuadElem) and ring == QQ:
        raise ExprError(f"irrational constant in {text!r}")
    return RatFunc.const(v, ring)


def eval_bipoly(text: str, ring=QQ) -> BiPoly:
    return eval_bivariate(text, ring).as_bipoly()


def eval_poly(text: str, var: str = "x") -> Poly:
    b = eval_bivariate(text, QQ, (var,)).as_bipoly()
    if b.degree_in(1) > 0:
        raise ExprError(f"{text!r} is not univariate in {var}")
    n = b.degree_in(0)
    return Poly([b.coeff(i, 0) for i in range(n + 1)], QQ)

