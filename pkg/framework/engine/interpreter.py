from appspec.ast_nodes import (
    Assign, Binary, BoolLit, Disable, Enable, If, IntLit, Log, RandBool, Unary, VarRef,
)
from appspec.checker import INT_MAX, INT_MIN


class ExecutionFault(ValueError):
    """A handler hit integer overflow or division by zero."""

    def __init__(self, message, sid):
        self.sid = sid
        super().__init__(message)


def _checked(value, sid):
    if not INT_MIN <= value <= INT_MAX:
        raise ExecutionFault(f"integer overflow ({value})", sid)
    return value


def _divide(left, right, sid):
    if right == 0:
        raise ExecutionFault("division by zero", sid)
    quotient = abs(left) // abs(right)
    # truncate toward zero
    if (left < 0) != (right < 0):
        quotient = -quotient
    return _checked(quotient, sid)


class HandlerRun:
    """
    Executes one handler body against a mutable copy of the valuation and
    the enabled set. Covered statement ids are added to `covered` as soon as
    each statement starts, so statements before a fault stay covered.
    """

    def __init__(self, values, enabled, rng, covered, messages=None):
        self.values = values
        self.enabled = enabled
        self.rng = rng
        self.covered = covered
        self.messages = messages if messages is not None else []

    def run(self, body):
        for stmt in body:
            self.covered.add(stmt.sid)
            if isinstance(stmt, Assign):
                self.values[stmt.var] = self.evaluate(stmt.expr, stmt.sid)
            elif isinstance(stmt, If):
                if self.evaluate(stmt.cond, stmt.sid):
                    self.run(stmt.then_body)
                else:
                    self.run(stmt.else_body)
            elif isinstance(stmt, Enable):
                self.enabled.add(stmt.event)
            elif isinstance(stmt, Disable):
                self.enabled.discard(stmt.event)
            elif isinstance(stmt, Log):
                self.messages.append(stmt.message)

    def evaluate(self, expr, sid):
        if isinstance(expr, (IntLit, BoolLit)):
            return expr.value
        if isinstance(expr, VarRef):
            return self.values[expr.name]
        if isinstance(expr, RandBool):
            return bool(self.rng.integers(2))
        if isinstance(expr, Unary):
            operand = self.evaluate(expr.operand, sid)
            if expr.op == "!":
                return not operand
            return _checked(-operand, sid)
        if isinstance(expr, Binary):
            op = expr.op
            # && and || short-circuit, which fixes the order rand_bool() draws happen in
            if op == "&&":
                return self.evaluate(expr.left, sid) and self.evaluate(expr.right, sid)
            if op == "||":
                return self.evaluate(expr.left, sid) or self.evaluate(expr.right, sid)
            left = self.evaluate(expr.left, sid)
            right = self.evaluate(expr.right, sid)
            if op == "+":
                return _checked(left + right, sid)
            if op == "-":
                return _checked(left - right, sid)
            if op == "*":
                return _checked(left * right, sid)
            if op == "/":
                return _divide(left, right, sid)
            if op == "==":
                return left == right
            if op == "!=":
                return left != right
            if op == "<":
                return left < right
            if op == "<=":
                return left <= right
            if op == ">":
                return left > right
            if op == ">=":
                return left >= right
        raise TypeError(f"unexpected expression node {expr!r}")
