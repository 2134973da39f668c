from appspec.ast_nodes import (
    Assign, Binary, BoolLit, Disable, Enable, If, IntLit, Log, RandBool,
    Unary, VarRef, BOOL_TYPE, INT_TYPE,
)
from appspec.errors import DuplicateDeclaration, TypeMismatch, UnknownEventTarget, UnknownIdentifier

INT_MIN = -(2 ** 63)
INT_MAX = 2 ** 63 - 1

ARITHMETIC = {"+", "-", "*", "/"}
ORDERING = {"<", "<=", ">", ">="}
EQUALITY = {"==", "!="}
CONNECTIVES = {"&&", "||"}


class Checker:
    """Name resolution, uniqueness and type checking of a parsed AppSpec."""

    def __init__(self, app, source_name="<string>"):
        self.app = app
        self.source_name = source_name
        self.var_types = {}
        self.events = set()

    def _mismatch(self, message, pos):
        raise TypeMismatch(message, pos[0], pos[1], self.source_name)

    def check(self):
        seen = set()
        for decl in self.app.variables:
            if decl.name in seen:
                raise DuplicateDeclaration(decl.name, *decl.pos, self.source_name)
            seen.add(decl.name)
            self.var_types[decl.name] = decl.type
            literal_type = BOOL_TYPE if isinstance(decl.initial, bool) else INT_TYPE
            if literal_type != decl.type:
                self._mismatch(f"initial value of {decl.name!r} is {literal_type}, declared {decl.type}", decl.pos)
            if decl.type == INT_TYPE and not INT_MIN <= decl.initial <= INT_MAX:
                self._mismatch(f"initial value of {decl.name!r} does not fit in 64 bits", decl.pos)
        for decl in self.app.events:
            if decl.name in seen:
                raise DuplicateDeclaration(decl.name, *decl.pos, self.source_name)
            seen.add(decl.name)
            self.events.add(decl.name)
        for decl in self.app.events:
            self._body(decl.body)

    def _body(self, body):
        for stmt in body:
            self._statement(stmt)

    def _statement(self, stmt):
        if isinstance(stmt, Assign):
            if stmt.var not in self.var_types:
                raise UnknownIdentifier(stmt.var, *stmt.sid, self.source_name)
            rhs = self._expr(stmt.expr)
            if rhs != self.var_types[stmt.var]:
                self._mismatch(f"cannot assign {rhs} to {self.var_types[stmt.var]} variable {stmt.var!r}", stmt.sid)
        elif isinstance(stmt, If):
            if self._expr(stmt.cond) != BOOL_TYPE:
                self._mismatch("if condition must be bool", stmt.sid)
            self._body(stmt.then_body)
            self._body(stmt.else_body)
        elif isinstance(stmt, (Enable, Disable)):
            if stmt.event not in self.events:
                raise UnknownEventTarget(stmt.event, *stmt.sid, self.source_name)
        elif not isinstance(stmt, Log):
            raise TypeError(f"unexpected statement node {stmt!r}")

    def _expr(self, expr):
        if isinstance(expr, BoolLit) or isinstance(expr, RandBool):
            return BOOL_TYPE
        if isinstance(expr, IntLit):
            if not INT_MIN <= expr.value <= INT_MAX:
                self._mismatch("integer literal does not fit in 64 bits", expr.pos)
            return INT_TYPE
        if isinstance(expr, VarRef):
            if expr.name not in self.var_types:
                raise UnknownIdentifier(expr.name, *expr.pos, self.source_name)
            return self.var_types[expr.name]
        if isinstance(expr, Unary):
            operand = self._expr(expr.operand)
            wanted = BOOL_TYPE if expr.op == "!" else INT_TYPE
            if operand != wanted:
                self._mismatch(f"operator {expr.op!r} needs {wanted}, got {operand}", expr.pos)
            return wanted
        if isinstance(expr, Binary):
            left, right = self._expr(expr.left), self._expr(expr.right)
            if expr.op in ARITHMETIC or expr.op in ORDERING:
                if left != INT_TYPE or right != INT_TYPE:
                    self._mismatch(f"operator {expr.op!r} needs int operands", expr.pos)
                return INT_TYPE if expr.op in ARITHMETIC else BOOL_TYPE
            if expr.op in CONNECTIVES:
                if left != BOOL_TYPE or right != BOOL_TYPE:
                    self._mismatch(f"operator {expr.op!r} needs bool operands", expr.pos)
                return BOOL_TYPE
            if expr.op in EQUALITY:
                if left != right:
                    self._mismatch(f"cannot compare {left} with {right}", expr.pos)
                return BOOL_TYPE
        raise TypeError(f"unexpected expression node {expr!r}")


def check_app(app, source_name="<string>"):
    Checker(app, source_name).check()
    return app
