from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple, Union

# (line, column) of the first token of a statement
StmtId = Tuple[int, int]

INT_TYPE = "int"
BOOL_TYPE = "bool"


def format_stmt_id(sid: StmtId) -> str:
    return f"{sid[0]}:{sid[1]}"


# Expressions. Positions are kept for diagnostics only and never take part
# in structural equality.

@dataclass(frozen=True)
class IntLit:
    value: int
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BoolLit:
    value: bool
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class VarRef:
    name: str
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class RandBool:
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


Expr = Union[IntLit, BoolLit, VarRef, RandBool, Unary, Binary]


# Statements. Every statement is a coverable unit identified by its sid.

@dataclass(frozen=True)
class Assign:
    var: str
    expr: Expr
    sid: StmtId = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class If:
    cond: Expr
    then_body: Tuple["Stmt", ...]
    else_body: Tuple["Stmt", ...] = ()
    sid: StmtId = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Enable:
    event: str
    sid: StmtId = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Disable:
    event: str
    sid: StmtId = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Log:
    message: str
    sid: StmtId = field(default=(0, 0), compare=False)


Stmt = Union[Assign, If, Enable, Disable, Log]


@dataclass(frozen=True)
class VarDecl:
    name: str
    type: str
    initial: Union[int, bool]
    implicit: bool = False
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class EventDecl:
    name: str
    initially_enabled: bool
    body: Tuple[Stmt, ...] = ()
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


def iter_statements(body) -> Iterator[Stmt]:
    """Pre-order walk: an If comes before the statements of its branches."""
    for stmt in body:
        yield stmt
        if isinstance(stmt, If):
            yield from iter_statements(stmt.then_body)
            yield from iter_statements(stmt.else_body)


def iter_subexpressions(expr: Expr) -> Iterator[Expr]:
    yield expr
    if isinstance(expr, Unary):
        yield from iter_subexpressions(expr.operand)
    elif isinstance(expr, Binary):
        yield from iter_subexpressions(expr.left)
        yield from iter_subexpressions(expr.right)


def variables_read(expr: Expr) -> set:
    return {node.name for node in iter_subexpressions(expr) if isinstance(node, VarRef)}


def uses_rand_bool(expr: Expr) -> bool:
    return any(isinstance(node, RandBool) for node in iter_subexpressions(expr))


@dataclass(frozen=True)
class AppSpec:
    name: str
    variables: Tuple[VarDecl, ...] = ()
    events: Tuple[EventDecl, ...] = ()

    @property
    def variable_names(self):
        return tuple(v.name for v in self.variables)

    @property
    def event_names(self):
        return tuple(e.name for e in self.events)

    def variable(self, name) -> Optional[VarDecl]:
        for decl in self.variables:
            if decl.name == name:
                return decl
        return None

    def event(self, name) -> Optional[EventDecl]:
        for decl in self.events:
            if decl.name == name:
                return decl
        return None

    def statements(self) -> Iterator[Tuple[str, Stmt]]:
        """(event name, statement) pairs in source order."""
        for decl in self.events:
            for stmt in iter_statements(decl.body):
                yield decl.name, stmt

    def statement_ids(self):
        return tuple(stmt.sid for _, stmt in self.statements())

    def statement_owner(self):
        return {stmt.sid: event for event, stmt in self.statements()}

    def uses_rand_bool(self, event_name=None) -> bool:
        for event, stmt in self.statements():
            if event_name is not None and event != event_name:
                continue
            if isinstance(stmt, Assign) and uses_rand_bool(stmt.expr):
                return True
            if isinstance(stmt, If) and uses_rand_bool(stmt.cond):
                return True
        return False
