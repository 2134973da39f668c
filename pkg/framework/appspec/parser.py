import logging

from appspec.ast_nodes import (
    AppSpec, Assign, Binary, BoolLit, Disable, Enable, EventDecl, If, IntLit,
    Log, RandBool, Unary, VarDecl, VarRef, BOOL_TYPE, INT_TYPE,
)
from appspec.checker import check_app
from appspec.errors import AppSyntaxError
from appspec.lexer import Lexer

# binary operator precedence levels, loosest first
BINARY_LEVELS = (
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", "<=", ">", ">="),
    ("+", "-"),
    ("*", "/"),
)

# blocks, parentheses, prefix operators and chained binary operators all
# count toward one limit; it bounds the height of every tree the parser builds
MAX_NESTING = 64


class Parser:
    """
    Recursive-descent parser for the .eda app language.

        app NAME
        var NAME : (int|bool) = LITERAL [implicit] ;
        event NAME [disabled] { STMT* }

    Statements: assignment, if/else, enable(E), disable(E), log("...").
    """

    def __init__(self, tokens, source_name="<string>"):
        self.tokens = tokens
        self.index = 0
        self.source_name = source_name
        self.depth = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _error(self, expected):
        tok = self.current
        raise AppSyntaxError(expected, tok.describe(), tok.line, tok.column, self.source_name)

    def _nest(self, tok):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise AppSyntaxError(f"at most {MAX_NESTING} levels of nesting", tok.describe(),
                                 tok.line, tok.column, self.source_name)

    def _check(self, kind, value=None):
        tok = self.current
        return tok.type == kind and (value is None or tok.value == value)

    def _accept(self, kind, value=None):
        if self._check(kind, value):
            tok = self.current
            self.index += 1
            return tok
        return None

    def _expect(self, kind, value=None, expected=None):
        tok = self._accept(kind, value)
        if tok is None:
            self._error(expected or (repr(value) if value else kind.lower()))
        return tok

    def parse_app(self):
        self._expect("KEYWORD", "app")
        name = self._expect("IDENT", expected="application name").value
        variables, events = [], []
        while not self._check("EOF"):
            if self._check("KEYWORD", "var"):
                variables.append(self._var_decl())
            elif self._check("KEYWORD", "event"):
                events.append(self._event_decl())
            else:
                self._error("'var' or 'event'")
        return AppSpec(name=name, variables=tuple(variables), events=tuple(events))

    def _var_decl(self):
        start = self._expect("KEYWORD", "var")
        name = self._expect("IDENT", expected="variable name").value
        self._expect("OP", ":")
        type_tok = self._expect("IDENT", expected="'int' or 'bool'")
        if type_tok.value not in (INT_TYPE, BOOL_TYPE):
            raise AppSyntaxError("'int' or 'bool'", type_tok.value, type_tok.line, type_tok.column, self.source_name)
        self._expect("OP", "=")
        initial = self._literal()
        implicit = self._accept("KEYWORD", "implicit") is not None
        self._expect("OP", ";")
        return VarDecl(name=name, type=type_tok.value, initial=initial.value,
                       implicit=implicit, pos=(start.line, start.column))

    def _literal(self):
        tok = self.current
        if self._accept("KEYWORD", "true"):
            return BoolLit(True, (tok.line, tok.column))
        if self._accept("KEYWORD", "false"):
            return BoolLit(False, (tok.line, tok.column))
        negative = self._accept("OP", "-") is not None
        digits = self._expect("INT", expected="literal")
        value = int(digits.value)
        return IntLit(-value if negative else value, (tok.line, tok.column))

    def _event_decl(self):
        start = self._expect("KEYWORD", "event")
        name = self._expect("IDENT", expected="event name").value
        disabled = self._accept("KEYWORD", "disabled") is not None
        body = self._block()
        return EventDecl(name=name, initially_enabled=not disabled, body=body,
                         pos=(start.line, start.column))

    def _block(self):
        self._nest(self._expect("OP", "{"))
        body = []
        while not self._accept("OP", "}"):
            if self._check("EOF"):
                self._error("'}'")
            body.append(self._statement())
        self.depth -= 1
        return tuple(body)

    def _statement(self):
        tok = self.current
        sid = (tok.line, tok.column)
        if self._accept("KEYWORD", "if"):
            return self._if_rest(sid)
        if self._accept("KEYWORD", "enable") or self._accept("KEYWORD", "disable"):
            self._expect("OP", "(")
            target = self._expect("IDENT", expected="event name").value
            self._expect("OP", ")")
            self._expect("OP", ";")
            node = Enable if tok.value == "enable" else Disable
            return node(target, sid=sid)
        if self._accept("KEYWORD", "log"):
            self._expect("OP", "(")
            message = self._expect("STRING", expected="string literal").value
            self._expect("OP", ")")
            self._expect("OP", ";")
            return Log(message, sid=sid)
        if self._accept("IDENT"):
            self._expect("OP", "=")
            expr = self._expression()
            self._expect("OP", ";")
            return Assign(tok.value, expr, sid=sid)
        self._error("statement")

    def _if_rest(self, sid):
        cond = self._expression()
        then_body = self._block()
        else_body = ()
        if self._accept("KEYWORD", "else"):
            if self._check("KEYWORD", "if"):
                nested = self.current
                self.index += 1
                self._nest(nested)
                else_body = (self._if_rest((nested.line, nested.column)),)
                self.depth -= 1
            else:
                else_body = self._block()
        return If(cond, then_body, else_body, sid=sid)

    def _expression(self, level=0):
        if level == len(BINARY_LEVELS):
            return self._unary()
        left = self._expression(level + 1)
        chained = 0
        while self.current.type == "OP" and self.current.value in BINARY_LEVELS[level]:
            op_tok = self.current
            self.index += 1
            self._nest(op_tok)
            chained += 1
            right = self._expression(level + 1)
            left = Binary(op_tok.value, left, right, (op_tok.line, op_tok.column))
        self.depth -= chained
        return left

    def _unary(self):
        tok = self.current
        if self._accept("OP", "!") or self._accept("OP", "-"):
            # "-" directly before digits is one literal, so INT_MIN is writable
            if tok.value == "-" and self._check("INT"):
                digits = self._accept("INT")
                return IntLit(-int(digits.value), (tok.line, tok.column))
            self._nest(tok)
            operand = self._unary()
            self.depth -= 1
            return Unary(tok.value, operand, (tok.line, tok.column))
        return self._primary()

    def _primary(self):
        tok = self.current
        pos = (tok.line, tok.column)
        if self._accept("INT"):
            return IntLit(int(tok.value), pos)
        if self._accept("KEYWORD", "true"):
            return BoolLit(True, pos)
        if self._accept("KEYWORD", "false"):
            return BoolLit(False, pos)
        if self._accept("KEYWORD", "rand_bool"):
            self._expect("OP", "(")
            self._expect("OP", ")")
            return RandBool(pos)
        if self._accept("IDENT"):
            return VarRef(tok.value, pos)
        if self._accept("OP", "("):
            self._nest(tok)
            inner = self._expression()
            self._expect("OP", ")")
            self.depth -= 1
            return inner
        self._error("expression")


def parse(source, source_name="<string>"):
    """
    Parse and validate .eda source text. Raises an AppSpecError subclass on
    the first problem found.
    """
    tokens = Lexer(source, source_name).tokens()
    app = Parser(tokens, source_name).parse_app()
    check_app(app, source_name)
    return app


def parse_file(path):
    with open(path, "r", encoding="utf-8") as f:
        source = f.read()
    logging.info(f"Parsing app file {path}")
    return parse(source, source_name=str(path))
