import string
from dataclasses import dataclass

from appspec.errors import AppSyntaxError

KEYWORDS = {
    "app", "var", "event", "implicit", "disabled", "if", "else",
    "enable", "disable", "log", "rand_bool", "true", "false",
}

DIGITS = frozenset(string.digits)
NAME_START = frozenset(string.ascii_letters + "_")
NAME_CHARS = NAME_START | DIGITS

# longest operators first so that "<=" wins over "<"
OPERATORS = ("==", "!=", "<=", ">=", "&&", "||",
             "+", "-", "*", "/", "<", ">", "!", "=",
             "{", "}", "(", ")", ";", ":")


@dataclass(frozen=True)
class Token:
    type: str      # IDENT, INT, STRING, KEYWORD, OP, EOF
    value: str
    line: int
    column: int

    def describe(self):
        if self.type == "EOF":
            return "end of input"
        return self.value


class Lexer:
    def __init__(self, source, source_name="<string>"):
        self.source = source
        self.source_name = source_name
        self.pos = 0
        self.line = 1
        self.column = 1

    def _advance(self, count=1):
        for _ in range(count):
            if self.source[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def _peek(self, offset=0):
        index = self.pos + offset
        return self.source[index] if index < len(self.source) else ""

    def _skip_blank(self):
        while self.pos < len(self.source):
            ch = self.source[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.source) and self.source[self.pos] != "\n":
                    self._advance()
            else:
                return

    def _string(self, line, column):
        self._advance()  # opening quote
        chars = []
        while True:
            ch = self._peek()
            if ch == "" or ch == "\n":
                raise AppSyntaxError('closing "', "end of line", line, column, self.source_name)
            if ch == '"':
                self._advance()
                return Token("STRING", "".join(chars), line, column)
            if ch == "\\":
                escaped = self._peek(1)
                if escaped not in ('"', "\\"):
                    raise AppSyntaxError('\\" or \\\\', "\\" + escaped, self.line, self.column, self.source_name)
                chars.append(escaped)
                self._advance(2)
                continue
            chars.append(ch)
            self._advance()

    def tokens(self):
        result = []
        while True:
            self._skip_blank()
            line, column = self.line, self.column
            if self.pos >= len(self.source):
                result.append(Token("EOF", "", line, column))
                return result

            ch = self.source[self.pos]
            if ch in DIGITS:
                start = self.pos
                while self._peek() in DIGITS:
                    self._advance()
                result.append(Token("INT", self.source[start:self.pos], line, column))
            elif ch in NAME_START:
                start = self.pos
                while self._peek() in NAME_CHARS:
                    self._advance()
                word = self.source[start:self.pos]
                kind = "KEYWORD" if word in KEYWORDS else "IDENT"
                result.append(Token(kind, word, line, column))
            elif ch == '"':
                result.append(self._string(line, column))
            else:
                for op in OPERATORS:
                    if self.source.startswith(op, self.pos):
                        self._advance(len(op))
                        result.append(Token("OP", op, line, column))
                        break
                else:
                    raise AppSyntaxError("a token", ch, line, column, self.source_name)
