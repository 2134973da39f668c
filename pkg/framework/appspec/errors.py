class AppSpecError(ValueError):
    """
    Base class for every diagnostic produced while reading an .eda file.
    Carries the 1-based source position of the offending token.
    """

    def __init__(self, message, line=0, column=0, source="<string>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        return f"{self.source}:{self.line}:{self.column}: {self.message}"


class AppSyntaxError(AppSpecError):
    def __init__(self, expected, found, line=0, column=0, source="<string>"):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected}, found {found!r}", line, column, source)


class UnknownIdentifier(AppSpecError):
    def __init__(self, name, line=0, column=0, source="<string>"):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", line, column, source)


class DuplicateDeclaration(AppSpecError):
    def __init__(self, name, line=0, column=0, source="<string>"):
        self.name = name
        super().__init__(f"{name!r} is declared more than once", line, column, source)


class TypeMismatch(AppSpecError):
    pass


class UnknownEventTarget(AppSpecError):
    def __init__(self, name, line=0, column=0, source="<string>"):
        self.name = name
        super().__init__(f"enable/disable target {name!r} is not a declared event", line, column, source)
