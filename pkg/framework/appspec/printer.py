from appspec.ast_nodes import (
    Assign, Binary, BoolLit, Disable, Enable, If, IntLit, Log, RandBool, Unary, VarRef,
)

INDENT = "    "


def format_expr(expr):
    if isinstance(expr, BoolLit):
        return "true" if expr.value else "false"
    if isinstance(expr, IntLit):
        return str(expr.value)
    if isinstance(expr, VarRef):
        return expr.name
    if isinstance(expr, RandBool):
        return "rand_bool()"
    if isinstance(expr, Unary):
        operand = _operand(expr.operand)
        if expr.op == "-" and isinstance(expr.operand, IntLit) and expr.operand.value >= 0:
            # "-5" would read back as a single literal
            operand = f"({operand})"
        return f"{expr.op}{operand}"
    if isinstance(expr, Binary):
        return f"{_operand(expr.left)} {expr.op} {_operand(expr.right)}"
    raise TypeError(f"unexpected expression node {expr!r}")


def _operand(expr):
    # compound operands are always parenthesized so reparsing keeps the tree shape
    text = format_expr(expr)
    if isinstance(expr, (Unary, Binary)) or (isinstance(expr, IntLit) and expr.value < 0):
        return f"({text})"
    return text


def _quote(message):
    return '"' + message.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _format_body(body, depth, lines):
    pad = INDENT * depth
    for stmt in body:
        if isinstance(stmt, Assign):
            lines.append(f"{pad}{stmt.var} = {format_expr(stmt.expr)};")
        elif isinstance(stmt, Enable):
            lines.append(f"{pad}enable({stmt.event});")
        elif isinstance(stmt, Disable):
            lines.append(f"{pad}disable({stmt.event});")
        elif isinstance(stmt, Log):
            lines.append(f"{pad}log({_quote(stmt.message)});")
        elif isinstance(stmt, If):
            lines.append(f"{pad}if ({format_expr(stmt.cond)}) {{")
            _format_body(stmt.then_body, depth + 1, lines)
            if stmt.else_body:
                lines.append(f"{pad}}} else {{")
                _format_body(stmt.else_body, depth + 1, lines)
            lines.append(f"{pad}}}")


def format_app(app):
    """Render an AppSpec back to .eda source."""
    lines = [f"app {app.name}"]
    for decl in app.variables:
        if isinstance(decl.initial, bool):
            initial = "true" if decl.initial else "false"
        else:
            initial = str(decl.initial)
        suffix = " implicit" if decl.implicit else ""
        lines.append(f"var {decl.name}: {decl.type} = {initial}{suffix};")
    for decl in app.events:
        header = f"event {decl.name}" + ("" if decl.initially_enabled else " disabled")
        lines.append(f"{header} {{")
        _format_body(decl.body, 1, lines)
        lines.append("}")
    return "\n".join(lines) + "\n"
