from colorama import Fore, Style


def success(message):
    return f"{Fore.GREEN}{message}{Style.RESET_ALL}"


def warning(message):
    return f"{Fore.YELLOW}{message}{Style.RESET_ALL}"


def failure(message):
    return f"{Fore.RED}{message}{Style.RESET_ALL}"


def highlight(value):
    return f"{Fore.RED}{value}{Style.RESET_ALL}"


def coverage_line(label, report):
    """Coverage summary colored by how much is covered."""
    color = Fore.GREEN if report.total and report.covered_count == report.total else Fore.YELLOW
    return f"{Fore.CYAN}{label}{Style.RESET_ALL} {color}{report.summary()}{Style.RESET_ALL}"
