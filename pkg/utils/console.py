import sys

from colorama import Fore, Style

from config import VERBOSE

_state = {"verbose": VERBOSE}


def set_verbose(enabled: bool) -> None:
    _state["verbose"] = bool(enabled)


def progress(message: str) -> None:
    """Green progress line, shown only in verbose mode"""
    if _state["verbose"]:
        print(f"{Fore.GREEN}{message}{Style.RESET_ALL}", file=sys.stderr)


def warning(message: str) -> None:
    print(f"{Fore.YELLOW}{message}{Style.RESET_ALL}", file=sys.stderr)


def error(message: str) -> None:
    print(f"{Fore.RED}{message}{Style.RESET_ALL}", file=sys.stderr)
