import functools
import os
from typing import Any, Optional, Tuple

import typer

from idemspec import constants, logging, ui
from idemspec.constants import OutputFormat
from idemspec.errors import FormatError, GuardExceeded, LawViolation, PreconditionError, UnknownSuite
from idemspec.io.emitters import to_json, to_yaml
from idemspec.io.parser import emit_object, parse
from idemspec.io.types import Document


def handle_errors(func):
    """Map library errors to exit codes: violations exit 1, bad input and guard rejections exit 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LawViolation as e:
            ui.display_error_message(f"law '{e.law}' violated, witness {e.witness}")
            raise typer.Exit(code=constants.EXIT_VIOLATION)
        except GuardExceeded as e:
            ui.display_error_message(f"{e} (raise it with --max-{e.guard.replace('_', '-')})")
            raise typer.Exit(code=constants.EXIT_USAGE)
        except (FormatError, PreconditionError, UnknownSuite) as e:
            ui.display_error_message(str(e))
            raise typer.Exit(code=constants.EXIT_USAGE)

    return wrapper


def load_document(path: str) -> Document:
    if not os.path.isfile(path):
        raise typer.BadParameter(f"no such file: {path}")
    with open(path, "r", encoding="utf-8") as file:
        text = file.read()
    logging.debug(f"loading {path}")
    return parse(text)


def lookup(document: Document, name: Optional[str], kind, what: str) -> Tuple[str, Any]:
    """The object called ``name``, or the first object of the wanted kind when no name is given."""
    if name is None:
        for candidate, obj in document.objects.items():
            if isinstance(obj, kind):
                return candidate, obj
        raise typer.BadParameter(f"the file holds no {what}")
    if name not in document.objects:
        raise typer.BadParameter(f"no object named '{name}'; known: {', '.join(document.objects)}")
    obj = document.objects[name]
    if not isinstance(obj, kind):
        raise typer.BadParameter(f"'{name}' is not a {what}")
    return name, obj


def ring_name_of(document: Document, module_name: str) -> Optional[str]:
    return next((b.over for b in document.blocks if b.name == module_name), None)


def element(algebra, label: str) -> int:
    try:
        return algebra.index(label)
    except FormatError:
        raise typer.BadParameter(f"unknown element '{label}'; elements: {' '.join(algebra.names)}") from None


def show(name: str, obj: Any, fmt: OutputFormat, ring_name: Optional[str] = None) -> None:
    if fmt == OutputFormat.JSON:
        typer.echo(to_json(obj))
    elif fmt == OutputFormat.YAML:
        typer.echo(to_yaml(obj), nl=False)
    else:
        typer.echo(emit_object(name, obj, ring_name), nl=False)
