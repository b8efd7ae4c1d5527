import re
from typing import List, Optional

import typer
from rich import print as rprint
from rich.table import Table
from typing_extensions import Annotated

from idemspec import constants, logging, ui
from idemspec.algebra.congruence import quotient_by_pairs
from idemspec.algebra.localization import (
    generated_mult_system,
    localize,
    localize_at_element,
    localize_at_prime,
    radical,
)
from idemspec.algebra.modules import FinModule
from idemspec.algebra.order import FinCIM
from idemspec.algebra.semiring import FinSemiring
from idemspec.algebra.tensor import tensor as tensor_product
from idemspec.command import common, verify as verify_command
from idemspec.config_manager import ConfigManager
from idemspec.constants import AlgebraKind, Guard, OutputFormat
from idemspec.enumeration import enumerate_posets, enumerate_semirings
from idemspec.io.emitters import to_dot, to_json
from idemspec.io.parser import emit_object
from idemspec.schemes.algebras import FinMonoid, FinRing
from idemspec.schemes.scheme import AScheme, adjunction_check_scheme, check_scheme, spec_scheme
from idemspec.schemes.types import algebra_type
from idemspec.topology.gluing import glue as glue_sections
from idemspec.topology.space import FinTop, closed_set_semiring, soberify as soberify_space
from idemspec.topology.spectrum import spec as spectrum_of
from idemspec.topology.spectrum import vanishing_set

logging.setup_logging()
app = typer.Typer()
enumerate_app = typer.Typer(help="List small objects up to isomorphism")
app.add_typer(enumerate_app, name="enumerate")

PAIR_PATTERN = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")
ALGEBRAS = (FinSemiring, FinMonoid, FinRing)
ALGEBRA_CLASSES = {AlgebraKind.SEMIRING: FinSemiring, AlgebraKind.MONOID: FinMonoid, AlgebraKind.RING: FinRing}
KIND_OF = {cls: kind for kind, cls in ALGEBRA_CLASSES.items()}


def main():
    app()


class MutuallyExclusiveValidator:
    def __init__(self):
        self.group = []

    def reset_for_testing(self):
        self.group.clear()

    def validate(self, _ctx: typer.Context, param: typer.CallbackParam, value: Optional[str]):
        # Add cli option to group if it was called with a value
        if value is not None and param.name not in self.group:
            self.group.append(param.name)
        if len(self.group) > 1:
            raise typer.BadParameter(f"option `{param.name}` is mutually exclusive with option `{self.group.pop()}`")
        return value


g_sigma_exclusivity = MutuallyExclusiveValidator()

FileArgument = Annotated[str, typer.Argument(help="Path to a .idem file", show_default=False)]
NameOption = Annotated[
    Optional[str],
    typer.Option("--name", "-n", show_default=False, help="Object to use; defaults to the first one of the right kind"),
]
FormatOption = Annotated[OutputFormat, typer.Option("--format", "-f", help="Output format")]


@app.command(help="Display help for commands")
def help(ctx: typer.Context):
    rprint(ctx.find_root().get_help())
    ctx.exit(0)


@app.callback(invoke_without_command=True)
def entry(
    ctx: typer.Context,
    max_carrier: Annotated[Optional[int], typer.Option(show_default=False, help="Largest carrier searched")] = None,
    max_congruence_carrier: Annotated[
        Optional[int], typer.Option(show_default=False, help="Largest carrier whose congruences are listed")
    ] = None,
    max_tensor_pairs: Annotated[
        Optional[int], typer.Option(show_default=False, help="Largest |M × N| for a tensor product")
    ] = None,
    max_closed_sets: Annotated[
        Optional[int], typer.Option(show_default=False, help="Most closed sets of a space")
    ] = None,
    max_free_module: Annotated[Optional[int], typer.Option(show_default=False, help="Largest free module")] = None,
    max_enumeration: Annotated[Optional[int], typer.Option(show_default=False, help="Largest enumerated size")] = None,
    max_sheaf_lattice: Annotated[
        Optional[int], typer.Option(show_default=False, help="Largest lattice of opens for sheaf checks")
    ] = None,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Print version and exit",
        is_flag=True,
    ),
):
    if version:
        rprint(ConfigManager().get_cli_version())
        ctx.exit(0)

    config_manager = ConfigManager()
    config_manager.clear_overrides()
    g_sigma_exclusivity.reset_for_testing()
    overrides = {
        Guard.CARRIER: max_carrier,
        Guard.CONGRUENCE_CARRIER: max_congruence_carrier,
        Guard.TENSOR_PAIRS: max_tensor_pairs,
        Guard.CLOSED_SETS: max_closed_sets,
        Guard.FREE_MODULE: max_free_module,
        Guard.ENUMERATION: max_enumeration,
        Guard.SHEAF_LATTICE: max_sheaf_lattice,
    }
    for guard, bound in overrides.items():
        if bound is not None:
            logging.debug(f"guard {guard.value} pinned to {bound}")
            config_manager.override(guard, bound)

    if ctx.invoked_subcommand is None:
        rprint(ctx.get_help())
        ctx.exit()


@app.command(help="Print the config path and the active size guards")
def env():
    table = Table(show_header=False)
    ConfigManager().fill_print_env(table)
    ui.console.print(table)


@app.command(help="Parse and validate every block of a file")
@common.handle_errors
def check(file: FileArgument):
    document = common.load_document(file)
    rows = []
    for block in document.blocks:
        obj = document.objects[block.name]
        notes = ""
        if isinstance(obj, FinSemiring):
            notes = "idealic" if obj.is_idealic else "not idealic"
        elif isinstance(obj, FinTop):
            notes = "sober" if obj.is_sober else "not sober"
        elif isinstance(obj, FinModule):
            notes = f"over {block.over}"
        rows.append((block.name, block.kind.value, obj.n, notes))
    ui.display_table(rows, ["Name", "Kind", "Size", "Notes"], title=file)
    ui.display_success_message(f"{len(rows)} objects valid")


@app.command(help="Prime spectrum of an idealic semiring")
@common.handle_errors
def spec(
    file: FileArgument,
    name: NameOption = None,
    dot: Annotated[bool, typer.Option("--dot", help="Emit the specialization order as DOT")] = False,
    fmt: FormatOption = OutputFormat.TABLE,
):
    document = common.load_document(file)
    name, semiring = common.lookup(document, name, FinSemiring, "semiring")
    space = spectrum_of(semiring).space
    if dot:
        typer.echo(to_dot(space, f"Spec {name}"), nl=False)
        return
    common.show(f"spec_{name}", space, fmt)


@app.command(help="Closed-set semiring of a space, or spectrum of an idealic semiring")
@common.handle_errors
def dual(file: FileArgument, name: NameOption = None, fmt: FormatOption = OutputFormat.TABLE):
    document = common.load_document(file)
    name, obj = common.lookup(document, name, (FinTop, FinSemiring), "space or semiring")
    if isinstance(obj, FinTop):
        common.show(f"C_{name}", closed_set_semiring(obj).semiring, fmt)
    else:
        common.show(f"spec_{name}", spectrum_of(obj).space, fmt)


@app.command(help="Space of irreducible closed sets of a space")
@common.handle_errors
def soberify(file: FileArgument, name: NameOption = None, fmt: FormatOption = OutputFormat.TABLE):
    document = common.load_document(file)
    name, space = common.lookup(document, name, FinTop, "space")
    common.show(f"sob_{name}", soberify_space(space).space, fmt)


@app.command(name="localize", help="Localize a semiring at an element, a multiplicative system or a prime")
@common.handle_errors
def localize_cmd(
    file: FileArgument,
    name: NameOption = None,
    at: Annotated[
        Optional[str],
        typer.Option(
            "--at",
            show_default=False,
            help="Invert the powers of this element",
            callback=g_sigma_exclusivity.validate,
        ),
    ] = None,
    sigma: Annotated[
        Optional[str],
        typer.Option(
            "--sigma",
            show_default=False,
            help="Comma-separated generators of the system to invert",
            callback=g_sigma_exclusivity.validate,
        ),
    ] = None,
    prime: Annotated[
        Optional[str],
        typer.Option(
            "--prime",
            show_default=False,
            help="Invert everything outside this prime",
            callback=g_sigma_exclusivity.validate,
        ),
    ] = None,
    fmt: FormatOption = OutputFormat.TABLE,
):
    document = common.load_document(file)
    name, semiring = common.lookup(document, name, FinSemiring, "semiring")
    if at is not None:
        loc = localize_at_element(semiring, common.element(semiring, at))
        label = f"{name}_{at}"
    elif sigma is not None:
        generators = [common.element(semiring, s.strip()) for s in sigma.split(",") if s.strip()]
        loc = localize(semiring, generated_mult_system(semiring, generators))
        label = f"{name}_sigma"
    elif prime is not None:
        loc = localize_at_prime(semiring, common.element(semiring, prime))
        label = f"{name}_{prime}"
    else:
        raise typer.BadParameter("one of --at, --sigma or --prime is required")
    common.show(label, loc.semiring, fmt)
    if fmt == OutputFormat.TABLE:
        rows = [(semiring.names[x], loc.semiring.names[loc(x)]) for x in range(semiring.n)]
        ui.display_table(rows, ["Element", "Class"], title="projection")


@app.command(name="radical", help="Radical of an element: the meet of the primes above it")
@common.handle_errors
def radical_cmd(
    file: FileArgument,
    of: Annotated[str, typer.Option("--of", show_default=False, help="Element whose radical is computed")],
    name: NameOption = None,
):
    document = common.load_document(file)
    name, semiring = common.lookup(document, name, FinSemiring, "semiring")
    a = common.element(semiring, of)
    r = radical(semiring, a)
    primes = sorted(semiring.names[p] for p in vanishing_set(semiring, a))
    typer.echo(f"rad({of}) = {semiring.names[r]}")
    typer.echo(f"V({of}) = {{{', '.join(primes)}}}")


@app.command(help="Quotient by the congruence generated by pairs")
@common.handle_errors
def quotient(
    file: FileArgument,
    pairs: Annotated[str, typer.Option("--pairs", show_default=False, help='Pairs to identify, as "(a,b);(c,d)"')],
    name: NameOption = None,
    fmt: FormatOption = OutputFormat.TABLE,
):
    document = common.load_document(file)
    name, algebra = common.lookup(document, name, ALGEBRAS + (FinCIM,), "algebra")
    found = PAIR_PATTERN.findall(pairs)
    if not found:
        raise typer.BadParameter(f"no pairs in '{pairs}'")
    indexed = [(common.element(algebra, a), common.element(algebra, b)) for a, b in found]
    q = quotient_by_pairs(algebra, indexed)
    common.show(f"{name}_q", q.quotient, fmt)
    if fmt == OutputFormat.TABLE:
        typer.echo(to_json({"classes": q.cong.describe()}))


@app.command(help="Glue compatible sections over a cover s = s1 + ... + sk")
@common.handle_errors
def glue(
    file: FileArgument,
    s: Annotated[str, typer.Option("--s", show_default=False, help="Element covered by the parts")],
    part: Annotated[
        List[str],
        typer.Option(
            "--part",
            show_default=False,
            help="A piece si:fi, with fi an element standing for its class in R_si",
        ),
    ],
    name: NameOption = None,
):
    document = common.load_document(file)
    name, semiring = common.lookup(document, name, FinSemiring, "semiring")
    parts = []
    for item in part:
        si_label, sep, fi_label = item.partition(":")
        if not sep:
            raise typer.BadParameter(f"expected si:fi, got '{item}'")
        si = common.element(semiring, si_label)
        parts.append((si, localize_at_element(semiring, si)(common.element(semiring, fi_label))))
    target = common.element(semiring, s)
    result = glue_sections(semiring, target, parts)
    typer.echo(localize_at_element(semiring, target).semiring.names[result])


@app.command(help="Tensor product of two modules over the same semiring")
@common.handle_errors
def tensor(
    file: FileArgument,
    left: Annotated[str, typer.Argument(help="First module", show_default=False)],
    right: Annotated[str, typer.Argument(help="Second module", show_default=False)],
    fmt: FormatOption = OutputFormat.TABLE,
):
    document = common.load_document(file)
    left, m = common.lookup(document, left, FinModule, "module")
    right, n = common.lookup(document, right, FinModule, "module")
    if m.ring != n.ring:
        raise typer.BadParameter(f"'{left}' and '{right}' are modules over different semirings")
    product = tensor_product(m, n)
    common.show(f"{left}_x_{right}", product.module, fmt, common.ring_name_of(document, left))


def _scheme_data(scheme: AScheme, sections: bool) -> dict:
    space = scheme.space
    data = {
        "points": list(space.points),
        "closed_sets": [space.describe_set(c) for c in scheme.closed_sets],
        "sheafified": scheme.sheafified,
    }
    if sections:
        data["sections"] = {
            space.describe_set(scheme.closed_sets[z]): scheme.sections(z) for z in range(scheme.lattice.n)
        }
    else:
        data["sections"] = {
            space.describe_set(scheme.closed_sets[z]): scheme.sections(z).n for z in range(scheme.lattice.n)
        }
    data["beta"] = {
        space.describe_set(scheme.closed_sets[z]): {
            scheme.alphas[z].semiring.names[a]: scheme.tau.sections[z].names[b] for a, b in enumerate(row)
        }
        for z, row in enumerate(scheme.beta)
    }
    return data


@app.command(help="Spectrum of an algebra as a scheme, printed as JSON")
@common.handle_errors
def scheme(
    file: FileArgument,
    name: NameOption = None,
    kind: Annotated[
        Optional[AlgebraKind],
        typer.Option("--type", "-t", show_default=False, help="Algebraic type; defaults to the kind of the block"),
    ] = None,
    sections: Annotated[bool, typer.Option("--sections", help="Include the section algebras")] = False,
    run_checks: Annotated[bool, typer.Option("--verify", help="Check the scheme laws and the unit")] = False,
):
    document = common.load_document(file)
    name, algebra = common.lookup(document, name, ALGEBRAS, "semiring, monoid or ring")
    kind = kind or KIND_OF[type(algebra)]
    if not isinstance(algebra, ALGEBRA_CLASSES[kind]):
        raise typer.BadParameter(f"'{name}' is not a {kind.value}")
    result = spec_scheme(algebra_type(kind), algebra)
    data = _scheme_data(result, sections)
    ok = True
    if run_checks:
        laws = check_scheme(result)
        adjunction = adjunction_check_scheme(result)
        data["checks"] = {"scheme": laws, "adjunction": adjunction}
        ok = laws.ok and adjunction.ok
    typer.echo(to_json(data))
    if not ok:
        raise typer.Exit(code=constants.EXIT_VIOLATION)


@app.command(help="Run a verification suite and report every check")
@common.handle_errors
def verify(
    suite: Annotated[
        str, typer.Argument(help="duality | adjunction | localization-oracle | sheaf | patching | tensor")
    ],
    file: Annotated[
        Optional[str], typer.Argument(help="Instances to check instead of the built-in ones", show_default=False)
    ] = None,
    bound: Annotated[
        Optional[int], typer.Option("--bound", "-b", show_default=False, help="Size of enumerated instances")
    ] = None,
    fmt: FormatOption = OutputFormat.TABLE,
):
    document = common.load_document(file) if file else None
    report = verify_command.verify(suite, document, bound)
    if fmt == OutputFormat.TABLE:
        rows = [(r.name, r.status.value, r.expected.value, r.reason or "") for r in report.results]
        ui.display_table(rows, ["Check", "Status", "Expected", "Reason"], title=f"suite {report.suite}")
        counts = report.counts()
        summary = ", ".join(f"{v} {k}" for k, v in counts.items())
        if report.ok:
            ui.display_success_message(summary)
        else:
            ui.display_error_message(summary)
    else:
        common.show(report.suite, report, fmt)
    if not report.ok:
        raise typer.Exit(code=constants.EXIT_VIOLATION)


@enumerate_app.command(help="Finite T0 spaces on n points, one per homeomorphism class")
@common.handle_errors
def posets(
    n: Annotated[int, typer.Option("--n", help="Number of points")],
    fmt: FormatOption = OutputFormat.TABLE,
):
    spaces = list(enumerate_posets(n))
    if fmt == OutputFormat.TABLE:
        typer.echo("\n".join(emit_object(f"P{i}", space) for i, space in enumerate(spaces)), nl=False)
    else:
        common.show("posets", spaces, fmt)


@enumerate_app.command(help="Semirings on n elements, one per isomorphism class")
@common.handle_errors
def semirings(
    n: Annotated[int, typer.Option("--n", help="Number of elements")],
    all_units: Annotated[bool, typer.Option("--all", help="Also list semirings that are not idealic")] = False,
    fmt: FormatOption = OutputFormat.TABLE,
):
    found = enumerate_semirings(n, idealic_only=not all_units)
    if fmt == OutputFormat.TABLE:
        typer.echo("\n".join(emit_object(f"S{i}", r) for i, r in enumerate(found)), nl=False)
    else:
        common.show("semirings", found, fmt)
