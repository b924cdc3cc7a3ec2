from contextlib import contextmanager
from dataclasses import replace
from pathlib import Path
from typing import Any, Iterator

import click

from . import config
from .errors import ChainError, HypothesisViolationError, WorkbenchError
from .lattice import (
    IntersectionLattice,
    essential_torus_obstruction,
    find_isotropic_orthogonal,
    square,
)
from .logging import init_logging, logger
from .manifest import (
    load_json,
    manifold_from_dict,
    pinwheel_from_dict,
    plan_from_dict,
    recipe_from_list,
)
from .pinwheel import (
    assemble,
    blow_up_component,
    closing_condition,
    trade_around,
)
from .pipeline import (
    build_family,
    canonical_gluing_data,
    construction_summary,
    family_frame,
    format_text,
    ledger_frame,
    manifolds_frame,
    run_chain,
    run_cp2k3,
    seams_frame,
    to_json,
    write_report,
)
from .seiberg_witten import canonical_genus
from .surgery import torus_surgery

#########
# types #
#########


class IntegerRange(click.ParamType):
    """"a..b" (both ends included) or a comma separated list of integers."""

    name = "range"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: Any
    ) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                start, end = (int(v) for v in text.split("..", 1))
                if start > end:
                    self.fail(f"{text!r} is an empty range.", param, ctx)
                return tuple(range(start, end + 1))
            return tuple(int(v) for v in text.split(","))
        except ValueError:
            self.fail(f"{text!r} is not a range like 1..10.", param, ctx)


class Coefficients(click.ParamType):
    """Comma separated integers, "3,1,1,1"."""

    name = "coefficients"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: Any
    ) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(v) for v in str(value).split(","))
        except ValueError:
            self.fail(
                f"{value!r} is not a comma separated list of integers.",
                param,
                ctx,
            )


manifest_path = click.Path(
    exists=True, dir_okay=False, readable=True, path_type=Path
)

##########
# public #
##########


@click.group()
def cli() -> None:
    """Invariant bookkeeping for surgery on tori in 4-manifolds."""
    if config.WORKBENCH_SEED:
        raise click.UsageError(
            "WORKBENCH_SEED is set, but nothing here is random; unset it."
        )
    init_logging()


@cli.command("run")
@click.argument("target", type=click.Choice(["cp2k3"]))
@click.option(
    "--family",
    "family_range",
    type=IntegerRange(),
    default=None,
    help="Surgery coefficients 1/n of the family, e.g. 1..10.",
)
@click.option(
    "-m",
    "--x0-coefficient",
    "m",
    type=int,
    default=1,
    show_default=True,
    help="Value of the nonzero SW invariant of X0.",
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Where the TSV and text reports go, REPORT_DIR by default.",
)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_run(
    target: str,
    family_range: tuple[int, ...] | None,
    m: int,
    output_dir: Path | None,
    as_json: bool,
) -> None:
    """Build the exotic family on ℂP²#3ℂP̄² and check every step."""
    if m == 0:
        raise click.BadParameter("must be nonzero.", param_hint="-m")
    if family_range is None:
        family_range = tuple(range(1, config.FAMILY_SIZE + 1))

    with _workbench_errors():
        result = run_cp2k3(family_range, m)

    family = family_frame(result.family)
    ledger = ledger_frame(result.ledger)
    directory = output_dir or Path(config.REPORT_DIR)
    paths = write_report(family, directory, target) + write_report(
        ledger, directory, f"{target}_reduction"
    )
    logger.info(f"Reports written to {', '.join(str(p) for p in paths)}.")

    if as_json:
        click.echo(
            to_json(
                {
                    "target": target,
                    "construction": construction_summary(result.report),
                    "reduction": ledger,
                    "remaining_torus": result.ledger.remaining_torus,
                    "family": family,
                    "distinct": result.family.distinct,
                    "sign_check": result.verdict,
                }
            )
        )
    else:
        click.echo(format_text(family))
        click.echo(
            f"remaining torus: {result.ledger.remaining_torus} "
            f"({result.ledger.configuration.kind})"
        )
        click.echo(f"sign check on X: {result.verdict}")


@cli.command("obstruct")
@click.option(
    "--bminus", "b_minus", type=click.IntRange(min=0), required=True
)
@click.option(
    "--k",
    "k_coeffs",
    type=Coefficients(),
    required=True,
    help="Coefficients (α, β₁, …) of k = αh − Σ βᵢeᵢ.",
)
@click.option(
    "--bound",
    type=click.IntRange(min=1),
    default=None,
    help="Search box bound, SEARCH_BOUND by default.",
)
@click.option(
    "--strategy",
    type=click.Choice(["pruned", "box", "exhaustive"]),
    default="pruned",
    show_default=True,
)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_obstruct(
    b_minus: int,
    k_coeffs: tuple[int, ...],
    bound: int | None,
    strategy: str,
    workers: int | None,
    as_json: bool,
) -> None:
    """Compare the analytic obstruction with an exhaustive search."""
    if len(k_coeffs) != b_minus + 1:
        raise click.BadParameter(
            f"expected {b_minus + 1} coefficients, got {len(k_coeffs)}.",
            param_hint="--k",
        )
    k = IntersectionLattice(b_minus).vector(k_coeffs)

    obstructed: bool | None
    try:
        obstructed = essential_torus_obstruction(k)
        analytic = "obstructed" if obstructed else "not obstructed"
    except HypothesisViolationError as exc:
        logger.warning(str(exc))
        obstructed = None
        analytic = f"out of hypothesis (b_minus = {b_minus} > 8)"

    try:
        witness = find_isotropic_orthogonal(
            k,
            bound,
            strategy=strategy,  # type: ignore[arg-type]
            n_workers=workers,
        )
    except (ValueError, OverflowError) as exc:
        raise click.ClickException(str(exc)) from exc
    search = "no witness" if witness is None else f"witness {witness}"

    if as_json:
        click.echo(
            to_json(
                {
                    "k": k,
                    "k_square": square(k),
                    "analytic": analytic,
                    "witness": witness,
                }
            )
        )
    else:
        click.echo(f"k = {k}, k^2 = {square(k)}")
        click.echo(f"{analytic}; {search}")

    if obstructed and witness is not None:
        raise click.ClickException(
            f"The analytic obstruction holds but {witness} is a witness."
        )


@cli.command("genus")
@click.argument("k", type=click.IntRange(min=0, max=10))
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_genus(k: int, as_json: bool) -> None:
    """Genus of the canonical class on an exotic ℂP²#kℂP̄²."""
    if not 2 <= k <= 7:
        logger.warning(
            f"k = {k} is outside 2..7, where the exotic family is known."
        )
    canonical = IntersectionLattice(k).anticanonical()
    k_square = square(canonical)
    genus = canonical_genus(k)

    if as_json:
        click.echo(
            to_json(
                {
                    "k": k,
                    "canonical_class": canonical,
                    "canonical_square": k_square,
                    "genus": genus,
                }
            )
        )
    else:
        click.echo(f"K = {canonical}, K^2 = 9 - {k} = {k_square}")
        click.echo(f"2g - 2 = K^2 + K.K = {2 * k_square}")
        click.echo(f"g = {genus}")


@cli.command("surgery")
@click.option("--manifest", type=manifest_path, required=True)
@click.option("--recipe", type=manifest_path, required=True)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_surgery(manifest: Path, recipe: Path, as_json: bool) -> None:
    """Apply a surgery recipe to a manifold record."""
    with _workbench_errors():
        manifolds = [manifold_from_dict(load_json(manifest))]
        steps = recipe_from_list(load_json(recipe))
        for i, step in enumerate(steps, start=1):
            try:
                manifolds.append(
                    torus_surgery(manifolds[-1], step.spec, site=step.site)
                )
            except WorkbenchError as exc:
                raise ChainError(i, str(exc)) from exc

    frame = manifolds_frame(manifolds)
    click.echo(to_json(frame) if as_json else format_text(frame))


@cli.command("family")
@click.option("--manifest", type=manifest_path, required=True)
@click.option(
    "--family",
    "family_range",
    type=IntegerRange(),
    default=None,
    help="Overrides the family range of the plan.",
)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_family(
    manifest: Path, family_range: tuple[int, ...] | None, as_json: bool
) -> None:
    """Run a reverse-engineering plan and its family."""
    with _workbench_errors():
        loaded = plan_from_dict(load_json(manifest))
        plan = (
            loaded.plan
            if family_range is None
            else replace(loaded.plan, family_range=family_range)
        )
        chain = run_chain(plan)
        table = build_family(
            plan,
            chain[-1],
            loaded.gluing or canonical_gluing_data(),
            site=plan.torus_name(len(plan.lagrangian_tori)),
        )

    frame = family_frame(table)
    if as_json:
        click.echo(
            to_json(
                {
                    "chain": manifolds_frame(chain),
                    "family": frame,
                    "distinct": table.distinct,
                }
            )
        )
    else:
        click.echo(format_text(manifolds_frame(chain)))
        click.echo(format_text(frame))


@cli.command("pinwheel")
@click.option("--manifest", type=manifest_path, required=True)
@click.option("--signature", type=int, required=True)
@click.option("--b1", type=click.IntRange(min=0), default=0)
@click.option("--trade", is_flag=True, help="Trade handles at every seam.")
@click.option("--blow-up", is_flag=True, help="Blow up every component.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def cmd_pinwheel(
    manifest: Path,
    signature: int,
    b1: int,
    trade: bool,
    blow_up: bool,
    as_json: bool,
) -> None:
    """Check the closing condition of a pinwheel and assemble it."""
    with _workbench_errors():
        description = pinwheel_from_dict(load_json(manifest))
        if trade:
            description = trade_around(description)
        if blow_up:
            description = replace(
                description,
                components=tuple(
                    blow_up_component(c) for c in description.components
                ),
            )
        seams = seams_frame(description)
        closes = closing_condition(description)
        if not as_json:
            click.echo(format_text(seams))
            click.echo(f"closes: {closes}")
        manifold = assemble(
            description, signature=signature, b1=b1, name=manifest.stem
        )

    if as_json:
        click.echo(
            to_json(
                {
                    "seams": seams,
                    "closes": closes,
                    "euler": manifold.euler,
                    "components": [
                        {"name": c.name, "euler": c.euler}
                        for c in description.components
                    ],
                }
            )
        )
    else:
        click.echo(f"e = {manifold.euler}")


###########
# private #
###########


@contextmanager
def _workbench_errors() -> Iterator[None]:
    try:
        yield
    except WorkbenchError as exc:
        logger.debug(f"{type(exc).__name__}: {exc}")
        raise click.ClickException(str(exc)) from exc
