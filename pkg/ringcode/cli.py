"""Command-line interface for ringcode."""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from ringcode import __codename__, __version__
from ringcode.core import (
    BallQuery,
    Code,
    CodeSearcher,
    Distribution,
    RingcodeError,
    VerificationSuite,
    ball_enumerate,
    ball_volume_bruteforce,
    ball_volume_overweight,
    bound_grid,
    check_ball_formula,
    check_distance_axioms,
    check_hamming_average,
    check_ideal_average_lemma,
    check_maxwt,
    check_pair_sum,
    check_probineq,
    get_config,
    gilbert_varshamov_overweight,
    johnson_homogeneous,
    johnson_refined,
    list_profile,
    load_code,
    overweight,
    overweight_bounds,
    plotkin_distance_corollary,
    plotkin_field,
    plotkin_homogeneous,
    plotkin_overweight,
    ring_summary,
    save_code,
    solve_homogeneous,
    sphere_packing_overweight,
    triangle_holds,
    verify_johnson,
)
from ringcode.core.bounds import all_inapplicable
from ringcode.core.errors import ParameterError
from ringcode.core.ring import FiniteRing, build_ring
from ringcode.core.verify import CheckReport, check_ring
from ringcode.core.weights import WeightFunction, read_weight_csv, weight_by_name
from ringcode.utils.emit import FORMATS, Document, bound_row, emit, write_output
from ringcode.utils.helpers import format_rational, parse_rational, spawn_generators

# Create CLI app
app = typer.Typer(
    name="ringcode",
    help="ringcode - Bounds, weights and code search over finite rings",
    add_completion=False,
)

# Subcommands
search_app = typer.Typer(help="Code search commands")
verify_app = typer.Typer(help="Inequality checkers")
config_app = typer.Typer(help="Configuration commands")

app.add_typer(search_app, name="search")
app.add_typer(verify_app, name="verify")
app.add_typer(config_app, name="config")

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_NOT_APPLICABLE = 1
EXIT_ERROR = 2

RingOption = typer.Option(..., "--ring", "-r", help="Ring descriptor, e.g. Z4, GF(8), Z2xZ4, Z4[x]/(x^2+x+1)")
FormatOption = typer.Option(None, "--format", "-f", help="Output format: table, json or csv")
OutputOption = typer.Option(None, "--output", "-o", help="Write output to a file instead of stdout")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Report progress on stderr")
TimingOption = typer.Option(False, "--timing", help="Include wall-clock time in the output")


# === Helpers ===


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Map library errors to a message on stderr and exit status 2."""
    try:
        yield
    except RingcodeError as e:
        err_console.print(f"[red]Error:[/red] {e}", markup=True, highlight=False)
        raise typer.Exit(EXIT_ERROR) from e
    except (ValueError, KeyError, OSError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        err_console.print(f"[red]Error:[/red] {message}", highlight=False)
        raise typer.Exit(EXIT_ERROR) from e


def _progress(verbose: bool) -> Callable[[str], None] | None:
    if not verbose:
        return None
    return lambda message: err_console.print(message, markup=False, highlight=False)


def _deliver(document: Document, fmt: str | None, output: Path | None, exit_code: int = EXIT_OK) -> None:
    config = get_config()
    fmt = fmt or config.output.format
    if fmt not in FORMATS:
        raise typer.BadParameter(f"format must be one of {', '.join(FORMATS)}", param_hint="--format")
    text = emit(document, fmt, width=config.output.table_width)
    if output is not None:
        write_output(text, output)
        err_console.print(f"Wrote {output}", highlight=False)
    else:
        typer.echo(text, nl=False)
    if exit_code:
        raise typer.Exit(exit_code)


def _timed(document: Document, started: float, timing: bool) -> None:
    if timing:
        elapsed = round(time.perf_counter() - started, 6)
        document.payload["wall_time"] = elapsed
        document.footer.append(f"wall time: {elapsed}s")


def _weight(ring: FiniteRing, name: str, gamma: str) -> WeightFunction:
    return weight_by_name(ring, name, parse_rational(gamma))


def _parse_words(text: str) -> list[list[int]]:
    """`0,0;2,2` -> [[0, 0], [2, 2]]."""
    words = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            words.append([int(x) for x in chunk.split(",")])
    return words


def _load_code(code_path: Path | None, words: str | None, ring_spec: str | None) -> Code:
    if code_path is not None:
        ring = build_ring(ring_spec) if ring_spec else None
        return load_code(code_path, ring=ring)
    if words is None or ring_spec is None:
        raise ParameterError("give either --code FILE or --ring with --words")
    return Code.from_words(build_ring(ring_spec), _parse_words(words))


def _word_label(ring: FiniteRing, word: tuple[int, ...]) -> str:
    return " ".join(ring.labels[x] for x in word)


def _code_rows(code: Code) -> list[dict]:
    return [
        {"#": i, "indices": ",".join(str(x) for x in word), "word": _word_label(code.ring, word)}
        for i, word in enumerate(code.words)
    ]


def _check_row(report: CheckReport) -> dict:
    return {
        "check": report.name,
        "status": report.status,
        "lhs": report.lhs,
        "mid": report.mid,
        "rhs": report.rhs,
        "note": report.reason,
    }


def _check_exit(reports: list[CheckReport]) -> int:
    if any(report.status == "fail" for report in reports):
        return EXIT_NOT_APPLICABLE
    return EXIT_OK if any(report.passed for report in reports) else EXIT_NOT_APPLICABLE


# === Top-level commands ===


@app.command()
def version():
    """Show version information."""
    console.print(f"[bold cyan]ringcode[/bold cyan] v{__version__}")
    console.print(f'Code name: "{__codename__}"')


@app.command()
def ring(
    ring_spec: str = RingOption,
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Show the structure of a ring: units, ideals, associate classes, locality."""
    with _handle_errors():
        r = build_ring(ring_spec)
        summary = ring_summary(r)
        summary["axioms"] = check_ring(r).status
        locality = r.locality
        rows = [
            {"property": "order", "value": r.order},
            {"property": "elements", "value": ", ".join(r.labels)},
            {"property": "units (u)", "value": r.u},
            {"property": "nonzero nonunits (v)", "value": r.v},
            {"property": "left ideals", "value": len(r.left_ideals)},
            {"property": "associate classes", "value": len(r.associate_classes)},
            {"property": "local", "value": locality.is_local},
            {"property": "|J|", "value": locality.jacobson_size},
            {"property": "q = |R/J|", "value": locality.residue_field_size},
            {"property": "field", "value": r.is_field},
            {"property": "axioms", "value": summary["axioms"]},
        ]
        _deliver(Document(f"Ring {r.name}", rows, summary), fmt, output)


@app.command()
def weights(
    ring_spec: str = RingOption,
    weight: str = typer.Option("overweight", "--weight", "-w", help="hamming, lee, overweight or homogeneous"),
    homogeneous: bool = typer.Option(False, "--homogeneous", help="Solve for the homogeneous weight"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value of the homogeneous weight"),
    principal_only: bool = typer.Option(False, "--principal-only", help="Constrain only principal left ideals"),
    from_csv: Optional[Path] = typer.Option(None, "--from-csv", help="Load a custom weight table (index,label,weight)"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Show a weight table over a ring."""
    with _handle_errors():
        r = build_ring(ring_spec)
        payload: dict = {}
        if from_csv is not None:
            w = read_weight_csv(r, from_csv)
        elif homogeneous or weight == "homogeneous":
            solution = solve_homogeneous(r, parse_rational(gamma), principal_only=principal_only)
            payload["solution"] = solution.to_dict()
            if solution.weight is None:
                document = Document(f"Homogeneous weight on {r.name}", [], payload, [solution.describe()])
                _deliver(document, fmt, output, EXIT_NOT_APPLICABLE)
                return
            w = solution.weight
        else:
            w = _weight(r, weight, gamma)

        triangle = triangle_holds(w)
        payload.update(w.to_dict())
        payload["symmetric"] = w.is_symmetric
        payload["triangle"] = triangle.to_dict()
        rows = [{"index": x, "label": r.labels[x], "weight": w.values[x]} for x in r.elements]
        footer = [f"γ (average) = {format_rational(w.gamma)}", f"symmetric: {w.is_symmetric}"]
        if triangle.holds:
            footer.append("triangle inequality: holds")
        else:
            x, y = triangle.counterexample
            footer.append(f"triangle inequality: fails at ({r.labels[x]}, {r.labels[y]})")
        _deliver(Document(f"{w.name} weight on {r.name}", rows, payload, footer), fmt, output)


@app.command()
def ball(
    ring_spec: str = RingOption,
    n: int = typer.Option(..., "-n", "--length", help="Word length"),
    radius: str = typer.Option(..., "--radius", "-e", help="Ball radius (rational allowed)"),
    weight: str = typer.Option("overweight", "--weight", "-w", help="hamming, lee, overweight or homogeneous"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value for the homogeneous weight"),
    center: Optional[str] = typer.Option(None, "--center", "-c", help="Center as element indices, e.g. 0,1"),
    members: bool = typer.Option(False, "--list", help="List the ball's members"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel scan workers"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    timing: bool = TimingOption,
):
    """Ball volume by closed form (overweight) and by full scan."""
    with _handle_errors():
        started = time.perf_counter()
        r = build_ring(ring_spec)
        w = _weight(r, weight, gamma)
        r_value = parse_rational(radius)
        center_word = tuple(_parse_words(center)[0]) if center else (r.zero,) * n
        brute = ball_volume_bruteforce(w, n, r_value, center=center_word, workers=workers)
        payload = {
            "ring": r.name,
            "n": n,
            "weight": w.name,
            "center": list(center_word),
            "radius": format_rational(r_value),
            "volume_bruteforce": brute,
        }
        if w.name == "overweight":
            payload["volume_formula"] = ball_volume_overweight(r, n, r_value)
        if members:
            found = ball_enumerate(BallQuery(center_word, r_value, w), n, workers=workers)
            payload["members"] = [list(word) for word in found]
            rows = [{"#": i, "word": _word_label(r, word)} for i, word in enumerate(found)]
        else:
            rows = [{"property": key, "value": value} for key, value in payload.items() if key != "center"]
        document = Document(f"Ball in {r.name}^{n}", rows, payload)
        _timed(document, started, timing)
        _deliver(document, fmt, output)


BOUND_NAMES = (
    "plotkin_field",
    "plotkin_homogeneous",
    "plotkin_overweight",
    "plotkin_distance_corollary",
    "sphere_packing_overweight",
    "gilbert_varshamov_overweight",
    "johnson_homogeneous",
    "johnson_refined",
)


@app.command()
def bounds(
    ring_spec: Optional[str] = typer.Option(None, "--ring", "-r", help="Ring descriptor"),
    n: int = typer.Option(..., "-n", "--length", help="Code length (largest length with --grid)"),
    d: Optional[str] = typer.Option(None, "-d", "--distance", help="Minimum distance (largest with --grid)"),
    bound: Optional[str] = typer.Option(None, "--bound", "-b", help=f"One of: {', '.join(BOUND_NAMES)}"),
    show_all: bool = typer.Option(False, "--all", help="Every overweight bound at this point"),
    grid: bool = typer.Option(False, "--grid", help="Tabulate --bound over 1..n and 1..d"),
    size: Optional[int] = typer.Option(None, "-M", "--size", help="Code size for the distance corollary"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Homogeneous average γ"),
    rho: str = typer.Option("0", "--rho", help="Relative list-decoding radius ρ"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Evaluate code-size and list-size bounds exactly."""
    with _handle_errors():
        r = build_ring(ring_spec) if ring_spec else None

        def needs_ring() -> FiniteRing:
            if r is None:
                raise ParameterError("this bound needs --ring")
            return r

        def needs_d() -> Fraction:
            if d is None:
                raise ParameterError("this bound needs -d")
            return parse_rational(d)

        if grid:
            name = bound or "plotkin_overweight"
            top = needs_d()
            reports = bound_grid(needs_ring(), range(1, n + 1), range(1, int(top) + 1), name, gamma=gamma)
        elif bound is None or show_all:
            reports = overweight_bounds(needs_ring(), n, needs_d(), M=size)
        elif bound == "plotkin_field":
            reports = [plotkin_field(needs_ring().order, n, needs_d())]
        elif bound == "plotkin_homogeneous":
            reports = [plotkin_homogeneous(gamma, n, needs_d())]
        elif bound == "plotkin_overweight":
            reports = [plotkin_overweight(needs_ring(), n, needs_d())]
        elif bound == "plotkin_distance_corollary":
            if size is None:
                raise ParameterError("plotkin_distance_corollary needs -M")
            reports = [plotkin_distance_corollary(needs_ring(), n, size)]
        elif bound == "sphere_packing_overweight":
            reports = [sphere_packing_overweight(needs_ring(), n, needs_d())]
        elif bound == "gilbert_varshamov_overweight":
            reports = [gilbert_varshamov_overweight(needs_ring(), n, needs_d())]
        elif bound == "johnson_homogeneous":
            reports = [johnson_homogeneous(n, needs_d(), gamma, rho)]
        elif bound == "johnson_refined":
            reports = [johnson_refined(n, needs_d(), gamma, rho)]
        else:
            raise ParameterError(f"unknown bound {bound!r}; expected one of {', '.join(BOUND_NAMES)}")

        title = f"Bounds over {r.name}" if r is not None else "Bounds"
        document = Document(
            title,
            [bound_row(report) for report in reports],
            {"reports": [report.to_dict() for report in reports]},
        )
        _deliver(document, fmt, output, EXIT_NOT_APPLICABLE if all_inapplicable(reports) else EXIT_OK)


# === Search commands ===


def _search_document(result, title: str, save: Path | None, timing: bool) -> Document:
    payload = result.to_dict(timing=timing)
    footer = [
        f"size: {result.code.size}",
        f"certified optimal: {result.certified_optimal}",
    ]
    if result.method == "branch-and-bound":
        footer.append(f"nodes: {result.nodes}")
    if result.gv_guarantee is not None:
        footer.append(f"GV guarantee: {format_rational(result.gv_guarantee)}")
    if timing:
        footer.append(f"wall time: {round(result.wall_time, 6)}s")
    if save is not None:
        save_code(result.code, save)
        sidecar = save.with_suffix(".sidecar.json")
        sidecar.write_text(result.sidecar(timing).model_dump_json(indent=2) + "\n")
        err_console.print(f"Saved code to {save} and report to {sidecar}", highlight=False)
    return Document(title, _code_rows(result.code), payload, footer)


@search_app.command("greedy")
def search_greedy(
    ring_spec: str = RingOption,
    n: int = typer.Option(..., "-n", "--length", help="Code length"),
    d: str = typer.Option(..., "-d", "--distance", help="Minimum distance"),
    weight: str = typer.Option("overweight", "--weight", "-w", help="hamming, lee, overweight or homogeneous"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value for the homogeneous weight"),
    ordering: Optional[str] = typer.Option(None, "--ordering", help="lex, weight or random"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the random ordering"),
    seed_words: Optional[str] = typer.Option(None, "--seed-words", help="Partial code to extend, e.g. 0,0;2,2"),
    save: Optional[Path] = typer.Option(None, "--save", help="Write the code file and its sidecar report"),
    verbose: bool = VerboseOption,
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    timing: bool = TimingOption,
):
    """Greedy code meeting the Gilbert-Varshamov guarantee."""
    with _handle_errors():
        config = get_config()
        r = build_ring(ring_spec)
        searcher = CodeSearcher(_weight(r, weight, gamma), n, d, progress_callback=_progress(verbose))
        result = searcher.greedy(
            ordering=ordering or config.search.ordering,
            seed=config.verify.seed if seed is None else seed,
            seed_words=[tuple(word) for word in _parse_words(seed_words or "")],
        )
        document = _search_document(result, f"Greedy code in {r.name}^{n}, d ≥ {d}", save, timing)
        _deliver(document, fmt, output)


@search_app.command("max")
def search_max(
    ring_spec: str = RingOption,
    n: int = typer.Option(..., "-n", "--length", help="Code length"),
    d: str = typer.Option(..., "-d", "--distance", help="Minimum distance"),
    weight: str = typer.Option("overweight", "--weight", "-w", help="hamming, lee, overweight or homogeneous"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value for the homogeneous weight"),
    budget: Optional[int] = typer.Option(None, "--budget", help="Node budget for branch and bound"),
    fix_zero: bool = typer.Option(True, "--fix-zero/--no-fix-zero", help="Fix the zero word in the code"),
    seed_words: Optional[str] = typer.Option(None, "--seed-words", help="Partial code to extend, e.g. 0,0;2,2"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel subtree workers"),
    save: Optional[Path] = typer.Option(None, "--save", help="Write the code file and its sidecar report"),
    verbose: bool = VerboseOption,
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    timing: bool = TimingOption,
):
    """Maximum code by branch and bound, certified when the search completes."""
    with _handle_errors():
        r = build_ring(ring_spec)
        searcher = CodeSearcher(
            _weight(r, weight, gamma),
            n,
            d,
            budget=budget,
            workers=workers,
            progress_callback=_progress(verbose),
        )
        result = searcher.maximum(
            fix_zero=fix_zero,
            seed_words=[tuple(word) for word in _parse_words(seed_words or "")],
        )
        document = _search_document(result, f"Maximum code in {r.name}^{n}, d ≥ {d}", save, timing)
        _deliver(document, fmt, output)


@search_app.command("profile")
def search_profile(
    code_path: Optional[Path] = typer.Option(None, "--code", help="Code file (JSON)"),
    words: Optional[str] = typer.Option(None, "--words", help="Codewords as indices, e.g. 0,0;2,2"),
    ring_spec: Optional[str] = typer.Option(None, "--ring", "-r", help="Ring descriptor (with --words)"),
    radius: str = typer.Option(..., "--radius", "-e", help="Ball radius"),
    weight: str = typer.Option("homogeneous", "--weight", "-w", help="hamming, lee, overweight or homogeneous"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value for the homogeneous weight"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel scan workers"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Largest number of codewords in any ball of the given radius."""
    with _handle_errors():
        code = _load_code(code_path, words, ring_spec)
        w = _weight(code.ring, weight, gamma)
        profile = list_profile(code, w, parse_rational(radius), workers=workers)
        payload = {"ring": code.ring.name, "n": code.n, "M": code.size, "weight": w.name, **profile.to_dict()}
        rows = [
            {"property": "radius", "value": profile.radius},
            {"property": "max list size", "value": profile.max_list_size},
            {"property": "witness center", "value": _word_label(code.ring, profile.center)},
            {"property": "centers scanned", "value": profile.centers_scanned},
        ]
        _deliver(Document(f"List profile of an ({code.n}, {code.size}) code", rows, payload), fmt, output)


# === Verify commands ===


def _deliver_checks(title: str, reports: list[CheckReport], fmt: str | None, output: Path | None) -> None:
    payload = reports[0].to_dict() if len(reports) == 1 else {"checks": [report.to_dict() for report in reports]}
    document = Document(title, [_check_row(report) for report in reports], payload)
    _deliver(document, fmt, output, _check_exit(reports))


def _distribution(r: FiniteRing, spec: str, seed: int, subset: list[int] | None = None) -> Distribution:
    """uniform | point:<index> | random | p0,p1,... (explicit probabilities)."""
    if spec == "uniform":
        return Distribution.uniform(r, subset)
    if spec.startswith("point:"):
        return Distribution.point_mass(r, int(spec.split(":", 1)[1]))
    if spec == "random":
        return Distribution.random(r, spawn_generators(seed, 1)[0], subset)
    return Distribution(r, tuple(parse_rational(p) for p in spec.split(",")))


@verify_app.command("hamming-average")
def verify_hamming_average(
    ring_spec: str = RingOption,
    subset: Optional[str] = typer.Option(None, "--subset", help="Subset I as indices, e.g. 0,2 (default: whole ring)"),
    distribution: str = typer.Option("uniform", "--distribution", help="uniform, point:<i>, random or p0,p1,..."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for a random distribution"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Average Hamming distance of a distribution on a subset."""
    with _handle_errors():
        r = build_ring(ring_spec)
        members = _parse_words(subset)[0] if subset else list(r.elements)
        dist = _distribution(r, distribution, get_config().verify.seed if seed is None else seed, members)
        _deliver_checks("Hamming average", [check_hamming_average(members, dist)], fmt, output)


@verify_app.command("probineq")
def verify_probineq(
    ring_spec: str = RingOption,
    distribution: str = typer.Option("uniform", "--distribution", help="uniform, point:<i>, random or p0,p1,..."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for a random distribution"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Expected overweight distance of two independent draws against η."""
    with _handle_errors():
        r = build_ring(ring_spec)
        dist = _distribution(r, distribution, get_config().verify.seed if seed is None else seed)
        _deliver_checks("Probability inequality", [check_probineq(r, dist)], fmt, output)


@verify_app.command("pair-sum")
def verify_pair_sum(
    code_path: Optional[Path] = typer.Option(None, "--code", help="Code file (JSON)"),
    words: Optional[str] = typer.Option(None, "--words", help="Codewords as indices, e.g. 0,0;2,2"),
    ring_spec: Optional[str] = typer.Option(None, "--ring", "-r", help="Ring descriptor (with --words)"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """M(M-1)d ≤ Σ D(x, y) ≤ M²nη for a code under the overweight."""
    with _handle_errors():
        code = _load_code(code_path, words, ring_spec)
        _deliver_checks("Pair-sum inequality", [check_pair_sum(code)], fmt, output)


@verify_app.command("maxwt")
def verify_maxwt(
    code_path: Optional[Path] = typer.Option(None, "--code", help="Code file (JSON)"),
    words: Optional[str] = typer.Option(None, "--words", help="Codewords as indices, e.g. 0,1"),
    ring_spec: Optional[str] = typer.Option(None, "--ring", "-r", help="Ring descriptor (with --words)"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value of the homogeneous weight"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """Max-weight pair-sum inequality for the homogeneous weight."""
    with _handle_errors():
        code = _load_code(code_path, words, ring_spec)
        _deliver_checks("Max-weight inequality", [check_maxwt(code, gamma=gamma)], fmt, output)


@verify_app.command("johnson")
def verify_johnson_command(
    code_path: Optional[Path] = typer.Option(None, "--code", help="Code file (JSON)"),
    words: Optional[str] = typer.Option(None, "--words", help="Codewords as indices"),
    ring_spec: Optional[str] = typer.Option(None, "--ring", "-r", help="Ring descriptor (with --words)"),
    gamma: str = typer.Option("1", "--gamma", "-g", help="Average value of the homogeneous weight"),
    rho: str = typer.Option(..., "--rho", help="Relative radius ρ ≤ γ"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
):
    """List profile at radius ρn against the Johnson list bounds."""
    with _handle_errors():
        code = _load_code(code_path, words, ring_spec)
        _deliver_checks("Johnson list bound", [verify_johnson(code, gamma=gamma, rho=rho)], fmt, output)


@verify_app.command("suite")
def verify_suite(
    ring_spec: str = RingOption,
    trials: Optional[int] = typer.Option(None, "--trials", help="Random trials per inequality"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel trial workers"),
    max_length: int = typer.Option(2, "--max-length", help="Largest n for the ball and metric checks"),
    verbose: bool = VerboseOption,
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    timing: bool = TimingOption,
):
    """Structural checks plus randomized falsification runs on one ring."""
    with _handle_errors():
        started = time.perf_counter()
        r = build_ring(ring_spec)
        progress = _progress(verbose)
        checks: list[CheckReport] = [check_ring(r)]
        for length in range(1, max_length + 1):
            checks.append(check_ball_formula(r, length))
            checks.append(check_distance_axioms(overweight(r), length))
        if r.is_local:
            checks.append(check_ideal_average_lemma(r))
        if progress:
            for report in checks:
                progress(report.summary())

        suite = VerificationSuite(seed=seed, trials=trials, workers=workers, progress_callback=progress)
        summaries = suite.run_all(r)

        rows = [_check_row(report) for report in checks]
        rows += [
            {
                "check": summary.name,
                "status": summary.status,
                "lhs": summary.passed,
                "mid": summary.failed,
                "rhs": summary.trials,
                "note": summary.reason or f"{summary.not_applicable} n/a, {summary.equalities} equalities",
            }
            for summary in summaries
        ]
        payload = {
            "ring": r.name,
            "checks": [report.to_dict() for report in checks],
            "suites": [summary.to_dict() for summary in summaries],
        }
        document = Document(f"Verification suite on {r.name}", rows, payload)
        document.footer.append("suite rows: lhs = passed, mid = failed, rhs = trials")
        _timed(document, started, timing)
        failed = any(report.status == "fail" for report in checks) or any(s.failed for s in summaries)
        _deliver(document, fmt, output, EXIT_NOT_APPLICABLE if failed else EXIT_OK)


# === Config Commands ===


@config_app.command("show")
def config_show(
    fmt: Optional[str] = FormatOption,
):
    """Show current configuration."""
    config = get_config()
    data = config._to_dict()
    rows = [
        {"setting": f"{section}.{key}", "value": value}
        for section, values in data.items()
        for key, value in values.items()
    ]
    with _handle_errors():
        _deliver(Document("ringcode configuration", rows, data, [f"file: {config.config_file}"]), fmt, None)


@config_app.command("set")
def config_set(
    key: str = typer.Argument(..., help="Config key (e.g., search.node_budget)"),
    value: str = typer.Argument(..., help="Value to set"),
):
    """Set a configuration value."""
    config = get_config()
    with _handle_errors():
        typed_value = config.set_value(key, value)
        config.save()
    console.print(f"[green]Set[/green] {key} = {typed_value}")


@config_app.command("path")
def config_path():
    """Show configuration file path."""
    config = get_config()
    console.print(config.config_file, highlight=False)


if __name__ == "__main__":
    app()
