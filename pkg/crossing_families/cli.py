"""Command line interface: generate, verify, oracle and render instances."""
import functools
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

import click
import yaml

from crossing_families.claims import check_claims
from crossing_families.constructions import (
    MAX_BLADES_M,
    MAX_GRID_TRIANGLES,
    MAX_HAM_POINTS,
    MAX_REMOVAL_FAMILY,
    Instance,
    blades_pointset,
    circle_blocks,
    convex_cycles_family,
    convex_intersecting_family,
    crossing_triangles_grid,
    elbow_family,
    elbow_hard_pointset,
    ham_cycle_max_even,
    ham_cycle_max_odd,
    intersecting_triangles,
    ray_separated_sets,
    three_ray_pointset,
)
from crossing_families.equipartition import MAX_WEDGE_POINTS
from crossing_families.geom_core import PointSet, fraction_to_str, to_fraction
from crossing_families.graphs import FamilyKind
from crossing_families.matchings import DEFAULT_MARGIN, MAX_VILLANGER_M, villanger_pointset
from crossing_families.oracles import (
    MAX_ANTICHAIN_N,
    MAX_BIPARTITE_MATCHING_M,
    MAX_CLIQUE_GRAPHS,
    MAX_GENERAL_MATCHING_POINTS,
    Disjointness,
    MatchingMode,
    antichain_upper_bound,
    best_2path_removal,
    enumerate_hamiltonian_max_crossings,
    longest_perfect_matching_bruteforce,
    max_antichain_3d,
    max_crossing_elbows,
    max_crossing_subfamily,
    max_transversal_triangles,
    min_avoiding_pairs,
)
from crossing_families.utils.errors import (
    ConstructionError,
    GeometryError,
    ResourceLimitError,
    SchemaError,
    TieUnresolvedError,
)
from crossing_families.utils.instance_io import dumps, read_instance, read_points, write_instance
from crossing_families.utils.intervals import MAX_DPS, START_DPS
from crossing_families.utils.sampling import (
    hexagon_like,
    random_convex_position,
    random_general_position,
    random_orthogonal_general_position,
)
from crossing_families.utils.visualization import (
    DEFAULT_PADDING,
    DEFAULT_POINT_SIZE,
    render_instance,
)

DEFAULT_CONFIG = {
    "caps": {
        "max_clique_graphs": MAX_CLIQUE_GRAPHS,
        "max_ham_points": MAX_HAM_POINTS,
        "max_general_matching_points": MAX_GENERAL_MATCHING_POINTS,
        "max_bipartite_matching_m": MAX_BIPARTITE_MATCHING_M,
        "max_antichain_n": MAX_ANTICHAIN_N,
        "max_removal_family": MAX_REMOVAL_FAMILY,
        "max_grid_triangles": MAX_GRID_TRIANGLES,
        "max_villanger_m": MAX_VILLANGER_M,
        "max_wedge_points": MAX_WEDGE_POINTS,
        "max_blades_m": MAX_BLADES_M,
    },
    "precision": {"start_dps": START_DPS, "max_dps": MAX_DPS},
    "villanger": {"margin": fraction_to_str(DEFAULT_MARGIN)},
    "render": {
        "padding": fraction_to_str(DEFAULT_PADDING),
        "mark_crossings": True,
        "point_size": DEFAULT_POINT_SIZE,
    },
}

LAYOUTS = ("default", "random-convex", "hexagon")

EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3
EXIT_RESOURCE = 4


def load_config(config_path: Optional[str]) -> dict:
    """Defaults overlaid with the sections of a yaml config file."""
    config = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
    if config_path is None:
        return config
    with open(config_path, "r", encoding="utf-8") as yaml_file:
        config_dict = yaml.safe_load(yaml_file) or {}

    # Create separate dictionaries for each top-level key
    for section in config:
        config[section].update(config_dict.get(section, {}) or {})
    return config


def handle_errors(command: Callable) -> Callable:
    """Map package errors to the exit-code contract."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except ResourceLimitError as error:
            click.echo(f"resource limit: {error}", err=True)
            ctx.exit(EXIT_RESOURCE)
        except (ConstructionError, TieUnresolvedError) as error:
            click.echo(f"{type(error).__name__}: {error}", err=True)
            ctx.exit(EXIT_CONSTRUCTION)
        except (SchemaError, GeometryError, NotImplementedError) as error:
            click.echo(f"{type(error).__name__}: {error}", err=True)
            ctx.exit(EXIT_USAGE)

    return wrapper


@click.group()
@click.option(
    "--config_path",
    default=None,
    help="Path to yaml config file",
    type=click.Path(exists=True),
)
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str]) -> None:
    """Crossing and intersecting families of geometric graphs."""
    ctx.obj = load_config(config_path)


@dataclass
class GenerateOptions:
    m: Optional[int]
    n: Optional[int]
    k: Optional[int]
    size: Optional[int]
    seed: int
    margin: Optional[Fraction]
    from_file: Optional[str]
    layout: str = "default"


def _parse_margin(_ctx: click.Context, _param: click.Parameter, value: Optional[str]):
    if value is None:
        return None
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError) as error:
        raise click.BadParameter(f"{value!r} is not a rational number") from error


def _require(value, flag: str, name: str):
    if value is None:
        raise click.UsageError(f"{name} needs {flag}")
    return value


def _points(options: GenerateOptions, name: str, sampler: Callable[[int, int], PointSet]):
    if options.from_file is not None:
        S = read_points(options.from_file)
        if options.n is not None and options.n != len(S):
            raise click.UsageError(f"--n {options.n} does not match {len(S)} points in file")
        return S
    return sampler(_require(options.n, "--n", name), options.seed)


def _convex_blocks(options: GenerateOptions) -> PointSet:
    if options.from_file:
        return read_points(options.from_file)
    n = _require(options.n, "--n", "convex-intersecting")
    if options.layout == "random-convex":
        return random_convex_position(3 * n, options.seed)
    return circle_blocks(n)


def _triangle_points(options: GenerateOptions) -> PointSet:
    if options.layout != "hexagon":
        return _points(options, "intersecting-triangles", random_general_position)
    n = _require(options.n, "--n", "intersecting-triangles")
    if n % 6:
        raise click.UsageError(f"--layout hexagon needs --n divisible by 6, got {n}")
    return hexagon_like(n // 6, options.seed)


def construction_factory(
    name: str, layout: str = "default"
) -> Callable[[GenerateOptions, dict], Instance]:
    """Builder of the named construction, taking CLI options and the config."""
    builders = {
        "elbow-family": lambda o, c: elbow_family(
            _points(o, "elbow-family", random_orthogonal_general_position)
        ),
        "elbow-hard": lambda o, c: elbow_hard_pointset(_require(o.m, "--m", "elbow-hard")),
        "triangle-grid": lambda o, c: crossing_triangles_grid(
            _require(o.m, "--m", "triangle-grid"), cap=c["caps"]["max_grid_triangles"]
        ),
        "ham-odd": lambda o, c: ham_cycle_max_odd(_require(o.m, "--m", "ham-odd")),
        "ham-even": lambda o, c: ham_cycle_max_even(_require(o.m, "--m", "ham-even")),
        "blades": lambda o, c: blades_pointset(
            _require(o.m, "--m", "blades"), cap=c["caps"]["max_blades_m"]
        ),
        "villanger": lambda o, c: villanger_pointset(
            _require(o.m, "--m", "villanger"),
            margin=o.margin if o.margin is not None else to_fraction(c["villanger"]["margin"]),
            start_dps=c["precision"]["start_dps"],
            max_dps=c["precision"]["max_dps"],
            cap=c["caps"]["max_villanger_m"],
        ),
        "convex-cycles": lambda o, c: convex_cycles_family(
            ray_separated_sets(_require(o.k, "--k", "convex-cycles"), o.size or 2), o.k
        ),
        "intersecting-triangles": lambda o, c: intersecting_triangles(
            _triangle_points(o), cap=c["caps"]["max_wedge_points"]
        ),
        "three-ray": lambda o, c: three_ray_pointset(_require(o.n, "--n", "three-ray")),
        "convex-intersecting": lambda o, c: convex_intersecting_family(_convex_blocks(o)),
    }
    if name not in builders:
        raise NotImplementedError(f"unknown construction {name!r}; choose from {sorted(builders)}")
    layouts = {"random-convex": "convex-intersecting", "hexagon": "intersecting-triangles"}
    if layout != "default" and layouts.get(layout) != name:
        raise click.UsageError(f"--layout {layout} does not apply to {name}")
    return builders[name]


@cli.command()
@click.argument("name")
@click.option("--m", type=int, help="Construction parameter m")
@click.option("--n", type=int, help="Number of points (or n for three-ray / convex-intersecting)")
@click.option("--k", type=int, help="Cycle length for convex-cycles")
@click.option("--size", type=int, help="Part size for convex-cycles")
@click.option("--seed", type=int, default=0, help="Seed for random point sets")
@click.option(
    "--margin",
    callback=_parse_margin,
    help="Certified slack for villanger, e.g. 1/1000",
)
@click.option(
    "--layout",
    type=click.Choice(LAYOUTS),
    default="default",
    help="Point layout: random-convex for convex-intersecting, hexagon for intersecting-triangles",
)
@click.option("--from-file", "from_file", type=click.Path(exists=True), help="Point set JSON")
@click.option("--out", type=click.Path(), help="Output file (default: stdout)")
@click.pass_obj
@handle_errors
def generate(config: dict, name: str, out: Optional[str], **kwargs) -> None:
    """Generate the instance NAME and emit its JSON document."""
    options = GenerateOptions(**kwargs)
    instance = construction_factory(name, options.layout)(options, config)
    if out is None:
        click.echo(dumps(instance), nl=False)
    else:
        write_instance(instance, out)
        click.echo(f"wrote {name} with {len(instance.S)} points to {out}", err=True)


@cli.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report")
@click.pass_obj
@handle_errors
def verify(config: dict, file: str, as_json: bool) -> None:
    """Re-check every claim of the document FILE."""
    instance = read_instance(file)
    reports = check_claims(instance, config)
    if as_json:
        rows = [
            {
                "description": r.claim.description,
                "verifier": r.claim.verifier,
                "relation": r.claim.relation.value,
                "claimed": r.claim.value,
                "computed": r.computed,
                "passed": r.passed,
            }
            for r in reports
        ]
        click.echo(json.dumps(rows, indent=2))
    else:
        click.echo(f"{'verifier':<30} {'rel':<3} {'claimed':>8} {'computed':>8}  status")
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            click.echo(
                f"{r.claim.verifier:<30} {r.claim.relation.value:<3} "
                f"{r.claim.value:>8} {r.computed:>8}  {status}"
            )
    if not all(r.passed for r in reports):
        sys.exit(EXIT_CLAIM_FAILED)


@dataclass
class OracleReport:
    value: Union[int, float]
    witness: str
    agreements: list[tuple[str, bool]]


def _claims_agreement(instance: Instance, verifier: str, value: int) -> list[tuple[str, bool]]:
    return [(c.description, c.holds(value)) for c in instance.claims if c.verifier == verifier]


def _oracle_instance(file: Optional[str], name: str) -> Instance:
    if file is None:
        raise click.UsageError(f"oracle {name} needs --file")
    return read_instance(file)


def run_oracle(name: str, file: Optional[str], n: Optional[int], exhaustive: bool, config: dict):
    """Run one oracle and compare it with the related claims of the document."""
    caps = config["caps"]
    precision = config["precision"]

    if name == "antichain":
        n = _require(n, "--n", "antichain")
        value = max_antichain_3d(n, cap=caps["max_antichain_n"])
        bound = antichain_upper_bound(n)
        return OracleReport(value, f"chain bound {bound}", [("chain bound", value == bound)])

    instance = _oracle_instance(file, name)
    if name == "ham-max":
        result = enumerate_hamiltonian_max_crossings(instance.S, cap=caps["max_ham_points"])
        agreements = _claims_agreement(instance, "hamiltonian_max_crossings", result.value)
        return OracleReport(result.value, str(list(result.witness.order)), agreements)
    if name == "min-avoiding":
        value = min_avoiding_pairs(instance.S, cap=caps["max_ham_points"])
        lower = len(instance.S) // 2 - 1
        return OracleReport(value, "", [(f"at least n/2 - 1 = {lower}", value >= lower)])
    if name == "longest-matching":
        mode = MatchingMode.BIPARTITE_AB
        if not all(instance.S.label(i)[:1] in "ab" for i in range(len(instance.S))):
            mode = MatchingMode.GENERAL
        result = longest_perfect_matching_bruteforce(
            instance.S, mode, caps, precision["start_dps"], precision["max_dps"]
        )
        labels = [
            f"{instance.S.label(i)}-{instance.S.label(j)}" for i, j in result.pairs
        ]
        return OracleReport(
            result.length,
            ", ".join(labels),
            [("crossing-free", result.is_crossing_free)],
        )
    if name == "max-subfamily":
        family = instance.family
        if family is None:
            raise SchemaError("document has no family")
        disjointness = (
            Disjointness.EDGE if family.kind == FamilyKind.INTERSECTING else Disjointness.VERTEX
        )
        result = max_crossing_subfamily(family.members, disjointness, caps["max_clique_graphs"])
        if family.kind == FamilyKind.MATCHING:
            agreement = ("no two members cross", result.size <= 1)
        else:
            agreement = ("whole family", result.size >= len(family))
        return OracleReport(result.size, str(list(result.witness)), [agreement])
    if name == "two-path-removal":
        if instance.family is None:
            raise SchemaError("document has no family")
        result = best_2path_removal(
            instance.family, exhaustive=exhaustive, cap=caps["max_removal_family"]
        )
        agreements = _claims_agreement(instance, "best_2path_removal", result.size)
        return OracleReport(result.size, "".join(result.assignment), agreements)
    if name == "transversal-triangles":
        result = max_transversal_triangles(instance.S, caps["max_clique_graphs"])
        agreements = _claims_agreement(instance, "max_transversal_triangles", result.size)
        return OracleReport(result.size, str(list(result.witness)), agreements)
    if name == "elbows":
        result = max_crossing_elbows(instance.S, caps["max_clique_graphs"])
        agreements = _claims_agreement(instance, "max_crossing_elbows", result.size)
        return OracleReport(result.size, str(list(result.witness)), agreements)
    raise NotImplementedError(f"unknown oracle {name!r}")


@cli.command()
@click.argument("name")
@click.option("--file", type=click.Path(exists=True), help="Instance document")
@click.option("--n", type=int, help="n for the antichain oracle")
@click.option("--exhaustive", is_flag=True, help="Enumerate every removal assignment")
@click.option("--cap-ham", type=int, help="Override caps.max_ham_points")
@click.option("--cap-clique", type=int, help="Override caps.max_clique_graphs")
@click.option("--cap-matching", type=int, help="Override caps.max_general_matching_points")
@click.option("--cap-bipartite", type=int, help="Override caps.max_bipartite_matching_m")
@click.option("--cap-antichain", type=int, help="Override caps.max_antichain_n")
@click.option("--cap-removal", type=int, help="Override caps.max_removal_family")
@click.pass_obj
@handle_errors
def oracle(
    config: dict,
    name: str,
    file: Optional[str],
    n: Optional[int],
    exhaustive: bool,
    **cap_overrides,
) -> None:
    """Run the brute-force oracle NAME and compare it with the document's claims."""
    cap_keys = {
        "cap_ham": "max_ham_points",
        "cap_clique": "max_clique_graphs",
        "cap_matching": "max_general_matching_points",
        "cap_bipartite": "max_bipartite_matching_m",
        "cap_antichain": "max_antichain_n",
        "cap_removal": "max_removal_family",
    }
    for flag, value in cap_overrides.items():
        if value is not None:
            config["caps"][cap_keys[flag]] = value

    start = time.perf_counter()
    report = run_oracle(name, file, n, exhaustive, config)
    elapsed = time.perf_counter() - start

    click.echo(f"oracle: {name}")
    click.echo(f"value: {report.value}")
    if report.witness:
        click.echo(f"witness: {report.witness}")
    click.echo(f"wall time: {elapsed:.3f}s")
    for description, agrees in report.agreements:
        click.echo(f"{'agrees' if agrees else 'DISAGREES'}: {description}")
    if not all(agrees for _, agrees in report.agreements):
        sys.exit(EXIT_CLAIM_FAILED)


@cli.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path(), help="Output SVG file")
@click.option("--no-crossings", is_flag=True, help="Do not mark crossing points")
@click.option("--title", type=str, help="Figure title")
@click.pass_obj
@handle_errors
def render(config: dict, file: str, out: str, no_crossings: bool, title: Optional[str]) -> None:
    """Draw the document FILE as an SVG figure."""
    render_config = config["render"]
    instance = read_instance(file)
    marks = render_instance(
        instance,
        out,
        mark_crossings=render_config["mark_crossings"] and not no_crossings,
        padding=to_fraction(render_config["padding"]),
        point_size=render_config["point_size"],
        title=title,
    )
    click.echo(f"wrote {out} with {marks} crossing marks", err=True)


def main():
    cli()  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    main()
