"""Command line front end.

    python -m roughlattice <command> <relation file> [options]

Relations are read either as JSON ``{"universe": [names...], "pairs": [[i, j], ...]}``
or as an edge list with one ``i j`` pair per line (``#`` starts a comment).
Results go to stdout; diagnostics go to stderr. Exit status is 0 on success,
1 on a validation error and 2 on an I/O or parse error.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, TextIO

from roughlattice.approx import ApproxContext, frame_correspondence, rough_pair
from roughlattice.complement import complement_report, complement_table
from roughlattice.config import enumeration_cap
from roughlattice.errors import RelationParseError, RoughLatticeError, UsageError
from roughlattice.export_utils import (
    approximation_table,
    approximations_to_dict,
    catalog_table,
    catalog_to_dict,
    complement_report_to_dict,
    correspondence_table,
    correspondence_to_dict,
    dumps,
    elements_table,
    export_to_csv,
    export_to_text,
    hasse_figure,
    lattice_to_dict,
    lattice_to_dot,
    mask_to_list,
    rough_set_to_dict,
    structure_report_to_dict,
    topology_to_dict,
)
from roughlattice.irreducible import join_irreducibles
from roughlattice.lattice import enumerate_rs, witness_join, witness_meet
from roughlattice.relation import (
    Relation,
    SubsetMask,
    Universe,
    quasiorder_violation,
    reflexive_transitive_closure,
    require_quasiorder,
)
from roughlattice.structure import analyze, is_stone, verify_stone_by_enumeration
from roughlattice.topology import enumerate_opens, topology_down, topology_up

LOGGER = logging.getLogger(__name__)

COMMANDS = ("analyze", "approx", "lattice", "irreducibles", "complements", "topology", "witness", "stone")

OUTPUT_FORMATS = {
    "analyze": ("json",),
    "approx": ("json", "text", "csv"),
    "lattice": ("json", "dot", "text", "csv", "html"),
    "irreducibles": ("json", "text", "csv"),
    "complements": ("json", "text", "csv"),
    "topology": ("json",),
    "witness": ("json", "text"),
    "stone": ("json", "text"),
}

CLOSURE_MODES = ("reject", "reflexive-transitive-close")


@dataclass
class CliConfig:
    input_path: str
    subcommand: str
    input_format: Optional[str] = None  # inferred from the extension when None
    enumeration_cap: Optional[int] = None
    output_format: str = "json"
    closure_mode: str = "reject"
    set_literal: Optional[str] = None
    frame: bool = False
    kind: str = "up"
    verify: bool = False
    dot: bool = False
    witness_op: str = "meet"
    sets: Optional[str] = None
    verbosity: int = 0

    def __post_init__(self):
        if self.subcommand not in COMMANDS:
            raise UsageError(f"unknown command {self.subcommand!r}")
        if self.closure_mode not in CLOSURE_MODES:
            raise UsageError(f"unknown closure mode {self.closure_mode!r}")


def infer_format(path: str) -> str:
    return "json" if Path(path).suffix.lower() == ".json" else "edgelist"


def _parse_json(text: str) -> Relation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RelationParseError(exc.msg, exc.lineno, exc.colno)
    if not isinstance(data, dict) or "universe" not in data or "pairs" not in data:
        raise RelationParseError('expected an object with "universe" and "pairs"')
    names, pairs = data["universe"], data["pairs"]
    if not isinstance(names, list) or not all(isinstance(name, str) for name in names):
        raise RelationParseError('"universe" must be a list of names')
    try:
        universe = Universe(tuple(names))
    except RoughLatticeError as exc:
        raise RelationParseError(str(exc))
    if not isinstance(pairs, list):
        raise RelationParseError('"pairs" must be a list')
    checked = []
    for k, pair in enumerate(pairs):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(i, int) and not isinstance(i, bool) for i in pair)
        ):
            raise RelationParseError(f"pair #{k} must be a list of two integers, got {pair!r}")
        x, y = pair
        if not (0 <= x < universe.size and 0 <= y < universe.size):
            raise RelationParseError(f"pair #{k} [{x},{y}]: index out of range for {universe.size} elements")
        checked.append((x, y))
    return Relation.from_pairs(universe, checked)


def _parse_edgelist(text: str) -> Relation:
    pairs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise RelationParseError(f"expected two indices, got {len(tokens)} fields", number)
        values = []
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                raise RelationParseError(f"not a non-negative integer: {token!r}", number, line.index(token) + 1)
            values.append(int(token))
        pairs.append((values[0], values[1]))
    if not pairs:
        raise RelationParseError("edge list has no pairs")
    size = max(max(x, y) for x, y in pairs) + 1
    return Relation.from_pairs(Universe.of_size(size), pairs)


def parse_relation(path: str, fmt: Optional[str] = None) -> Relation:
    """Read a relation file; ``fmt`` is ``json`` or ``edgelist`` (default: by extension)."""
    fmt = fmt or infer_format(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise RelationParseError(f"not UTF-8 text at byte {exc.start}: {exc.reason}")
    if fmt == "json":
        relation = _parse_json(text)
    elif fmt == "edgelist":
        relation = _parse_edgelist(text)
    else:
        raise RelationParseError(f"unknown input format {fmt!r}")
    LOGGER.info("read %s relation on %d elements with %d pairs", fmt, relation.size, len(relation))
    return relation


def parse_set(text: str, size: int) -> SubsetMask:
    """``"0,2"`` -> {0, 2}; the empty string is the empty set."""
    indices = []
    for token in (part.strip() for part in text.split(",")):
        if not token:
            continue
        if not (token.isascii() and token.isdigit()) or int(token) >= size:
            raise RelationParseError(f"bad element index {token!r} in set {text!r}")
        indices.append(int(token))
    return SubsetMask.from_indices(size, indices)


def parse_sets(text: str, size: int) -> List[SubsetMask]:
    """``"0,1;2"`` -> [{0, 1}, {2}]."""
    return [parse_set(part, size) for part in text.split(";")]


def prepare_relation(relation: Relation, closure_mode: str, strict: bool = True) -> Relation:
    violation = quasiorder_violation(relation)
    if violation is None:
        return relation
    if closure_mode == "reflexive-transitive-close":
        closed = reflexive_transitive_closure(relation)
        LOGGER.warning(
            "input is not a quasiorder (%s); results describe its reflexive-transitive closure (%d -> %d pairs)",
            violation[1],
            len(relation),
            len(closed),
        )
        return closed
    if strict:
        require_quasiorder(relation)
    return relation


def _check_output(config: CliConfig) -> None:
    allowed = OUTPUT_FORMATS[config.subcommand]
    if config.output_format not in allowed:
        raise UsageError(
            f"{config.subcommand} does not support --output {config.output_format} (use one of {', '.join(allowed)})"
        )


def _table(config: CliConfig, table) -> str:
    return export_to_csv(table) if config.output_format == "csv" else export_to_text(table)


def _analyze(config: CliConfig, relation: Relation, cap: int) -> str:
    data = structure_report_to_dict(analyze(relation, cap=cap))
    if config.dot:
        ctx = ApproxContext.of(relation)
        if relation.size <= cap:
            data["hasse_dot"] = lattice_to_dot(enumerate_rs(ctx, cap=cap), ctx.components)
        else:
            LOGGER.warning("universe of %d elements exceeds cap %d; no Hasse diagram", relation.size, cap)
            data["hasse_dot"] = None
    return dumps(data)


def _approx(config: CliConfig, relation: Relation, cap: int) -> str:
    if config.frame:
        report = frame_correspondence(relation)
        if config.output_format == "json":
            return dumps(correspondence_to_dict(report))
        return _table(config, correspondence_table(report))
    if config.set_literal is None:
        raise UsageError("approx needs --set or --frame")
    ctx = ApproxContext.of(relation)
    x = parse_set(config.set_literal, relation.size)
    if config.output_format == "json":
        return dumps(approximations_to_dict(ctx, x))
    return _table(config, approximation_table(ctx, x))


def _lattice(config: CliConfig, relation: Relation, cap: int) -> str:
    lattice = enumerate_rs(ApproxContext.of(relation), cap=cap)
    if config.output_format == "json":
        return dumps(lattice_to_dict(lattice))
    if config.output_format == "dot":
        return lattice_to_dot(lattice)
    if config.output_format == "html":
        return hasse_figure(lattice).to_html(include_plotlyjs="cdn", full_html=True)
    return _table(config, elements_table(lattice))


def _irreducibles(config: CliConfig, relation: Relation, cap: int) -> str:
    catalog = join_irreducibles(ApproxContext.of(relation))
    if config.output_format == "json":
        return dumps(catalog_to_dict(catalog))
    return _table(config, catalog_table(catalog, relation.universe))


def _complements(config: CliConfig, relation: Relation, cap: int) -> str:
    ctx = ApproxContext.of(relation)
    lattice = enumerate_rs(ctx, cap=cap)
    if config.output_format == "json":
        return dumps([complement_report_to_dict(complement_report(ctx, element)) for element in lattice])
    return _table(config, complement_table(ctx, lattice))


def _topology(config: CliConfig, relation: Relation, cap: int) -> str:
    t = topology_up(relation) if config.kind == "up" else topology_down(relation)
    opens = enumerate_opens(t, cap=cap) if relation.size <= cap else None
    return dumps(topology_to_dict(t, opens))


def _witness(config: CliConfig, relation: Relation, cap: int) -> str:
    if config.sets is None:
        raise UsageError("witness needs --sets, e.g. --sets \"0,1;2\"")
    ctx = ApproxContext.of(relation)
    subsets = parse_sets(config.sets, relation.size)
    build = witness_meet if config.witness_op == "meet" else witness_join
    w = build(ctx, subsets)
    pair = rough_pair(ctx, w)
    if config.output_format == "json":
        return dumps({"operation": config.witness_op, "witness": mask_to_list(w), "rough_pair": rough_set_to_dict(pair)})
    universe = relation.universe
    name = "W" if config.witness_op == "meet" else "V"
    return f"{name}={w.format(universe)}\nA({name})={pair.format(universe)}\n"


def _stone(config: CliConfig, relation: Relation, cap: int) -> str:
    verdict = is_stone(relation)
    verified = None
    if config.verify:
        ctx = ApproxContext.of(relation)
        verified = verify_stone_by_enumeration(ctx, enumerate_rs(ctx, cap=cap))
        if verified != verdict.holds:
            LOGGER.error("relation-level and lattice-level Stone checks disagree")
    if config.output_format == "json":
        witness = None
        if verdict.witness is not None:
            witness = {
                "point": verdict.witness.point,
                "composed": mask_to_list(verdict.witness.composed),
                "joined": mask_to_list(verdict.witness.joined),
            }
        return dumps({"is_stone": verdict.holds, "witness": witness, "verified_by_enumeration": verified})
    lines = [f"stone: {'yes' if verdict.holds else 'no'}"]
    if verdict.witness is not None:
        universe = relation.universe
        lines.append(
            f"at {universe.names[verdict.witness.point]}: "
            f"{verdict.witness.composed.format(universe)} != {verdict.witness.joined.format(universe)}"
        )
    if verified is not None:
        lines.append(f"verified by enumeration: {'yes' if verified else 'no'}")
    return "\n".join(lines) + "\n"


HANDLERS = {
    "analyze": _analyze,
    "approx": _approx,
    "lattice": _lattice,
    "irreducibles": _irreducibles,
    "complements": _complements,
    "topology": _topology,
    "witness": _witness,
    "stone": _stone,
}


def run(config: CliConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        _check_output(config)
        cap = enumeration_cap(config.enumeration_cap)
        relation = parse_relation(config.input_path, config.input_format)
        # approximation operators are defined for any relation
        relation = prepare_relation(relation, config.closure_mode, strict=config.subcommand != "approx")
        LOGGER.info("running %s on %d elements (cap %d)", config.subcommand, relation.size, cap)
        out.write(HANDLERS[config.subcommand](config, relation, cap))
    except (RelationParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except RoughLatticeError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="relation file (JSON or edge list)")
    common.add_argument("--format", "-f", dest="input_format", choices=["json", "edgelist"], default=None,
                        help="input format; inferred from the file extension by default")
    common.add_argument("--output", "-o", dest="output_format", default="json",
                        choices=["json", "dot", "text", "csv", "html"], help="output format (default: json)")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration cap on |U| (default: $ROUGHLATTICE_CAP or 20)")
    common.add_argument("--closure", dest="closure_mode", choices=CLOSURE_MODES, default="reject",
                        help="what to do with input that is not a quasiorder")
    common.add_argument("--verbose", "-v", dest="verbosity", action="count", default=0,
                        help="-v for info, -vv for debug logging on stderr")

    parser = argparse.ArgumentParser(prog="roughlattice", description="Rough set lattices of finite quasiorders")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("analyze", parents=[common], help="components, Stone property and RS sizes") \
        .add_argument("--dot", action="store_true", help="include a component-coloured Hasse diagram")
    approx = sub.add_parser("approx", parents=[common], help="approximations of one set")
    approx.add_argument("--set", dest="set_literal", help='comma-separated indices, e.g. "0,2"')
    approx.add_argument("--frame", action="store_true", help="frame-correspondence report instead")
    sub.add_parser("lattice", parents=[common], help="enumerate RS")
    sub.add_parser("irreducibles", parents=[common], help="join- and meet-irreducible rough sets")
    sub.add_parser("complements", parents=[common], help="complements of every element of RS")
    sub.add_parser("topology", parents=[common], help="Alexandrov topology base and open sets") \
        .add_argument("--kind", choices=["up", "down"], default="up")
    witness = sub.add_parser("witness", parents=[common], help="a set realizing a meet or join")
    op = witness.add_mutually_exclusive_group()
    op.add_argument("--meet", dest="witness_op", action="store_const", const="meet")
    op.add_argument("--join", dest="witness_op", action="store_const", const="join")
    witness.add_argument("--sets", help='semicolon-separated sets, e.g. "0,1;2"')
    witness.set_defaults(witness_op="meet")
    sub.add_parser("stone", parents=[common], help="decide the Stone property") \
        .add_argument("--verify", action="store_true", help="cross-check by enumerating RS")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    input_path = args.pop("input")
    configure_logging(args["verbosity"])
    config = CliConfig(input_path=input_path, enumeration_cap=args.pop("cap"), **args)
    return run(config)
