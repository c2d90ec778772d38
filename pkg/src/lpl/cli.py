"""Command-line entry point: ``lpl construct | analyze | verify | atom``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .connectivity import (
    LambdaPrimeOptions,
    classify,
    lambda_prime_atom,
    restricted_edge_connectivity_bruteforce,
)
from .families import FamilySpec, random_regular
from .graph import Graph, GraphError, boundary, induced_subgraph
from .groups import GroupError, cayley_graph, semidirect_cube_cayley
from .io import dumps_edge_list, read_edge_list, to_dot
from .replacement import ccc, default_rotation_map, replacement_product
from .verifier import (
    bound_sweep,
    build_prescribed_lambda_prime,
    check_product_bounds,
    verify_paper_examples,
)

SCHEMA_VERSION = 1
FAMILIES = ("circulant", "hypercube", "complete", "cycle", "star", "random_regular", "ccc", "cayley-sdp")
ROTATIONS = {"sorted": "sorted-neighbors", "dims": "hypercube-dims", "gens": "circulant-gens"}
BRUTE_FORCE_LIMIT = 20


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    input: str | None = None
    n: int | None = None
    gens: tuple[int, ...] = ()
    degree: int | None = None
    seed: int = 0
    replacement: bool = False
    g1: str | None = None
    g2: str | None = None
    rotation: str = "sorted"
    fmt: str = "json"
    out: str | None = None
    jobs: int = 1
    transitive: bool = False
    brute_force_check: bool = False
    exhaustive_pairs: bool = False
    suite: str | None = None
    count: int = 50
    quick: bool = False
    problem_d: int | None = None
    problem_s: int | None = None
    verbose: int = 0
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        sources = [self.family is not None, self.input is not None, self.replacement]
        if self.command in ("construct", "analyze", "atom") and sum(sources) != 1:
            raise UsageError("give exactly one of --family, --input or --replacement")
        if self.replacement and not (self.g1 and self.g2):
            raise UsageError("--replacement needs --g1 and --g2")
        if self.jobs < 1 or self.count < 1:
            raise UsageError("--jobs and --count must be positive")

    def options(self, progress=None) -> LambdaPrimeOptions:
        return LambdaPrimeOptions(
            use_vertex_transitivity=self.transitive,
            exhaustive_pairs=self.exhaustive_pairs,
            jobs=self.jobs,
            progress=progress,
        )


def _gens(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"generators must be comma-separated integers: {text!r}")


def build_family(kind: str, n: int | None, gens=(), degree=None, seed: int = 0) -> Graph:
    if n is None:
        raise UsageError(f"family {kind!r} needs --n")
    if kind in ("circulant", "hypercube", "complete", "cycle", "star"):
        return FamilySpec(kind, n, tuple(gens)).build()
    if kind == "random_regular":
        if degree is None:
            raise UsageError("random_regular needs --degree")
        return random_regular(n, degree, seed)
    if kind == "ccc":
        return ccc(n)
    if kind == "cayley-sdp":
        spec, _ = semidirect_cube_cayley(n, gens or (1,))
        return cayley_graph(spec).renamed(f"cube-sdp(n={n};±{sorted(set(gens or (1,)))})")
    raise UsageError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")


def parse_factor(text: str, seed: int = 0) -> Graph:
    """``kind:n[:gens|degree]`` or ``@path``; e.g. ``circulant:7:1,2`` or ``random_regular:10:3``."""
    if text.startswith("@"):
        return read_edge_list(text[1:])
    parts = text.split(":")
    kind = parts[0]
    try:
        n = int(parts[1])
    except (IndexError, ValueError):
        raise UsageError(f"factor {text!r} must look like kind:n[:extra]")
    extra = parts[2] if len(parts) > 2 else ""
    if kind == "random_regular":
        return build_family(kind, n, degree=int(extra), seed=seed)
    return build_family(kind, n, gens=_gens(extra) if extra else (), seed=seed)


def load_graph(cfg: RunConfig) -> Graph:
    if cfg.input is not None:
        g = read_edge_list(cfg.input)
        return g.renamed(Path(cfg.input).stem)
    if cfg.replacement:
        g1 = parse_factor(cfg.g1, cfg.seed)
        g2 = parse_factor(cfg.g2, cfg.seed)
        rot = _rotation(g1, cfg.rotation)
        g, _ = replacement_product(g1, rot, g2)
        return g
    return build_family(cfg.family, cfg.n, cfg.gens, cfg.degree, cfg.seed)


def _rotation(g: Graph, name: str):
    return default_rotation_map(g, ROTATIONS[name])


def _progress(cfg: RunConfig):
    if cfg.verbose < 1:
        return None

    def report(done, total, best):
        print(f"[lambda'] {done}/{total} pairs, best {best}", file=sys.stderr, flush=True)

    return report


def _step(cfg: RunConfig):
    def report(msg):
        if cfg.verbose >= 0:
            print(f"[verify] {msg}", file=sys.stderr, flush=True)

    return report


def _envelope(kind: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "tool_version": __version__, **payload}


def _graph_info(g: Graph) -> dict:
    return {"name": g.name, "n": g.n, "m": g.m}


def cmd_construct(cfg: RunConfig) -> tuple[int, str]:
    g = load_graph(cfg)
    if cfg.fmt == "dot":
        return 0, to_dot(g)
    if cfg.fmt == "edge-list":
        return 0, dumps_edge_list(g)
    doc = _envelope("graph", {"graph": _graph_info(g), "edges": [list(e) for e in g.edges()]})
    return 0, _dump(doc)


def cmd_analyze(cfg: RunConfig) -> tuple[int, str]:
    g = load_graph(cfg)
    rep = classify(g, cfg.options(_progress(cfg)))
    doc = _envelope("analysis", {"graph": _graph_info(g), "report": rep.to_json()})
    code = 0
    violations = rep.violations(g)
    if cfg.brute_force_check:
        if g.n > BRUTE_FORCE_LIMIT:
            raise UsageError(f"--brute-force-check supports at most {BRUTE_FORCE_LIMIT} vertices")
        bf = restricted_edge_connectivity_bruteforce(g, BRUTE_FORCE_LIMIT)
        doc["brute_force"] = {"lambda_prime": bf if bf is not None else "undefined",
                              "agrees": bf == rep.lam_prime}
        if bf != rep.lam_prime:
            code = 1
    doc["violations"] = violations
    if violations:
        code = 1
    return code, _dump(doc)


def cmd_atom(cfg: RunConfig) -> tuple[int, str]:
    g = load_graph(cfg)
    atom = lambda_prime_atom(g, cfg.options(_progress(cfg)))
    sub, _ = induced_subgraph(g, atom)
    cut = boundary(g, atom)
    doc = _envelope("atom", {
        "graph": _graph_info(g),
        "lambda_prime": len(cut),
        "atom": sorted(atom),
        "size": len(atom),
        "induced_degrees": sorted(sub.degrees()),
        "induced_edges": sub.m,
        "cut_edges": [list(e) for e in cut],
    })
    return 0, _dump(doc)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    opts = cfg.options(_progress(cfg))
    step = _step(cfg)
    if cfg.problem_d is not None or cfg.problem_s is not None:
        if cfg.problem_d is None or cfg.problem_s is None:
            raise UsageError("--problem-1-4 needs both --d and --s")
        step(f"building the degree-{cfg.problem_d} construction with s={cfg.problem_s}")
        topts = LambdaPrimeOptions(use_vertex_transitivity=True, jobs=cfg.jobs, progress=opts.progress)
        _, rep = build_prescribed_lambda_prime(cfg.problem_d, cfg.problem_s, topts,
                                               check_atom=not cfg.quick)
    elif cfg.suite == "paper":
        rep = verify_paper_examples(opts, include_large=not cfg.quick, progress=step)
    elif cfg.suite == "random":
        rep = bound_sweep(cfg.seed, cfg.count, opts, progress=step)
    elif cfg.g1 and cfg.g2:
        g1 = parse_factor(cfg.g1, cfg.seed)
        rep = check_product_bounds(g1, _rotation(g1, cfg.rotation), parse_factor(cfg.g2, cfg.seed), opts)
    else:
        raise UsageError("verify needs --suite, --problem-1-4 or --g1/--g2")
    return (0 if rep.ok else 1), _dump(_envelope("bound-report", rep.to_json()))


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


COMMANDS = {"construct": cmd_construct, "analyze": cmd_analyze, "verify": cmd_verify, "atom": cmd_atom}


def _default_jobs() -> int:
    env = os.environ.get("LPL_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("graph source")
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--n", type=int)
    src.add_argument("--gens", type=_gens, default=())
    src.add_argument("--degree", type=int)
    src.add_argument("--replacement", action="store_true", help="build G1 (R) G2 from --g1/--g2")
    src.add_argument("--g1", help="kind:n[:extra] or @path")
    src.add_argument("--g2", help="kind:n[:extra] or @path")
    src.add_argument("--rotation", choices=sorted(ROTATIONS), default="sorted")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes for lambda' (env LPL_JOBS)")
    common.add_argument("--transitive", action="store_true",
                        help="treat the graph as vertex-transitive (narrows the atom search)")
    common.add_argument("--exhaustive-pairs", action="store_true",
                        help="scan every edge pair instead of those at one base vertex")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("-q", "--quiet", action="store_const", const=-1, dest="verbose")

    p = argparse.ArgumentParser(prog="lpl", description="Restricted edge-connectivity toolkit.")
    p.add_argument("--version", action="version", version=f"lpl {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", parents=[common], help="build a graph and print it")
    c.add_argument("--format", dest="fmt", choices=("json", "dot", "edge-list"), default="json")
    a = sub.add_parser("analyze", parents=[common], help="lambda, kappa, lambda' with certificates")
    a.add_argument("--brute-force-check", action="store_true")
    v = sub.add_parser("verify", parents=[common], help="check claims and report")
    v.add_argument("--suite", choices=("paper", "random"))
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--quick", action="store_true", help="skip the largest instances and atom checks")
    v.add_argument("--problem-1-4", action="store_true", dest="problem",
                   help="build the prescribed-lambda' Cayley graph for --d and --s")
    v.add_argument("--d", type=int, dest="problem_d")
    v.add_argument("--s", type=int, dest="problem_s")
    sub.add_parser("atom", parents=[common], help="a minimum lambda'-fragment")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    data = vars(ns).copy()
    problem = data.pop("problem", False)
    cfg = RunConfig(**{k: v for k, v in data.items() if k in RunConfig.__dataclass_fields__})
    if problem and (cfg.problem_d is None or cfg.problem_s is None):
        raise UsageError("--problem-1-4 needs --d and --s")
    if not problem and cfg.command == "verify":
        cfg.problem_d = cfg.problem_s = None
    return cfg


def run(cfg: RunConfig) -> tuple[int, str]:
    cfg.validate()
    return COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        code, text = run(cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except (GraphError, GroupError, OSError, ValueError) as exc:
        print(f"lpl: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
