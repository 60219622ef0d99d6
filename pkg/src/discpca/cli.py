"""Benchmark harness: accuracy and average running time per method and per
training count, over a directory dataset or a synthetic generator spec.

Timing covers fit plus full test-set evaluation, averaged over `repeats`
runs of a monotonic clock; accuracy is deterministic and independent of
`repeats`.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from .classify import evaluate
from .dataset import SplitSpec, SynthSpec, fingerprint, load_dataset, split, synth_faces
from .dpca import fit_dpca
from .errors import DiscPcaError
from .lda import fit_dlda
from .pca import fit_pca

METHODS = ("pca", "dlda", "dpca")


@dataclass(frozen=True)
class BenchConfig:
    data: str = None  # dataset directory
    synth: SynthSpec = None  # generator spec (exclusive with data)
    methods: tuple = METHODS
    l_values: tuple = (3,)
    p: int = 40
    m: int = 0  # 0 = auto (kept_b - discarded_w)
    discarded_w: int = 0
    rule: str = "mean"
    repeats: int = 20
    seed: int = 42
    split_strategy: str = "first_l"

    def __post_init__(self):
        if (self.data is None) == (self.synth is None):
            raise ValueError("exactly one of data/synth must be given")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if not self.l_values:
            raise ValueError("l_values must be non-empty")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")


@dataclass(frozen=True)
class BenchRow:
    method: str
    l: int
    accuracy: float = None
    mean_time_s: float = None
    error: str = None


@dataclass(frozen=True)
class BenchReport:
    rows: tuple
    config: BenchConfig
    dataset_fingerprint: str
    params: dict = field(default_factory=dict)


def _fit_for(method, train, cfg):
    m = cfg.m if cfg.m > 0 else None
    if method == "pca":
        return fit_pca(train, cfg.p)
    if method == "dlda":
        return fit_dlda(train, m=m, discarded_w=cfg.discarded_w, rule=cfg.rule)
    if method == "dpca":
        return fit_dpca(train, cfg.p, m=m, discarded_w=cfg.discarded_w, rule=cfg.rule)
    raise ValueError(f"unknown method {method!r}")


def run_bench(cfg):
    """Run every (method, l) cell; per-cell errors mark only that row."""
    if cfg.data is not None:
        dataset = load_dataset(cfg.data)
    else:
        dataset = synth_faces(cfg.synth)
    fp = fingerprint(dataset)

    rows = []
    for method in cfg.methods:
        for l in sorted(cfg.l_values):
            try:
                train, test = split(
                    dataset, SplitSpec(l=l, strategy=cfg.split_strategy, seed=cfg.seed)
                )
                elapsed = 0.0
                accuracy = None
                for _ in range(cfg.repeats):
                    t0 = time.perf_counter()
                    sub = _fit_for(method, train, cfg)
                    acc = evaluate(sub, train, test)
                    elapsed += time.perf_counter() - t0
                    accuracy = acc  # deterministic across repeats
                rows.append(
                    BenchRow(
                        method=method,
                        l=l,
                        accuracy=accuracy,
                        mean_time_s=elapsed / cfg.repeats,
                    )
                )
            except DiscPcaError as exc:
                rows.append(BenchRow(method=method, l=l, error=f"{type(exc).__name__}: {exc}"))
    params = {
        "p": cfg.p,
        "m": cfg.m,
        "discarded_w": cfg.discarded_w,
        "rule": cfg.rule,
        "seed": cfg.seed,
        "repeats": cfg.repeats,
    }
    return BenchReport(rows=tuple(rows), config=cfg, dataset_fingerprint=fp, params=params)


def emit_report(report, fmt):
    """Render a report as CSV or a markdown table mirroring the accuracy/time layout."""
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "markdown":
        return _emit_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")


def _emit_csv(report):
    cfg = report.config
    lines = ["method,l,accuracy,mean_time_s,p,m,discarded_w,rule,seed"]
    for r in report.rows:
        acc = "error" if r.error else f"{r.accuracy:.17g}"
        t = "error" if r.error else f"{r.mean_time_s:.6g}"
        lines.append(
            f"{r.method},{r.l},{acc},{t},{cfg.p},{cfg.m},{cfg.discarded_w},{cfg.rule},{cfg.seed}"
        )
    return "\n".join(lines) + "\n"


def _emit_markdown(report):
    cfg = report.config
    methods = list(cfg.methods)
    cell = {(r.method, r.l): r for r in report.rows}
    ls = sorted(set(r.l for r in report.rows))
    out = [
        f"| Property_Training number | {' | '.join(m.upper() for m in methods)} |",
        f"|---{'|---' * len(methods)}|",
    ]
    for kind, get in (
        ("Accuracy", lambda r: f"{100 * r.accuracy:.2f}%"),
        ("Running time", lambda r: f"{r.mean_time_s:.6f}"),
    ):
        for l in ls:
            vals = []
            for m in methods:
                r = cell.get((m, l))
                vals.append("error" if (r is None or r.error) else get(r))
            out.append(f"| {kind}_{l} | {' | '.join(vals)} |")
    out.append("")
    out.append(
        f"Parameters: p={cfg.p}, m={cfg.m or 'auto'}, discarded_w={cfg.discarded_w}, "
        f"rule={cfg.rule}, seed={cfg.seed}, repeats={cfg.repeats}, "
        f"dataset={report.dataset_fingerprint[:12]}"
    )
    return "\n".join(out) + "\n"


def parse_synth_spec(path):
    """Parse a flat key=value text file into a SynthSpec."""
    fields = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            fields[key.strip()] = value.strip()
    ints = ("c", "per_class", "ambient", "nuisance_dims", "seed")
    floats = ("class_sep", "within_spread", "nuisance_scale")
    kwargs = {}
    for k, v in fields.items():
        if k in ints:
            kwargs[k] = int(v)
        elif k in floats:
            kwargs[k] = float(v)
        else:
            raise ValueError(f"unknown synth spec key {k!r}")
    return SynthSpec(**kwargs)


def _build_parser():
    parser = argparse.ArgumentParser(prog="discpca", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    bench = sub.add_parser("bench", help="run the accuracy/timing benchmark")
    src = bench.add_mutually_exclusive_group(required=True)
    src.add_argument("--data", help="dataset directory (one subdirectory per class)")
    src.add_argument("--synth", help="synthetic generator spec file (key=value lines)")
    bench.add_argument("--methods", default="pca,dlda,dpca", help="comma-separated subset")
    bench.add_argument("--l", default="3", help="comma-separated training counts per class")
    bench.add_argument("--p", type=int, default=40, help="retained components (pca/dpca)")
    bench.add_argument("--m", type=int, default=0, help="discriminant count, 0 = auto")
    bench.add_argument("--discard-w", type=int, default=0, dest="discard_w")
    bench.add_argument("--rule", default="mean", choices=["mean", "max", "none"])
    bench.add_argument("--repeats", type=int, default=20)
    bench.add_argument("--seed", type=int, default=42)
    bench.add_argument("--split", default="first_l", choices=["first_l", "seeded_random"])
    bench.add_argument("--format", default="csv", choices=["csv", "markdown"])
    bench.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        synth = parse_synth_spec(args.synth) if args.synth else None
    except (OSError, ValueError, TypeError) as exc:
        print(f"error in synth spec: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = BenchConfig(
            data=args.data,
            synth=synth,
            methods=tuple(m.strip() for m in args.methods.split(",") if m.strip()),
            l_values=tuple(int(t) for t in args.l.split(",")),
            p=args.p,
            m=args.m,
            discarded_w=args.discard_w,
            rule=args.rule,
            repeats=args.repeats,
            seed=args.seed,
            split_strategy=args.split,
        )
    except ValueError as exc:
        print(f"error in config: {exc}", file=sys.stderr)
        return 2
    try:
        report = run_bench(cfg)
    except DiscPcaError as exc:
        print(f"error loading dataset: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = emit_report(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
