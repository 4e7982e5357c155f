"""
Command-line interface

`tfweyl <command> [options]` with the commands

- `identities`: run the identity suite, write `identities.json` and `identities.csv`.
- `diagnose`: run a decay test on a symbol, write the report JSON and the mu_star CSV.
- `operator`: build an operator matrix, write it in the field format with its spectrum CSV.
- `weights`: check the weight conditions, write `weights.json`.
- `demo`: run one of the worked cases (chirp-weyl, rank-one, localization-identity,
  band-limited, battery).

A JSON file given with `--config` fills a `RunConfig`; flags override its values and the
merged configuration is written into every output. Exit codes: 0 when every requested
check passes, 1 on a failed check or a numerical error, 2 on a configuration error, 3 on
an I/O error.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from . import __version__
from .diagnostics import (PAIRED_WEIGHTS, Verdict, band_limited_localization, convolutor_test, diagnose_pair,
                          implication_chain, localization_compactness_test, multiplier_test, tail_test,
                          weyl_compactness_test)
from .exceptions import ConfigError, TfWeylError
from .grids import Fixture, Grid, SampledFunction, SpaceTag, load_field, sample
from .identities import (check_band_limited, check_chirp_constant, check_localization, check_rank_one,
                         identities_frame, identities_json, run_identities)
from .operators import (convolution_operator, localization_matrix, localization_via_weyl, multiplication_operator,
                        weyl_matrix)
from .weights import Weight, check_conditions

logger = logging.getLogger(__name__)

COMMANDS = ("identities", "diagnose", "operator", "weights", "demo")
DEMO_CASES = ("chirp-weyl", "rank-one", "localization-identity", "band-limited", "battery")
TESTS = ("multiplier", "convolutor", "weyl_compactness", "localization_compactness", "tail")
OPERATORS = ("weyl", "localization", "localization_weyl", "multiplication", "convolution")
TIME_FREQ = (SpaceTag.TIME, SpaceTag.FREQ)
TEST_FUNCTIONS = {"multiplier": multiplier_test, "convolutor": convolutor_test,
                  "weyl_compactness": weyl_compactness_test,
                  "localization_compactness": localization_compactness_test}

# default (N, L) per command
DEFAULT_GRIDS = {"identities": (128, 12.0), "operator": (128, 12.0), "diagnose": (64, 8.0), "demo": (64, 8.0),
                 "weights": (128, 12.0)}


def _gaussian():
    return {"kind": "gaussian"}


def _gaussian_2d():
    return {"kind": "gaussian", "center": [0.0, 0.0]}


@dataclass
class RunConfig:
    """Everything a run depends on.

    Fixture entries (`f`, `g`, `psi`, `gamma`, `a`) are `Fixture` JSON forms or
    `{"file": path}` for a field saved with `save_field`. `n` and `l` default per command.
    """
    command: str = "identities"
    n: int = None
    l: float = None
    stride: int = 4
    weight: dict = None
    lambda_list: list = field(default_factory=lambda: [0.5, 1.0, 2.0, 4.0])
    mu_max: float = 16.0
    mu_step: float = 0.5
    f: dict = field(default_factory=_gaussian)
    g: dict = field(default_factory=_gaussian)
    psi: dict = field(default_factory=_gaussian)
    gamma: dict = field(default_factory=_gaussian)
    a: dict = field(default_factory=_gaussian_2d)
    test: str = "weyl_compactness"
    operator: str = "weyl"
    case: str = "battery"
    tail_lambda: float = 0.0
    tail_radius: float = 1.0
    out: str = "."
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command {self.command!r}, use one of {list(COMMANDS)}")
        if self.test not in TESTS:
            raise ConfigError(f"Unknown test {self.test!r}, use one of {list(TESTS)}")
        if self.operator not in OPERATORS:
            raise ConfigError(f"Unknown operator {self.operator!r}, use one of {list(OPERATORS)}")
        if self.case not in DEMO_CASES:
            raise ConfigError(f"Unknown demo case {self.case!r}, use one of {list(DEMO_CASES)}")
        n, l = DEFAULT_GRIDS[self.command]
        self.n = int(self.n if self.n is not None else n)
        self.l = float(self.l if self.l is not None else l)
        if not self.mu_step > 0 or self.mu_max < 0:
            raise ConfigError(f"Invalid mu grid: max {self.mu_max}, step {self.mu_step}")

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - names)
        if unknown:
            raise ConfigError(f"Unknown configuration keys {unknown}")
        return cls(**data)

    def to_dict(self):
        return asdict(self)

    @property
    def grid(self):
        return Grid(((self.n, self.l),))

    @property
    def mu_grid(self):
        return np.arange(0, self.mu_max + self.mu_step / 2, self.mu_step)

    def weight_object(self, default="log1p"):
        spec = self.weight if self.weight is not None else default
        try:
            return Weight.from_dict(spec)
        except TfWeylError as error:
            raise ConfigError(str(error))


def build_parser():
    parser = argparse.ArgumentParser(prog="tfweyl", description="Time-frequency identities, operators and decay "
                                                                 "diagnostics.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="JSON configuration file, flags override its values")
    parser.add_argument("--n", type=int, help="Grid size (power of two)")
    parser.add_argument("--l", type=float, help="Grid half extent")
    parser.add_argument("--stride", type=int, help="Stride of the 4-d lattice")
    parser.add_argument("--weight", "--kind", dest="weight", help="Weight family: log1p, power or logpower")
    parser.add_argument("--a", type=float, help="Weight exponent")
    parser.add_argument("--c", type=float, help="Weight multiplier")
    parser.add_argument("--lambda", dest="lambda_list", help="Comma-separated lambda values")
    parser.add_argument("--mu-max", dest="mu_max", type=float)
    parser.add_argument("--mu-step", dest="mu_step", type=float)
    parser.add_argument("--test", choices=TESTS, help="Decay test of `diagnose`")
    parser.add_argument("--operator", choices=OPERATORS, help="Operator of `operator`")
    parser.add_argument("--case", choices=DEMO_CASES, help="Case of `demo`")
    parser.add_argument("--out", help="Output directory")
    parser.add_argument("--seed", type=int)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for details")
    return parser


def load_config_file(path):
    """Raw JSON configuration, validated later by `RunConfig.from_dict`."""
    with open(path) as file:
        try:
            data = json.load(file)
        except json.JSONDecodeError as error:
            raise ConfigError(f"{path} is not valid JSON: {error}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    return data


def config_from_args(args):
    """Merge the `--config` file and the flags into a RunConfig."""
    data = load_config_file(args.config) if args.config else {}
    data["command"] = args.command
    for key in ("n", "l", "stride", "mu_max", "mu_step", "test", "operator", "case", "out", "seed"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.lambda_list is not None:
        try:
            data["lambda_list"] = [float(v) for v in args.lambda_list.split(",")]
        except ValueError:
            raise ConfigError(f"--lambda expects comma-separated numbers, but found {args.lambda_list!r}")
    if args.weight is not None or args.a is not None or args.c is not None:
        weight = dict(data.get("weight") or {"kind": "log1p"})
        if args.weight is not None:
            weight["kind"] = args.weight
        if args.a is not None:
            weight["a"] = args.a
        if args.c is not None:
            weight["c"] = args.c
        data["weight"] = weight
    return RunConfig.from_dict(data)


class Inputs:
    """Fixture and file inputs of a run, with the content hashes of loaded files."""

    def __init__(self):
        self.hashes = {}

    def get(self, name, spec, grid, tags=None):
        if "file" in spec:
            f = load_field(spec["file"])
            self.hashes[name] = f.provenance.get("sha256")
            if f.grid != grid:
                raise ConfigError(f"Input {name} lives on {f.grid.axes}, expected {grid.axes}")
            return f
        try:
            fixture = Fixture.from_dict(spec)
        except (KeyError, ValueError) as error:
            raise ConfigError(f"Invalid fixture {name}: {error}")
        return sample(fixture, grid, tags=tags, check_decay=False)


def _write_json(path, payload):
    with open(path, "w") as file:
        file.write(json.dumps(payload, sort_keys=True, indent=2, default=str))
    logger.info("wrote %s", path)


def _echo(config, inputs=None):
    return {"config": config.to_dict(), "inputs": dict(inputs.hashes) if inputs else {}, "version": __version__}


def run_identities_command(config):
    checks = run_identities(config.n, config.l, config.weight_object(), config.seed)
    path = os.path.join(config.out, "identities.json")
    with open(path, "w") as file:
        file.write(identities_json(checks, **_echo(config)))
    identities_frame(checks).to_csv(os.path.join(config.out, "identities.csv"), index=False)
    failed = [c.name for c in checks if not c.passed]
    if failed:
        logger.warning("failed identities: %s", ", ".join(failed))
    return not failed


def run_diagnose_command(config):
    inputs = Inputs()
    grid = config.grid
    common = {"stride": config.stride}
    if config.test == "tail":
        a = inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ)
        curve, passed = tail_test(a, lam=config.tail_lambda, radius=config.tail_radius,
                                  weight=config.weight_object(), **common)
        stem = os.path.join(config.out, "diagnose_tail")
        curve.to_csv(stem + ".csv", index=False)
        _write_json(stem + ".json", dict(_echo(config, inputs), passed=passed))
        return passed

    sweep = dict(common, lambda_list=config.lambda_list, mu_grid=config.mu_grid)
    if config.test == "multiplier":
        args = (inputs.get("f", config.f, grid),)
    elif config.test == "convolutor":
        args = (inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ),)
    elif config.test == "weyl_compactness":
        args = (inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ),)
    else:
        args = (inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ), inputs.get("psi", config.psi, grid),
                inputs.get("gamma", config.gamma, grid))
    if config.weight is None:
        reports = diagnose_pair(config.test, *args, **sweep)
    else:
        reports = (TEST_FUNCTIONS[config.test](*args, weight=config.weight_object(), **sweep),)
    echo = _echo(config, inputs)
    for report in reports:
        report.save(os.path.join(config.out, f"diagnose_{config.test}_{report.weight['kind']}.json"), **echo)
        logger.info("%s under %s: %s", config.test, report.weight["kind"], report.verdict.value)
    return all(report.verdict is not Verdict.FAIL for report in reports)


def run_operator_command(config):
    inputs = Inputs()
    grid = config.grid
    if config.operator == "weyl":
        T = weyl_matrix(inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ))
    elif config.operator == "multiplication":
        T = multiplication_operator(inputs.get("f", config.f, grid))
    elif config.operator == "convolution":
        T = convolution_operator(inputs.get("f", config.f, grid))
    else:
        psi = inputs.get("psi", config.psi, grid)
        gamma = inputs.get("gamma", config.gamma, grid)
        if config.operator == "localization":
            T = localization_matrix(inputs.get("a", config.a, grid.stft_lattice(), TIME_FREQ), psi, gamma)
        else:
            T = localization_via_weyl(inputs.get("a", config.a, grid.symbol_grid(), TIME_FREQ), psi, gamma)
    stem = os.path.join(config.out, f"operator_{config.operator}")
    digest = T.save(stem + ".tfw")
    T.spectrum_frame().to_csv(stem + "_spectrum.csv", index=False)
    _write_json(stem + ".json", dict(_echo(config, inputs), sha256=digest))
    return True


def run_weights_command(config):
    w = config.weight_object()
    report = check_conditions(w)
    _write_json(os.path.join(config.out, "weights.json"),
                dict(_echo(config), weight=w.to_dict(), conditions=report.to_dict()))
    return report.all_ok


def _strip_symbol(grid, a, b):
    """Indicator of the strip xi in [-2b, -2a] on a 2-d grid."""
    _, xi = grid.mesh()
    values = ((xi >= -2 * b) & (xi <= -2 * a)).astype(float)
    return SampledFunction(grid, values, truncated=True, provenance={"strip": [-2 * b, -2 * a]})


def demo_case(config):
    """Run one worked case.

    Returns
    -------
    passed : bool
    payload : dict
    """
    case = config.case
    grid = config.grid
    sweep = {"lambda_list": config.lambda_list, "mu_grid": config.mu_grid, "stride": config.stride}
    identity_grid = Grid(((128, 12.0),))
    if case == "chirp-weyl":
        checks = check_chirp_constant(identity_grid)
        chirp = sample(Fixture.chirp_symbol(Fixture.gaussian()), grid.symbol_grid(), tags=TIME_FREQ)
        reports = [weyl_compactness_test(chirp, weight=w, **sweep) for w in _paired(config)]
        passed = all(c.passed for c in checks) and all(r.verdict is Verdict.FAIL for r in reports)
        return passed, {"checks": [c.to_dict() for c in checks], "reports": [r.to_dict() for r in reports]}
    if case in ("rank-one", "localization-identity"):
        checks = (check_rank_one if case == "rank-one" else check_localization)(identity_grid)
        return all(c.passed for c in checks), {"checks": [c.to_dict() for c in checks]}
    if case == "band-limited":
        a, b = 0.5, 2.0
        checks = check_band_limited(identity_grid, a, b)
        reports = [r for w in _paired(config) for r in band_limited_localization(grid, weight=w, **sweep)]
        strip = _strip_symbol(grid.symbol_grid(), a, b)
        multipliers = [multiplier_test(strip, weight=w, **sweep) for w in _paired(config)]
        passed = (all(c.passed for c in checks) and all(r.verdict is Verdict.COMPACT_LIKE for r in reports)
                  and all(r.verdict is Verdict.FAIL for r in multipliers))
        return passed, {"checks": [c.to_dict() for c in checks], "localization": [r.to_dict() for r in reports],
                        "strip_multiplier": [r.to_dict() for r in multipliers]}
    return run_battery(config)


def _paired(config):
    if config.weight is not None:
        return (config.weight_object(),)
    return PAIRED_WEIGHTS


BATTERY = {
    "gaussian_wigner": (Fixture.gaussian((0.0, 0.0), np.sqrt(0.5)),
                        {"convolutor": None, "weyl": Verdict.COMPACT_LIKE, "localization": Verdict.COMPACT_LIKE}),
    "constant": (Fixture.constant(),
                 {"convolutor": Verdict.FAIL, "weyl": Verdict.CONTINUOUS_LIKE,
                  "localization": Verdict.CONTINUOUS_LIKE}),
    "chirp": (Fixture.chirp_symbol(Fixture.gaussian()),
              {"convolutor": None, "weyl": Verdict.FAIL, "localization": Verdict.COMPACT_LIKE}),
}


def _matches(report, expected):
    # None stands for "anything but FAIL"
    if expected is None:
        return report.verdict is not Verdict.FAIL
    return report.verdict is expected


def run_battery(config):
    """Implication chain on the Gaussian Wigner symbol, a = 1 and the chirp, under every weight."""
    sweep = {"lambda_list": config.lambda_list, "mu_grid": config.mu_grid, "stride": config.stride}
    passed = True
    payload = {}
    for name, (symbol, expected) in BATTERY.items():
        for w in _paired(config):
            chain = implication_chain(symbol, weight=w, base=config.grid,
                                      localization_base=Grid(((2 * config.n, 2 * config.l),)), **sweep)
            verdicts = {"convolutor": chain.convolutor, "weyl": chain.weyl, "localization": chain.localization}
            ok = chain.consistent and all(_matches(verdicts[k], expected[k]) for k in expected)
            logger.info("battery %s under %s: %s", name, w.kind.value,
                        {k: r.verdict.value for k, r in verdicts.items()})
            payload[f"{name}_{w.kind.value}"] = dict(chain.to_dict(), matches_expected=ok)
            passed = passed and ok
    return passed, payload


def run_demo_command(config):
    passed, payload = demo_case(config)
    _write_json(os.path.join(config.out, f"demo_{config.case}.json"), dict(_echo(config), passed=passed, **payload))
    return passed


RUNNERS = {"identities": run_identities_command, "diagnose": run_diagnose_command, "operator": run_operator_command,
           "weights": run_weights_command, "demo": run_demo_command}


def run(config):
    """Execute a configuration.

    Returns
    -------
    code : int
        0 when every requested check passes, 1 otherwise.
    """
    os.makedirs(config.out, exist_ok=True)
    logger.info("running %s on grid (%d, %g)", config.command, config.n, config.l)
    return 0 if RUNNERS[config.command](config) else 1


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return 2 if exit_.code else 0
    logging.basicConfig(level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        config = config_from_args(args)
    except ConfigError as error:
        logger.error("configuration error: %s", error)
        return 2
    except OSError as error:
        logger.error("cannot read configuration: %s", error)
        return 3
    try:
        return run(config)
    except ConfigError as error:
        logger.error("configuration error: %s", error)
        return 2
    except TfWeylError as error:
        logger.error("numerical failure: %s", error)
        return 1
    except OSError as error:
        logger.error("I/O error: %s", error)
        return 3


if __name__ == "__main__":
    sys.exit(main())
