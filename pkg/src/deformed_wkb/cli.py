"""Command-line front end.

    deformed-wkb spectrum --potential harmonic --beta 0.1 --n-max 2
    deformed-wkb compare  --radial oscillator --l 1 --beta 0.01 --beta-prime 0.005
    deformed-wkb validity --potential well --width 1 --beta 1e-4 --n-max 5
    deformed-wkb plotdata --potential harmonic --beta 0.1 --level 3

All quantities are in units hbar = 1 with mass 1/2 unless ``--mass`` is given.
A ``--config`` file holds flat ``key = value`` lines (``#`` starts a comment);
flags given on the command line win over the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, fields
from typing import Optional

from . import potentials as pot
from . import reference as ref
from .deformation import DeformationParams
from .errors import NoReferenceAvailable, WKBError
from .quadrature import QuadratureSpec
from .quantizer import QuantizationProblem, first_level, solve_level, spectrum, wkb_wavefunction
from .radial3d import HYDROGEN, OSCILLATOR, RadialProblem, label, spectrum_3d, solve_level_3d
from .validity import assess, well_n_window

EXIT_OK, EXIT_CONFIG, EXIT_PARTIAL = 0, 1, 2
SPECTRUM_HEADER = ["n", "E_numeric", "E_reference", "abs_err", "rel_err", "validity"]
POTENTIALS = ("harmonic", "power", "well", "invsq")
RADIALS = (HYDROGEN, OSCILLATOR)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    potential: Optional[str] = None
    radial: Optional[str] = None
    gamma: float = 1.0
    power_n: int = 4
    width: float = 1.0
    l: int = 0
    beta: float = 0.0
    beta_prime: float = 0.0
    delta: Optional[float] = None
    n_max: int = 5
    mass: float = 0.5
    format: str = "csv"
    out: Optional[str] = None
    abs_tol: float = 1e-11
    rel_tol: float = 1e-10
    level: Optional[int] = None
    points: int = 401

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        known = {f.name: f for f in fields(cls)}
        values = {}
        for key, val in raw.items():
            name = key.strip().replace("-", "_")
            if name not in known:
                raise ConfigError(f"unknown config key {key!r}")
            values[name] = _coerce(name, val)
        cfg = cls(**values)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        return asdict(self)

    def validate(self):
        if (self.potential is None) == (self.radial is None):
            raise ConfigError("give exactly one of --potential or --radial")
        if self.potential is not None and self.potential not in POTENTIALS:
            raise ConfigError(f"--potential must be one of {POTENTIALS}")
        if self.radial is not None and self.radial not in RADIALS:
            raise ConfigError(f"--radial must be one of {RADIALS}")
        if self.format not in ("csv", "json"):
            raise ConfigError("--format must be csv or json")
        if self.n_max < 0:
            raise ConfigError("--n-max must be >= 0")
        if self.points < 2:
            raise ConfigError("--points must be >= 2")


_INTS = {"power_n", "l", "n_max", "level", "points"}
_FLOATS = {"gamma", "width", "beta", "beta_prime", "delta", "mass", "abs_tol", "rel_tol"}


def _coerce(name, val):
    if val is None:
        return None
    try:
        if name in _INTS:
            return int(val)
        if name in _FLOATS:
            return float(val)
    except (TypeError, ValueError):
        raise ConfigError(f"bad value for {name}: {val!r}") from None
    return str(val).strip()


def read_config_file(path) -> dict:
    raw = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        raw[key] = val
    return raw


# -- problem construction ----------------------------------------------------

def build_problem(cfg: RunConfig):
    try:
        d = DeformationParams(cfg.beta, cfg.beta_prime)
        quad = QuadratureSpec(abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol)
        if cfg.radial is not None:
            kw = {} if cfg.delta is None else {"delta": cfg.delta}
            return RadialProblem(cfg.radial, l=cfg.l, gamma=cfg.gamma, deformation=d, quad=quad, **kw)
        model = {
            "harmonic": lambda: pot.Harmonic(),
            "power": lambda: pot.PowerLaw(cfg.gamma, cfg.power_n),
            "well": lambda: pot.InfiniteWell(cfg.width),
            "invsq": lambda: pot.InverseSquare(cfg.gamma),
        }[cfg.potential]()
        return QuantizationProblem(model, d, mass=cfg.mass, delta=cfg.delta, quad=quad)
    except WKBError as exc:
        raise ConfigError(str(exc)) from None


# -- formatting --------------------------------------------------------------

def fmt(value):
    """17 significant digits in scientific notation; None becomes an empty cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.16e}"
    return str(value)


def render(columns, rows, fmt_name, comments=(), meta=None, command="", cfg=None):
    if fmt_name == "json":
        doc = {"command": command, "config": cfg.to_dict() if cfg else None,
               "columns": columns, "rows": rows, "meta": meta or {}}
        return json.dumps(doc, indent=2, allow_nan=True) + "\n"
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row.get(c)) for c in columns])
    return buf.getvalue()


# -- commands ----------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig):
    prob = build_problem(cfg)
    if isinstance(prob, RadialProblem):
        table = spectrum_3d(prob, cfg.n_max)
    else:
        table = spectrum(prob, cfg.n_max)
    rows = []
    for r in table.rows:
        row = {k: getattr(r, k) for k in SPECTRUM_HEADER}
        if r.error is not None:
            row["validity"] = f"error: {r.error}"
        rows.append(row)
    partial = bool(table.failed)
    meta = {"reference_kind": table.reference_kind, "failed_rows": len(table.failed)}
    return SPECTRUM_HEADER, rows, [], meta, partial


def _gap(a, b):
    if a is None or b is None:
        return None, None
    d = abs(a - b)
    return d, (d / abs(b) if b != 0 else None)


def cmd_compare(cfg: RunConfig):
    prob = build_problem(cfg)
    rows, partial, comments = [], False, []
    if isinstance(prob, RadialProblem):
        d = prob.deformation
        columns = ["n", "l", "n_p", "E_numeric", "E_linear", "abs_err", "rel_err"]
        if prob.kind == HYDROGEN:
            columns.append("benczik_term")
        else:
            columns.append("chang_gap")
            comments.append(f"chang_gap = 2 beta - beta'/2 = {fmt(ref.chang_gap(d.beta, d.beta_prime))}")
        for n_p in range(cfg.n_max + 1):
            n = label(prob, n_p)
            row = {"n": n, "l": prob.l, "n_p": n_p}
            try:
                row["E_numeric"] = solve_level_3d(prob, n_p)
            except WKBError as exc:
                row["error"] = str(exc)
                partial = True
            if prob.kind == HYDROGEN:
                row["E_linear"] = ref.hydrogen_linear(n, prob.l, prob.gamma, d.beta, d.beta_prime)
                if prob.l >= 1:
                    row["benczik_term"] = ref.benczik_extra_term(n, prob.l, prob.gamma, d.beta, d.beta_prime)
            else:
                row["E_linear"] = ref.osc3d_linear(n, prob.l, d.beta, d.beta_prime)
                row["chang_gap"] = ref.chang_gap(d.beta, d.beta_prime)
            row["abs_err"], row["rel_err"] = _gap(row.get("E_numeric"), row["E_linear"])
            rows.append(row)
        return columns, rows, comments, {}, partial

    model, beta, delta = prob.potential, prob.beta, prob.delta
    if prob.mass != 0.5:
        raise NoReferenceAvailable("closed-form references are tabulated for mass 1/2 only")
    if isinstance(model, pot.Harmonic):
        columns = ["n", "E_numeric", "E_wkb_closed", "abs_err_wkb", "E_exact", "rel_gap_exact",
                   "gap_observed", "gap_predicted"]
    elif isinstance(model, pot.PowerLaw):
        columns = ["n", "E_numeric", "E_undeformed", "E_linear", "abs_err", "rel_err"]
    elif isinstance(model, pot.InfiniteWell):
        columns = ["n", "E_numeric", "E_linear", "abs_err", "rel_err", "E_linear_other_delta"]
        lo, hi = well_n_window(model.width, beta)
        comments.append(f"n_window = ({lo:g}, {hi:g})")
    else:
        if beta == 0:
            raise NoReferenceAvailable("no bound states of the inverse-square potential at beta = 0")
        columns = ["n", "E_numeric", "E_small_beta", "abs_err", "rel_err", "E_beta",
                   "phase_closed", "phase_target"]
    for n in range(first_level(prob), cfg.n_max + 1):
        row = {"n": n}
        try:
            E = row["E_numeric"] = solve_level(prob, n)
        except WKBError as exc:
            row["error"] = str(exc)
            partial = True
            E = None
        if isinstance(model, pot.Harmonic):
            row["E_wkb_closed"] = ref.ho_wkb_closed(n, beta)
            row["E_exact"] = ref.ho_exact_kempf(n, beta)
            row["abs_err_wkb"], _ = _gap(E, row["E_wkb_closed"])
            if E is not None:
                row["gap_observed"] = row["E_exact"] - E
                row["rel_gap_exact"] = row["gap_observed"] / row["E_exact"]
            row["gap_predicted"] = ref.ho_gap_series(n, beta)
        elif isinstance(model, pot.PowerLaw):
            row["E_undeformed"] = ref.anharmonic_undeformed(n, model.gamma, model.N)
            row["E_linear"] = ref.anharmonic_linear(n, model.gamma, model.N, beta)
            row["abs_err"], row["rel_err"] = _gap(E, row["E_linear"])
        elif isinstance(model, pot.InfiniteWell):
            row["E_linear"] = ref.well_wkb(n, model.width, beta, delta)
            row["abs_err"], row["rel_err"] = _gap(E, row["E_linear"])
            row["E_linear_other_delta"] = ref.well_wkb(n, model.width, beta, 0.5 if delta == 0 else 0.0) \
                if not (delta != 0 and n == 0) else None
        else:
            row["E_small_beta"] = ref.inverse_square_small_beta(n, model.gamma, beta, delta)
            row["abs_err"], row["rel_err"] = _gap(E, row["E_small_beta"])
            row["phase_target"] = 2 * math.pi * (n + delta)
            if E is not None:
                row["E_beta"] = E * beta
                if 1 + E * beta > 0:
                    row["phase_closed"] = ref.inverse_square_phase_closed(E, model.gamma, beta)
        rows.append(row)
    return columns, rows, comments, {}, partial


def cmd_validity(cfg: RunConfig):
    prob = build_problem(cfg)
    if isinstance(prob, RadialProblem):
        raise ConfigError("validity diagnostics are defined for 1D potentials")
    columns = ["n", "E_numeric", "max_metric", "wavelength", "lambda_min", "lambda_max",
               "window_metric", "window_empty", "driver", "verdict"]
    comments, meta = [], {}
    if isinstance(prob.potential, pot.InfiniteWell):
        lo, hi = well_n_window(prob.potential.width, prob.beta)
        comments.append(f"n_window = ({lo:g}, {hi:g})")
        meta["n_window"] = [lo, hi]
    rows, partial = [], False
    for n in range(first_level(prob), cfg.n_max + 1):
        row = {"n": n}
        try:
            E = row["E_numeric"] = solve_level(prob, n)
            rep = assess(prob, E)
        except WKBError as exc:
            row["verdict"] = f"error: {exc}"
            partial = True
            rows.append(row)
            continue
        row.update(max_metric=rep.max_metric, wavelength=rep.wavelength,
                   lambda_min=rep.window[0], lambda_max=rep.window[1],
                   window_metric=rep.window_metric, window_empty=rep.window_empty,
                   driver=rep.driver, verdict=rep.verdict)
        rows.append(row)
    return columns, rows, comments, meta, partial


def cmd_plotdata(cfg: RunConfig):
    prob = build_problem(cfg)
    if cfg.level is None:
        columns, rows, comments, meta, partial = cmd_spectrum(cfg)
        keep = ["n", "E_numeric", "E_reference"]
        return keep, [{k: r.get(k) for k in keep} for r in rows], comments, meta, partial
    if isinstance(prob, RadialProblem):
        raise ConfigError("wavefunction samples are available for 1D potentials only")
    E = solve_level(prob, cfg.level)
    tp = pot.find_turning_points(prob.potential, E)
    xs = [tp.x1 + tp.width * (i + 0.5) / cfg.points for i in range(cfg.points)]
    psi = wkb_wavefunction(prob, E, xs)
    rows = [{"x": x, "psi": float(y)} for x, y in zip(xs, psi)]
    return ["x", "psi"], rows, [f"level n = {cfg.level}, E = {fmt(E)}"], {"E": E}, False


COMMANDS = {
    "spectrum": cmd_spectrum,
    "compare": cmd_compare,
    "validity": cmd_validity,
    "plotdata": cmd_plotdata,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def make_parser():
    common = _Parser(add_help=False)
    S = argparse.SUPPRESS  # absent flags must not shadow config-file values
    common.add_argument("--config", default=S, help="file of key = value lines; flags override it")
    common.add_argument("--potential", choices=POTENTIALS, default=S, help="1D potential")
    common.add_argument("--radial", choices=RADIALS, default=S, help="3D radial problem")
    floats = {
        "--gamma": "potential strength",
        "--width": "well width",
        "--beta": "deformation parameter beta",
        "--beta-prime": "second 3D deformation parameter",
        "--delta": "quantization offset (default by potential)",
        "--mass": "particle mass; closed forms need 0.5",
        "--abs-tol": "quadrature absolute tolerance",
        "--rel-tol": "quadrature relative tolerance",
    }
    for flag, text in floats.items():
        common.add_argument(flag, type=float, default=S, help=text)
    ints = {
        "--power-n": "even exponent N of the power law",
        "--l": "angular momentum for radial problems",
        "--n-max": "highest level (radial: highest n_p)",
        "--level": "level whose wavefunction plotdata samples",
        "--points": "number of plotdata samples",
    }
    for flag, text in ints.items():
        common.add_argument(flag, type=int, default=S, help=text)
    common.add_argument("--format", choices=("csv", "json"), default=S)
    common.add_argument("--out", default=S, help="write to this file instead of stdout")
    parser = _Parser(prog="deformed-wkb", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def load_config(argv):
    ns = vars(make_parser().parse_args(argv))
    command = ns.pop("command")
    raw = {}
    if "config" in ns:
        raw.update(read_config_file(ns.pop("config")))
    raw.update(ns)
    return command, RunConfig.from_dict(raw)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        command, cfg = load_config(argv)
        columns, rows, comments, meta, partial = COMMANDS[command](cfg)
    except (ConfigError, NoReferenceAvailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except WKBError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARTIAL
    text = render(columns, rows, cfg.format, comments, meta, command, cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_PARTIAL if partial else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
