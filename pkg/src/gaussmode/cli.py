"""Command-line interface.

Subcommands:

* analyze   full entanglement report of a coefficient triple
* squeezed  generate a two-mode squeezed state and analyze it
* circuit   run an optical-element sequence on the vacuum, step by step
* sweep     vary one circuit parameter and tabulate the entanglement
* verify    closed forms against the numerical density-matrix oracle

Exit codes: 0 success, 2 invalid input, 3 circuit left the normalizable
regime, 4 verification failure or an unusable grid. Errors are emitted as
JSON objects on stdout so pipelines can branch on them.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import entanglement, optics, oracle, serialize, state
from .errors import (
    GaussmodeError,
    GridTooCoarseError,
    InvalidInputError,
    KernelNotPhysicalError,
    NonFiniteError,
    NonNormalizableError,
    NonNormalizableResultError,
    NotSymmetricError,
)

_ENV_TOL = "GAUSSMODE_TOL"
_DEFAULT_TOL = 1e-6

_EXIT_CODES = {
    InvalidInputError: 2,
    NonFiniteError: 2,
    NonNormalizableError: 2,
    NonNormalizableResultError: 3,
    GridTooCoarseError: 4,
    KernelNotPhysicalError: 4,
    NotSymmetricError: 4,
}


# ---------------------------------------------------------------------------
# input handling

def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    stripped = source.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return source
    try:
        with open(source, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read input {source!r}: {exc}") from exc


def _parse_json(source: str):
    import json

    try:
        return json.loads(_read_source(source))
    except ValueError as exc:
        raise InvalidInputError(f"input is not valid JSON: {exc}") from exc


def _complex_from_pair(name: str, value) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(part, (int, float)) and not isinstance(part, bool) for part in value)
    ):
        raise InvalidInputError(f"{name} must be a [re, im] pair, got {value!r}")
    return complex(value[0], value[1])


def _coefficients_from_obj(obj) -> state.QuadratureCoefficients:
    if isinstance(obj, dict) and "coefficients" in obj:
        obj = obj["coefficients"]
    if not isinstance(obj, dict):
        raise InvalidInputError("expected an object with alpha, beta, gamma")
    missing = {"alpha", "beta", "gamma"} - set(obj)
    if missing:
        raise InvalidInputError(f"missing coefficient(s): {sorted(missing)}")
    return state.validate(
        _complex_from_pair("alpha", obj["alpha"]),
        _complex_from_pair("beta", obj["beta"]),
        _complex_from_pair("gamma", obj["gamma"]),
    )


def _circuit_from_obj(obj) -> list[optics.OpticalElement]:
    if isinstance(obj, dict):
        obj = obj.get("circuit")
    if not isinstance(obj, list):
        raise InvalidInputError('expected {"circuit": [elements...]} or a JSON array')
    if not obj:
        raise InvalidInputError("circuit must contain at least one element")
    return [optics.element_from_dict(item) for item in obj]


# ---------------------------------------------------------------------------
# report assembly

def _coefficients_dict(coeffs: state.QuadratureCoefficients) -> dict:
    return {
        "alpha": [coeffs.alpha.real, coeffs.alpha.imag],
        "beta": [coeffs.beta.real, coeffs.beta.imag],
        "gamma": [coeffs.gamma.real, coeffs.gamma.imag],
    }


def _entanglement_section(coeffs: state.QuadratureCoefficients) -> dict:
    dets = entanglement.determinants(state.covariance(coeffs))
    simon = entanglement.simon_criterion(dets)
    report = entanglement.entanglement_of_formation(coeffs)
    return {
        "e_s": simon.e_s,
        "entangled": simon.entangled,
        "omega": report.omega,
        "e_f_nats": report.e_f_nats,
        "e_f_bits": report.e_f_bits,
        "heisenberg_residual": report.heisenberg_residual,
    }


def _full_report(coeffs: state.QuadratureCoefficients) -> dict:
    cov = state.covariance(coeffs)
    dets = entanglement.determinants(cov)
    return {
        "coefficients": _coefficients_dict(coeffs),
        "delta_sq": coeffs.delta_sq,
        "normalization": state.normalization(coeffs),
        "moments": cov.moment_dict(),
        "determinants": {
            "det_a": dets.det_a,
            "det_b": dets.det_b,
            "det_c": dets.det_c,
            "det_v": dets.det_v,
            "tr_term": dets.tr_term,
        },
        "report": _entanglement_section(coeffs),
    }


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for key, value in obj.items():
            yield from _flatten(value, f"{prefix}{key}.")
    elif isinstance(obj, (list, tuple)) and len(obj) == 2 and all(
        isinstance(v, (int, float)) for v in obj
    ):
        yield f"{prefix}re", obj[0]
        yield f"{prefix}im", obj[1]
    else:
        yield prefix.rstrip("."), obj


def _emit_keyvalue_csv(report: dict) -> str:
    lines = ["key,value"]
    for key, value in _flatten(report):
        lines.append(serialize.csv_line([key, value]))
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(_emit_keyvalue_csv(report))
    else:
        sys.stdout.write(serialize.dumps(report))


# ---------------------------------------------------------------------------
# subcommands

def _cmd_analyze(args) -> int:
    coeffs = _coefficients_from_obj(_parse_json(args.input))
    _emit(_full_report(coeffs), args.format)
    if args.plot:
        from . import plots

        plots.save_figure(plots.analysis_figure(coeffs), args.plot)
    return 0


def _cmd_squeezed(args) -> int:
    coeffs = optics.two_mode_squeezed(optics.SqueezeParams(args.r, args.phi))
    _emit(_full_report(coeffs), args.format)
    if args.plot:
        from . import plots

        plots.save_figure(plots.analysis_figure(coeffs), args.plot)
    return 0


def _trajectory_step(index: int, element, coeffs) -> dict:
    return {
        "step": index,
        "element": optics.element_to_dict(element),
        "coefficients": _coefficients_dict(coeffs),
        "report": _entanglement_section(coeffs),
    }


def _circuit_csv(steps: list[dict]) -> str:
    lines = ["step,kind,e_s,omega,e_f_nats"]
    for step in steps:
        report = step["report"]
        lines.append(
            serialize.csv_line(
                [
                    step["step"],
                    step["element"]["kind"],
                    report["e_s"],
                    report["omega"],
                    report["e_f_nats"],
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_circuit(args) -> int:
    elements = _circuit_from_obj(_parse_json(args.input))
    steps: list[dict] = []
    error = None
    current = state.vacuum()
    for index, element in enumerate(elements, start=1):
        try:
            current = optics.apply_elements(current, [element])
        except NonNormalizableResultError as exc:
            error = {"code": exc.code, "message": str(exc), "step": index}
            break
        steps.append(_trajectory_step(index, element, current))
    if args.format == "csv":
        sys.stdout.write(_circuit_csv(steps))
    else:
        payload: dict = {"trajectory": steps}
        if error is not None:
            payload["error"] = error
        sys.stdout.write(serialize.dumps(payload))
    if args.plot and steps:
        from . import plots

        plots.save_figure(plots.circuit_figure(steps), args.plot)
    return 3 if error is not None else 0


_SWEEP_FIELDS = {"r", "theta", "phi"}


def _sweep_target(elements: list[dict], parameter: str, target) -> int:
    if target is not None:
        if not 0 <= target < len(elements):
            raise InvalidInputError(
                f"target index {target} outside circuit of length {len(elements)}"
            )
        if parameter not in elements[target]:
            raise InvalidInputError(
                f"element {target} ({elements[target]['kind']}) has no parameter {parameter!r}"
            )
        return target
    for index, element in enumerate(elements):
        if parameter in element:
            return index
    raise InvalidInputError(f"no circuit element carries parameter {parameter!r}")


def _cmd_sweep(args) -> int:
    if args.steps < 2:
        raise InvalidInputError(f"steps must be >= 2, got {args.steps}")
    if not args.start < args.stop:
        raise InvalidInputError(
            f"start must be below stop, got [{args.start}, {args.stop}]"
        )
    raw = [optics.element_to_dict(e) for e in _circuit_from_obj(_parse_json(args.input))]
    index = _sweep_target(raw, args.param, args.target)
    rows = []
    for value in np.linspace(args.start, args.stop, args.steps):
        spec = [dict(item) for item in raw]
        spec[index][args.param] = float(value)
        coeffs = optics.apply_circuit([optics.element_from_dict(item) for item in spec])
        section = _entanglement_section(coeffs)
        rows.append(
            {
                "param": args.param,
                "value": float(value),
                "e_s": section["e_s"],
                "omega": section["omega"],
                "e_f_nats": section["e_f_nats"],
            }
        )
    if args.format == "json":
        sys.stdout.write(serialize.dumps({"rows": rows}))
    else:
        lines = ["param,value,e_s,omega,e_f_nats"]
        for row in rows:
            lines.append(serialize.csv_line(list(row.values())))
        sys.stdout.write("\n".join(lines) + "\n")
    if args.plot:
        from . import plots

        plots.save_figure(plots.sweep_figure(rows, args.param), args.plot)
    return 0


def _verify_grid(args, coeffs) -> oracle.GridSpec | None:
    points = args.grid_n if args.grid_n is not None else 512
    if args.grid_l is not None:
        return oracle.GridSpec(half_width=args.grid_l, points=points)
    if args.grid_n is not None:
        return oracle.default_grid(coeffs, points=points)
    return None


def _cmd_verify(args) -> int:
    if (args.input is None) == (args.seed is None):
        raise InvalidInputError("provide exactly one of --input or --seed")
    if args.count < 1:
        raise InvalidInputError(f"count must be >= 1, got {args.count}")
    tol = args.tol
    if tol is None:
        raw = os.environ.get(_ENV_TOL)
        try:
            tol = float(raw) if raw is not None else _DEFAULT_TOL
        except ValueError as exc:
            raise InvalidInputError(f"bad {_ENV_TOL} value {raw!r}") from exc
    if not tol > 0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")

    if args.input is not None:
        states = [_coefficients_from_obj(_parse_json(args.input))]
    else:
        rng = np.random.default_rng(args.seed)
        states = []
        # the batch verifies only states the audit grid can resolve
        for _ in range(10_000):
            if len(states) == args.count:
                break
            candidate = state.random_coefficients(rng, max_omega=5.0)
            if oracle.audit_certifiable(candidate):
                states.append(candidate)
        else:
            raise InvalidInputError("could not sample enough resolvable states")

    reports = []
    passed = True
    for coeffs in states:
        report = oracle.verification_report(coeffs, _verify_grid(args, coeffs))
        passed = passed and (
            report["abs_diff"] <= tol and report["moment_audit_max_abs_diff"] <= tol
        )
        reports.append(report)
    payload = reports[0] if len(reports) == 1 else {"results": reports}
    if args.format == "csv":
        if len(reports) == 1:
            sys.stdout.write(_emit_keyvalue_csv(reports[0]))
        else:
            lines = ["index,e_f_closed_form,e_f_oracle,abs_diff,moment_audit_max_abs_diff"]
            for i, rep in enumerate(reports):
                lines.append(
                    serialize.csv_line(
                        [
                            i,
                            rep["e_f_closed_form"],
                            rep["e_f_oracle"],
                            rep["abs_diff"],
                            rep["moment_audit_max_abs_diff"],
                        ]
                    )
                )
            sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(serialize.dumps(payload))
    if args.plot:
        from . import plots

        coeffs = states[0]
        grid = _verify_grid(args, coeffs)
        spectrum = oracle.numeric_spectrum(
            oracle.discretize_marginal(coeffs, 1, grid)
        ).eigenvalues
        plots.save_figure(plots.verify_figure(coeffs, spectrum), args.plot)
    return 0 if passed else 4


# ---------------------------------------------------------------------------
# parser wiring

def _add_common(sub, *, with_input: bool) -> None:
    if with_input:
        sub.add_argument(
            "--input", "-i", required=True,
            help="path to a JSON file, inline JSON, or - for stdin",
        )
    sub.add_argument(
        "--format", choices=("json", "csv"),
        default="json", help="output format (default json)",
    )
    sub.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussmode",
        description="Entanglement analysis of pure two-mode Gaussian states "
        "from wavefunction quadrature coefficients.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("analyze", help="report for one coefficient triple")
    _add_common(p, with_input=True)
    p.set_defaults(handler=_cmd_analyze)

    p = commands.add_parser("squeezed", help="two-mode squeezed state report")
    p.add_argument("-r", type=float, required=True, help="squeezing magnitude")
    p.add_argument("--phi", type=float, default=0.0, help="squeezing phase")
    _add_common(p, with_input=False)
    p.set_defaults(handler=_cmd_squeezed)

    p = commands.add_parser("circuit", help="apply elements to the vacuum")
    _add_common(p, with_input=True)
    p.set_defaults(handler=_cmd_circuit)

    p = commands.add_parser("sweep", help="sweep one circuit parameter")
    _add_common(p, with_input=True)
    p.add_argument("--param", required=True, choices=sorted(_SWEEP_FIELDS))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument(
        "--target", type=int, default=None,
        help="circuit index to sweep (default: first element with the parameter)",
    )
    p.set_defaults(handler=_cmd_sweep, format="csv")

    p = commands.add_parser("verify", help="closed forms vs numerical oracle")
    p.add_argument(
        "--input", "-i", help="coefficient JSON (path, inline, or - for stdin)"
    )
    p.add_argument("--seed", type=int, help="verify random states from this seed")
    p.add_argument("--count", type=int, default=1, help="number of random states")
    p.add_argument("--grid-n", type=int, help="grid points (default 512)")
    p.add_argument("--grid-l", type=float, help="grid half-width (default 8 sigma)")
    p.add_argument(
        "--tol", type=float,
        help=f"tolerance for all verification diffs (default {_DEFAULT_TOL}, "
        f"or the {_ENV_TOL} environment variable)",
    )
    p.add_argument(
        "--format", choices=("json", "csv"), default="json",
        help="output format (default json)",
    )
    p.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GaussmodeError as exc:
        sys.stdout.write(
            serialize.dumps({"error": {"code": exc.code, "message": str(exc)}})
        )
        return _EXIT_CODES.get(type(exc), 2)
    except ValueError as exc:
        sys.stdout.write(
            serialize.dumps({"error": {"code": "invalid_input", "message": str(exc)}})
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
