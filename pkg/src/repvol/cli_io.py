"""Manifold description files and the `repvol` command line.

Input files are UTF-8 JSON objects with a "kind" discriminator:

* kind "seifert": {"kind": "seifert", "genus": g, "fibers": [[a, b], ...]}
* kind "one-edged-graph": {"kind": "one-edged-graph",
  "matrix": [[a, b], [c, d]], "covering": {"n": n, "q": q}}
* kind "seifert-hyperbolic": {"kind": "seifert-hyperbolic", "volume": v,
  "z0": [re, im], "threshold": C, "covering": {"n": n, "q": q}}
  (covering is optional here and defaults to n = q = 1)

Unknown keys are rejected unless --lenient is given.  Malformed input is
reported with the offending field path and exits with code 2; inputs that
parse but violate a mathematical precondition (zero Euler number, genus
zero, determinant != -1, a slope below the filling threshold, and so on)
exit with code 3.  Success is 0.

All output is JSON on stdout, diagnostics go to stderr.  Exact rationals
are serialized as "p/q" strings (just "p" for integers) and are the
authoritative values; floats are advisory renderings with
--float-digits significant digits (default 12) and deterministic
formatting, so identical inputs produce byte-identical output.  Every
output object carries a "units" key: "4*pi^2" marks exact coefficients of
4 pi^2, "raw" marks plain real volumes, "dimensionless" marks bare
rational invariants.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .chern_simons import (
    CsStar,
    cs_star,
    hyperbolic_volume_from_cs,
    path_cs_transport,
    seifert_cs_from_volume,
    shift_half_alpha,
    shift_half_beta,
    solid_torus_cs_star,
)
from .gluing import (
    CoveringParameters,
    GluingMatrix,
    HyperbolicPieceData,
    dehn_filling_volume_estimate,
    graph_volume_values,
)
from .rep_volumes import enumerate_volume_set
from .seifert_core import (
    SeifertInvariants,
    classify_geometry,
    euler_number,
    orbifold_euler_characteristic,
)

__all__ = ["ParseError", "ManifoldDescription", "parse_manifold", "main"]

UNITS_EXACT = "4*pi^2"
UNITS_RAW = "raw"
UNITS_NONE = "dimensionless"


class ParseError(Exception):
    """Malformed input: bad JSON, bad shape, or a bad field value."""


@dataclass(frozen=True)
class ManifoldDescription:
    """A parsed input file; exactly the fields for its kind are set."""

    kind: str
    seifert: SeifertInvariants | None = None
    matrix: GluingMatrix | None = None
    covering: CoveringParameters | None = None
    hyperbolic: HyperbolicPieceData | None = None


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value) -> bool:
    return _is_int(value) or isinstance(value, float)


def _check_keys(obj: dict, required: set, optional: set, lenient: bool) -> None:
    for key in required:
        if key not in obj:
            raise ParseError(f"{key}: missing required key")
    if not lenient:
        unknown = sorted(set(obj) - required - optional)
        if unknown:
            raise ParseError(f"unknown key(s): {', '.join(unknown)}")


def _parse_pair_of_ints(value, where: str) -> tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2 or not all(_is_int(v) for v in value):
        raise ParseError(f"{where}: expected pair")
    return value[0], value[1]


def _parse_covering(value, where: str) -> CoveringParameters:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object with keys 'n' and 'q'")
    for key in ("n", "q"):
        if key not in value:
            raise ParseError(f"{where}.{key}: missing required key")
        if not _is_int(value[key]) or value[key] < 1:
            raise ParseError(f"{where}.{key}: expected a positive integer")
    unknown = sorted(set(value) - {"n", "q"})
    if unknown:
        raise ParseError(f"{where}: unknown key(s): {', '.join(unknown)}")
    return CoveringParameters(value["n"], value["q"])


def parse_manifold(obj, lenient: bool = False) -> ManifoldDescription:
    """Parse one JSON object into a ManifoldDescription.

    Shape problems raise ParseError naming the field path.  Value-level
    mathematical constraints (determinant, covering integrality, positive
    imaginary part, ...) are enforced by the domain types themselves and
    surface as ValueError.
    """
    if not isinstance(obj, dict):
        raise ParseError("top level: expected a JSON object")
    kind = obj.get("kind")
    if kind is None:
        raise ParseError("kind: missing required key")

    if kind == "seifert":
        _check_keys(obj, {"kind", "genus", "fibers"}, set(), lenient)
        genus = obj["genus"]
        if not _is_int(genus) or genus < 0:
            raise ParseError("genus: expected a non-negative integer")
        fibers_raw = obj["fibers"]
        if not isinstance(fibers_raw, list):
            raise ParseError("fibers: expected a list of [a, b] pairs")
        fibers = []
        for i, entry in enumerate(fibers_raw):
            a, b = _parse_pair_of_ints(entry, f"fibers[{i}]")
            if a < 1:
                raise ParseError(f"fibers[{i}]: fiber order must be a positive integer")
            fibers.append((a, b))
        return ManifoldDescription(kind=kind, seifert=SeifertInvariants(genus, tuple(fibers)))

    if kind == "one-edged-graph":
        _check_keys(obj, {"kind", "matrix", "covering"}, set(), lenient)
        matrix_raw = obj["matrix"]
        if not isinstance(matrix_raw, list) or len(matrix_raw) != 2:
            raise ParseError("matrix: expected [[a, b], [c, d]]")
        a, b = _parse_pair_of_ints(matrix_raw[0], "matrix[0]")
        c, d = _parse_pair_of_ints(matrix_raw[1], "matrix[1]")
        covering = _parse_covering(obj["covering"], "covering")
        return ManifoldDescription(
            kind=kind, matrix=GluingMatrix(a, b, c, d), covering=covering
        )

    if kind == "seifert-hyperbolic":
        _check_keys(obj, {"kind", "volume", "z0", "threshold"}, {"covering"}, lenient)
        if not _is_number(obj["volume"]):
            raise ParseError("volume: expected a number")
        z0_raw = obj["z0"]
        if (
            not isinstance(z0_raw, list)
            or len(z0_raw) != 2
            or not all(_is_number(v) for v in z0_raw)
        ):
            raise ParseError("z0: expected [re, im]")
        if not _is_number(obj["threshold"]):
            raise ParseError("threshold: expected a number")
        if "covering" in obj:
            covering = _parse_covering(obj["covering"], "covering")
        else:
            covering = CoveringParameters(1, 1)
        hyperbolic = HyperbolicPieceData(
            volume=float(obj["volume"]),
            cusp_modulus=complex(float(z0_raw[0]), float(z0_raw[1])),
            threshold=float(obj["threshold"]),
        )
        return ManifoldDescription(kind=kind, hyperbolic=hyperbolic, covering=covering)

    raise ParseError(
        "kind: expected one of 'seifert', 'one-edged-graph', 'seifert-hyperbolic'"
    )


def _load_json(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}: invalid JSON: {exc.msg}") from exc


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------


def _format_float(x: float, digits: int) -> float:
    if x == 0:
        return 0.0
    return float(format(x, f".{digits}g"))


def _format_scalar(z, digits: int) -> str:
    z = complex(z)
    re = 0.0 if z.real == 0 else z.real
    re_text = format(re, f".{digits}g")
    if z.imag == 0:
        return re_text
    sign = "+" if z.imag > 0 else "-"
    return f"{re_text}{sign}{format(abs(z.imag), f'.{digits}g')}i"


def _parse_real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"expected a real number, got {text!r}") from None
    if not cmath.isfinite(value):
        raise ParseError(f"expected a finite real number, got {text!r}")
    return value


def _parse_complex(text: str) -> complex:
    cleaned = text.strip()
    try:
        value = complex(cleaned)
    except ValueError:
        try:
            value = complex(cleaned.replace("i", "j").replace("I", "j"))
        except ValueError:
            raise ParseError(
                f"expected a number like '1.5' or '0-1i', got {text!r}"
            ) from None
    if not cmath.isfinite(value):
        raise ParseError(f"expected a finite number, got {text!r}")
    return value


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _require_kind(desc: ManifoldDescription, wanted: str, command: str) -> None:
    if desc.kind != wanted:
        raise ParseError(f"{command} requires kind '{wanted}', got '{desc.kind}'")


def _cmd_classify(desc: ManifoldDescription) -> dict:
    _require_kind(desc, "seifert", "classify")
    S = desc.seifert
    return {
        "e": str(euler_number(S)),
        "chi": str(orbifold_euler_characteristic(S)),
        "geometry": classify_geometry(S).value,
        "units": UNITS_NONE,
    }


def _cmd_volume_set(desc: ManifoldDescription, digits: int, certificates: bool) -> list:
    _require_kind(desc, "seifert", "volume-set")
    out = []
    for value, certificate in enumerate_volume_set(desc.seifert):
        entry = {
            "coefficient": str(value.coefficient),
            "value": _format_float(value.float_value, digits),
            "units": UNITS_EXACT,
        }
        if certificates:
            entry["certificate"] = {
                "n": certificate.n,
                "n_list": list(certificate.n_list),
                "zeta": str(certificate.zeta),
                "z_list": [str(z) for z in certificate.z_list],
            }
        out.append(entry)
    return out


def _cmd_graph_volume(desc: ManifoldDescription, digits: int) -> list:
    _require_kind(desc, "one-edged-graph", "graph-volume")
    return [
        {
            "case": label,
            "coefficient": str(value.coefficient),
            "value": _format_float(value.float_value, digits),
            "units": UNITS_EXACT,
        }
        for label, value in graph_volume_values(desc.matrix, desc.covering)
    ]


def _cmd_dehn_estimate(desc: ManifoldDescription, slope: tuple[int, int], digits: int) -> dict:
    _require_kind(desc, "seifert-hyperbolic", "dehn-estimate")
    estimate = dehn_filling_volume_estimate(desc.hyperbolic, slope, desc.covering)
    return {
        "length_gamma": _format_float(estimate.length_gamma, digits),
        "filled_volume_leading": _format_float(estimate.filled_volume_leading, digits),
        "total_volume_leading": _format_float(estimate.total_volume_leading, digits),
        "error_order_note": estimate.error_order_note,
        "units": UNITS_RAW,
    }


def _parse_slope(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("--slope expects two integers as 'a,c'")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("--slope expects two integers as 'a,c'") from None


def _load_samples(path: Path) -> list:
    data = _load_json(path)
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a list of [alpha, beta] pairs")
    samples = []
    for i, entry in enumerate(data):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"samples[{i}]: expected [alpha, beta]")
        pair = []
        for j, component in enumerate(entry):
            if _is_number(component):
                pair.append(complex(component))
            elif (
                isinstance(component, list)
                and len(component) == 2
                and all(_is_number(v) for v in component)
            ):
                pair.append(complex(component[0], component[1]))
            else:
                raise ParseError(f"samples[{i}][{j}]: expected a number or [re, im]")
        samples.append((pair[0], pair[1]))
    return samples


_CS_USAGE = {
    "from-vol": ("V", 1),
    "to-vol": ("CS", 1),
    "star": ("CS", 1),
    "shift-a": ("CSSTAR BETA", 2),
    "shift-b": ("CSSTAR ALPHA", 2),
    "solid-torus": ("BETA", 1),
    "transport": ("CSSTAR0 SAMPLES_FILE", 2),
}


def _run_cs(subop: str, rest: list, digits: int) -> str:
    usage, count = _CS_USAGE[subop]
    if len(rest) != count:
        raise ParseError(f"cs {subop} expects argument(s): {usage}")
    if subop == "from-vol":
        return _format_scalar(seifert_cs_from_volume(_parse_real(rest[0])), digits)
    if subop == "to-vol":
        return _format_scalar(hyperbolic_volume_from_cs(_parse_complex(rest[0])), digits)
    if subop == "star":
        return _format_scalar(cs_star(_parse_complex(rest[0])).value, digits)
    if subop == "shift-a":
        s = CsStar(_parse_complex(rest[0]))
        return _format_scalar(shift_half_alpha(s, _parse_complex(rest[1])).value, digits)
    if subop == "shift-b":
        s = CsStar(_parse_complex(rest[0]))
        return _format_scalar(shift_half_beta(s, _parse_complex(rest[1])).value, digits)
    if subop == "solid-torus":
        return _format_scalar(solid_torus_cs_star(_parse_complex(rest[0])).value, digits)
    # transport
    s0 = CsStar(_parse_complex(rest[0]))
    samples = _load_samples(Path(rest[1]))
    return _format_scalar(path_cs_transport(s0, samples).value, digits)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repvol",
        description="Exact representation volumes and Chern-Simons tools "
        "for Seifert fibered and one-edged graph manifolds.",
    )
    parser.add_argument(
        "--batch",
        metavar="DIR",
        help="process every *.json in DIR, writing one <name>.out.json per input",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_command(name: str, help_text: str, floats: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", help="manifold description JSON file")
        p.add_argument(
            "--lenient", action="store_true", help="ignore unknown keys in input files"
        )
        if floats:
            p.add_argument(
                "--float-digits",
                type=int,
                default=12,
                metavar="D",
                help="significant digits for advisory float renderings (default 12)",
            )
        return p

    add_file_command("classify", "Euler number, orbifold characteristic, geometry", floats=False)
    p = add_file_command("volume-set", "enumerate the exact volume set")
    p.add_argument(
        "--certificates", action="store_true", help="attach a witness tuple to each value"
    )
    add_file_command("graph-volume", "closed-form one-edged graph volume values")
    p = add_file_command("dehn-estimate", "leading-order Dehn filling volume estimate")
    p.add_argument("--slope", required=True, metavar="a,c", help="filling slope")

    p = sub.add_parser("cs", help="Chern-Simons value calculus")
    p.add_argument("subop", choices=sorted(_CS_USAGE))
    p.add_argument("args", nargs="*", help="operands for the sub-operation")
    p.add_argument(
        "--float-digits",
        type=int,
        default=12,
        metavar="D",
        help="significant digits for printed values (default 12)",
    )
    return parser


def _check_digits(digits: int) -> int:
    if not 1 <= digits <= 17:
        raise ParseError("--float-digits must be between 1 and 17")
    return digits


def _run_file_command(args, path: Path):
    desc = parse_manifold(_load_json(path), lenient=args.lenient)
    if args.command == "classify":
        return _cmd_classify(desc)
    if args.command == "volume-set":
        return _cmd_volume_set(desc, _check_digits(args.float_digits), args.certificates)
    if args.command == "graph-volume":
        return _cmd_graph_volume(desc, _check_digits(args.float_digits))
    # dehn-estimate
    return _cmd_dehn_estimate(
        desc, _parse_slope(args.slope), _check_digits(args.float_digits)
    )


def _run_batch(args) -> int:
    directory = Path(args.batch)
    if not directory.is_dir():
        raise ParseError(f"{directory}: not a directory")
    code = 0
    for path in sorted(directory.glob("*.json")):
        if path.name.endswith(".out.json"):
            continue
        try:
            payload = _run_file_command(args, path)
        except ParseError as exc:
            print(f"{path.name}: error: {exc}", file=sys.stderr)
            code = max(code, 2)
            continue
        except ValueError as exc:
            print(f"{path.name}: error: {exc}", file=sys.stderr)
            code = max(code, 3)
            continue
        out_path = path.with_name(path.name[: -len(".json")] + ".out.json")
        out_path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"{path.name}: wrote {out_path.name}", file=sys.stderr)
    return code


def _dispatch(args) -> int:
    if args.command == "cs":
        if args.batch:
            raise ParseError("--batch is not available for 'cs'")
        print(_run_cs(args.subop, args.args, _check_digits(args.float_digits)))
        return 0
    if args.batch:
        if args.file:
            raise ParseError("give either an input file or --batch DIR, not both")
        return _run_batch(args)
    if not args.file:
        raise ParseError("input file required (or use --batch DIR)")
    payload = _run_file_command(args, Path(args.file))
    print(json.dumps(payload, indent=2))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
