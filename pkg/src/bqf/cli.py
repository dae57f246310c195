"""Command-line front end.

Verbs: reduce, equiv, class-number, enumerate, base-point, point-form,
legendre, orbit, check-t32, plot. Text output is line oriented; --format
json emits the same data as a single sorted JSON object. Exit codes: 0 on
success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .enumeration import class_number, enumerate_almost_reduced, enumerate_reduced
from .forms import QuadraticForm
from .group import element_to_word
from .points import AlgebraicPoint, base_point, form_from_point
from .qfield import QuadFieldElement, orbit_explore, same_orbit_form_check
from .reduction import equivalent, reduce_form
from .residues import legendre

# plot geometry: 200 px per unit on [-1.6, 1.6] x [0, 2.4]
_SCALE = 200.0
_XMIN, _XMAX, _YMAX = -1.6, 1.6, 2.4
_ARC_SEGMENTS = 64
_POINT_LIMIT = 10_000


def _sx(x: float) -> float:
    return (x - _XMIN) * _SCALE


def _sy(y: float) -> float:
    return (_YMAX - y) * _SCALE


def _f(v: float) -> str:
    return f"{v:.6f}"


def render_region_svg(points: list[AlgebraicPoint], region: str) -> str:
    """Deterministic SVG: region boundary plus one marker per point.

    Floats appear only here, rounded to six decimals at render time.
    """
    if region not in ("pi", "pibar"):
        raise ValueError(f"region must be 'pi' or 'pibar', got {region!r}")
    if len(points) > _POINT_LIMIT:
        raise ValueError(f"too many points to plot (limit {_POINT_LIMIT})")
    width = int((_XMAX - _XMIN) * _SCALE)
    height = int(_YMAX * _SCALE)
    left = -0.5 if region == "pi" else 0.0
    y_left = math.sqrt(3) / 2 if region == "pi" else 1.0
    a_left = 2 * math.pi / 3 if region == "pi" else math.pi / 2
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g stroke="#222222" stroke-width="1.5" fill="none">',
        f'<line x1="{_f(_sx(left))}" y1="{_f(_sy(y_left))}" '
        f'x2="{_f(_sx(left))}" y2="{_f(_sy(_YMAX))}"/>',
        f'<line x1="{_f(_sx(0.5))}" y1="{_f(_sy(math.sqrt(3) / 2))}" '
        f'x2="{_f(_sx(0.5))}" y2="{_f(_sy(_YMAX))}"/>',
    ]
    steps = []
    for i in range(_ARC_SEGMENTS + 1):
        theta = a_left + (math.pi / 3 - a_left) * i / _ARC_SEGMENTS
        steps.append(f"{_f(_sx(math.cos(theta)))} {_f(_sy(math.sin(theta)))}")
    out.append('<path d="M ' + " L ".join(steps) + '"/>')
    out.append("</g>")
    out.append('<g fill="#335577">')
    for z in sorted(points, key=lambda w: (w.re(), w.abs_sq())):
        cx = _sx(z.p / z.q)
        cy = _sy(math.sqrt(-z.D) / z.q)
        out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="4"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _cmd_reduce(args) -> tuple[dict, str]:
    res = reduce_form(args.form)
    data = {
        "reduced": str(res.reduced),
        "word": res.word,
        "witness": str(res.witness),
        "steps": res.steps,
    }
    text = (
        f"reduced: {data['reduced']}\nword: {data['word']}\n"
        f"witness: {data['witness']}\nsteps: {data['steps']}\n"
    )
    return data, text


def _cmd_equiv(args) -> tuple[dict, str]:
    g = equivalent(args.form, args.other, args.mode)
    if g is None:
        return {"equivalent": False}, "equivalent: no\n"
    data = {"equivalent": True, "witness": str(g), "word": element_to_word(g)}
    text = f"equivalent: yes\nwitness: {data['witness']}\nword: {data['word']}\n"
    return data, text


def _cmd_class_number(args) -> tuple[dict, str]:
    h = class_number(args.delta)
    return {"h": h}, f"h={h}\n"


def _cmd_enumerate(args) -> tuple[dict, str]:
    fn = enumerate_almost_reduced if args.almost else enumerate_reduced
    forms = fn(args.delta, primitive_only=args.primitive)
    names = [str(f) for f in forms]
    text = "".join(f"{name}\n" for name in names) + f"h={len(names)}\n"
    return {"forms": names, "h": len(names)}, text


def _cmd_base_point(args) -> tuple[dict, str]:
    z = base_point(args.form)
    return {"point": str(z)}, f"{z}\n"


def _cmd_point_form(args) -> tuple[dict, str]:
    form, scale = form_from_point(args.point)
    data = {"form": str(form), "scale": str(scale)}
    return data, f"form: {data['form']}\nscale: {data['scale']}\n"


def _cmd_legendre(args) -> tuple[dict, str]:
    v = legendre(args.value, args.p)
    return {"legendre": v}, f"{v}\n"


def _cmd_orbit(args) -> tuple[dict, str]:
    orbit = orbit_explore(args.element, args.depth)
    names = [str(e) for e in sorted(orbit, key=lambda e: (e.a, e.c))]
    text = "".join(f"{name}\n" for name in names) + f"count={len(names)}\n"
    return {"elements": names, "count": len(names)}, text


def _cmd_check_t32(args) -> tuple[dict, str]:
    rep = same_orbit_form_check(args.alpha, args.beta, args.depth)
    data = {
        "alpha_form": str(rep.alpha_form),
        "beta_form": str(rep.beta_form),
        "forms_equivalent": rep.forms_equivalent,
        "reachable": rep.reachable,
        "depth": rep.depth,
        "consistent": rep.consistent,
    }
    yn = {True: "yes", False: "no"}
    text = (
        f"alpha-form: {data['alpha_form']}\n"
        f"beta-form: {data['beta_form']}\n"
        f"forms-equivalent: {yn[rep.forms_equivalent]}\n"
        f"reachable: {yn[rep.reachable]}\n"
        f"depth: {rep.depth}\n"
        f"consistent: {yn[rep.consistent]}\n"
    )
    return data, text


def _cmd_plot(args) -> tuple[None, str]:
    if args.points:
        markers = [AlgebraicPoint.parse(item) for item in args.items]
    else:
        markers = [base_point(QuadraticForm.parse(item)) for item in args.items]
    return None, render_region_svg(markers, args.region)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bqf",
        description="binary quadratic forms under the extended modular group",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        return p

    p = add("reduce", _cmd_reduce, help="reduce a form, printing a witness")
    p.add_argument("form", type=QuadraticForm.parse)

    p = add("equiv", _cmd_equiv, help="test two forms for equivalence")
    p.add_argument("form", type=QuadraticForm.parse)
    p.add_argument("other", type=QuadraticForm.parse)
    p.add_argument("--mode", choices=("proper", "extended"), default="proper")

    p = add("class-number", _cmd_class_number, help="count primitive reduced forms")
    p.add_argument("delta", type=int)

    p = add("enumerate", _cmd_enumerate, help="list reduced forms of a discriminant")
    p.add_argument("delta", type=int)
    p.add_argument("--almost", action="store_true", help="keep boundary mirrors")
    p.add_argument("--primitive", action="store_true", help="primitive forms only")

    p = add("base-point", _cmd_base_point, help="upper half-plane root of a form")
    p.add_argument("form", type=QuadraticForm.parse)

    p = add("point-form", _cmd_point_form, help="primitive form owning a point")
    p.add_argument("point", type=AlgebraicPoint.parse)

    p = add("legendre", _cmd_legendre, help="Legendre symbol (value/p)")
    p.add_argument("value", type=int)
    p.add_argument("p", type=int)

    p = add("orbit", _cmd_orbit, help="breadth-first orbit of a quadratic irrational")
    p.add_argument("element", type=QuadFieldElement.parse)
    p.add_argument("--depth", type=int, default=8)

    p = add("check-t32", _cmd_check_t32, help="orbit membership vs form equivalence")
    p.add_argument("alpha", type=QuadFieldElement.parse)
    p.add_argument("beta", type=QuadFieldElement.parse)
    p.add_argument("--depth", type=int, default=8)

    p = sub.add_parser("plot", help="SVG of points in a fundamental region")
    p.set_defaults(handler=_cmd_plot, format="text")
    p.add_argument("items", nargs="*", help="forms a,b,c or (with --points) points p,q,D")
    p.add_argument("--points", action="store_true", help="arguments are points")
    p.add_argument("--region", choices=("pi", "pibar"), default="pi")
    p.add_argument("--out", default="-", help="output file, - for stdout")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, text = args.handler(args)
        out_path = getattr(args, "out", "-")
        if data is not None and args.format == "json":
            text = json.dumps(data, sort_keys=True) + "\n"
        if out_path == "-":
            sys.stdout.write(text)
        else:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())
