"""Deterministic DOT, SVG and TikZ pictures of the computed structures.

All coordinates are derived from exact integers, so output bytes depend only
on the input group and the format version tag.
"""

from __future__ import annotations

from fractions import Fraction

from .ghilb import GHilbFan
from .groups import GroupData
from .quiver import ORIENTATIONS, QuiverAnalysis, torus_positions
from .reid import MarkedTriangulation

FORMAT_TAG = "mckay-lab-diagrams/1"

# sqrt(3)/2 to six exact decimal digits, as a rational
_ROOT3_HALF = Fraction(866025, 1_000_000)


def _fixed(value: Fraction, digits: int = 3) -> str:
    """Deterministic fixed-point rendering of an exact rational."""
    scale = 10 ** digits
    scaled = Fraction(value) * scale
    whole = scaled.numerator // scaled.denominator  # floor
    sign = "-" if whole < 0 else ""
    whole = abs(whole)
    return f"{sign}{whole // scale}.{whole % scale:0{digits}d}"


def _skew_to_cartesian(u: int, v: int) -> tuple[Fraction, Fraction]:
    # unit steps at 0 and 120 degrees
    return (Fraction(2 * u - v, 2), v * _ROOT3_HALF)


def quiver_dot(group: GroupData) -> str:
    """The McKay quiver with its unrolled torus positions."""
    pos = torus_positions(group)
    lines = [f"// {FORMAT_TAG} quiver group={group.spec_string()}", "digraph mckay_quiver {"]
    lines.append('  layout=neato; node [shape=circle, fontsize=10];')
    order = sorted(pos, key=lambda c: c.residues)
    names = {chi: f"v{idx}" for idx, chi in enumerate(order)}
    for chi in order:
        x, y = _skew_to_cartesian(*pos[chi])
        lines.append(
            f'  {names[chi]} [label="{chi.label()}", pos="{_fixed(x)},{_fixed(y)}!"];'
        )
    for chi in order:
        for o in ORIENTATIONS:
            head = chi * group.kappa_of_variable(o)
            lines.append(f'  {names[chi]} -> {names[head]} [label="{o}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sink_source_dot(fan: GHilbFan, qa: QuiverAnalysis, ray_idx: int) -> str:
    """One divisor's quiver with vanishing arrows black and alive arrows grey."""
    group = fan.group
    pos = torus_positions(group)
    mult = qa.multiplicities(ray_idx)
    classes = qa.sink_source_graph(ray_idx).classes
    ray = fan.rays[ray_idx]
    lines = [
        f"// {FORMAT_TAG} sink-source group={group.spec_string()} ray={ray_idx} at {ray}",
        f"digraph divisor_{ray_idx} {{",
        '  layout=neato; node [shape=circle, fontsize=9];',
    ]
    order = sorted(pos, key=lambda c: c.residues)
    names = {chi: f"v{idx}" for idx, chi in enumerate(order)}
    for chi in order:
        x, y = _skew_to_cartesian(*pos[chi])
        label = f"{chi.label()}\\n{classes[chi].label()}"
        lines.append(f'  {names[chi]} [label="{label}", pos="{_fixed(x)},{_fixed(y)}!"];')
    for chi in order:
        for o in ORIENTATIONS:
            head = chi * group.kappa_of_variable(o)
            style = "color=black, penwidth=2" if mult[(chi, o)] else "color=grey"
            lines.append(
                f'  {names[chi]} -> {names[head]} [label="{o}", {style}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_sink_source_dot(fan: GHilbFan, qa: QuiverAnalysis) -> str:
    """One DOT graph per exceptional divisor, concatenated."""
    return "".join(
        sink_source_dot(fan, qa, ri) for ri in fan.exceptional_ray_indices()
    )


def _simplex_points(fan: GHilbFan):
    """Cartesian positions of the junior points inside a fixed triangle."""
    corners = [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(1, 2), _ROOT3_HALF),
    ]
    out = {}
    for ri, ray in enumerate(fan.rays):
        x = sum(c * w for (c, _), w in zip(corners, ray.coords))
        y = sum(c * w for (_, c), w in zip(corners, ray.coords))
        out[ri] = (x, y)
    return out


def _marking_text(marked: MarkedTriangulation, ri: int) -> str:
    case = marked.vertex_cases.get(ri)
    if case is None or case.tag == "boundary":
        return ""
    return ",".join(chi.label() for chi in case.markings)


def marked_simplex_svg(fan: GHilbFan, marked: MarkedTriangulation) -> str:
    """The triangulated junior simplex with edge and vertex markings."""
    size = 640
    pad = 60
    pts = _simplex_points(fan)

    def xy(ri):
        x, y = pts[ri]
        return (
            _fixed(pad + x * (size - 2 * pad)),
            _fixed(pad + (_ROOT3_HALF - y) * (size - 2 * pad)),
        )

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
        f"<!-- {FORMAT_TAG} marked-simplex group={fan.group.spec_string()} -->",
    ]
    for edge in fan.edges:
        i, j = edge.rays
        (x1, y1), (x2, y2) = xy(i), xy(j)
        lines.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{"#999" if edge.is_boundary else "#333"}" stroke-width="1"/>'
        )
        if not edge.is_boundary:
            ratio = marked.edge_ratios[edge.rays]
            mx = _fixed((pts[i][0] + pts[j][0]) / 2 * (size - 2 * pad) + pad)
            my = _fixed(
                (_ROOT3_HALF - (pts[i][1] + pts[j][1]) / 2) * (size - 2 * pad) + pad
            )
            lines.append(
                f'<text x="{mx}" y="{my}" font-size="10" fill="#0044aa">'
                f"{ratio.text()} [{ratio.character.label()}]</text>"
            )
    for ri, ray in enumerate(fan.rays):
        x, y = xy(ri)
        lines.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#000"/>')
        mark = _marking_text(marked, ri)
        label = f"{ray}" + (f" [{mark}]" if mark else "")
        lines.append(
            f'<text x="{x}" y="{y}" dx="4" dy="-4" font-size="10">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def marked_simplex_tikz(fan: GHilbFan, marked: MarkedTriangulation) -> str:
    """TikZ source for the marked junior simplex."""
    pts = _simplex_points(fan)
    scale = 8
    lines = [
        f"% {FORMAT_TAG} marked-simplex group={fan.group.spec_string()}",
        "\\begin{tikzpicture}[scale=1]",
    ]
    for edge in fan.edges:
        i, j = edge.rays
        (x1, y1), (x2, y2) = pts[i], pts[j]
        style = "gray" if edge.is_boundary else "black"
        seg = (
            f"\\draw[{style}] ({_fixed(x1 * scale)},{_fixed(y1 * scale)})"
            f" -- ({_fixed(x2 * scale)},{_fixed(y2 * scale)})"
        )
        if not edge.is_boundary:
            ratio = marked.edge_ratios[edge.rays]
            seg += (
                " node[midway, font=\\tiny, sloped, above]"
                f" {{{ratio.text()} [{ratio.character.label()}]}}"
            )
        lines.append(seg + ";")
    for ri, ray in enumerate(fan.rays):
        x, y = pts[ri]
        mark = _marking_text(marked, ri)
        label = f"{ray}" + (f" [{mark}]" if mark else "")
        lines.append(
            f"\\node[circle, fill, inner sep=1pt, "
            f"label={{[font=\\tiny]above:{{{label}}}}}] at "
            f"({_fixed(x * scale)},{_fixed(y * scale)}) {{}};"
        )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
