"""Serialization of a realization: JSON, OFF (rank 3) and a plain inequality listing."""

from __future__ import annotations

from fractions import Fraction
import json


class ExportError(ValueError):
    pass


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json(real) -> str:
    cat = real.catalog
    doc = {
        "type": str(cat.cartan_type),
        "convention": cat.convention(),
        "support": {"mode": real.support.mode,
                    "orbit_values": [frac_str(v) for v in real.support.orbit_values]},
        "roots": [list(r) for r in cat.roots],
        "clusters": [list(c) for c in real.clusters],
        "vertices": [[frac_str(x) for x in v] for v in real.vertices],
        "facets": [{"normal": list(f.normal), "rhs": frac_str(f.rhs)} for f in real.facets],
        "verified": bool(real.verified),
    }
    return json.dumps(doc, indent=1) + "\n"


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def face_cycles(real) -> list:
    """For each facet, its vertices as a cycle, counter-clockwise seen from outside.

    Built from vertex/facet incidence and the exchange graph only.
    """
    if real.catalog.rank != 3:
        raise ExportError("face cycles are only defined here for rank 3")
    pos = {c: i for i, c in enumerate(real.clusters)}
    adj = {}
    for p in real.pairs:
        a, b = pos[p.c1], pos[p.c2]
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    faces = []
    for f in real.facets:
        on = {pos[c] for c in real.clusters if f.root in c}
        ring = {i: sorted(adj[i] & on) for i in on}
        if any(len(r) != 2 for r in ring.values()):
            raise ExportError(f"facet {real.catalog.label(f.root)} is not a polygon")
        cyc = [min(on)]
        nxt = ring[cyc[0]][0]
        while nxt != cyc[0]:
            a, b = ring[nxt]
            cyc.append(nxt)
            nxt = b if a == cyc[-2] else a
        if len(cyc) != len(on):
            raise ExportError(f"facet {real.catalog.label(f.root)} is not a single cycle")
        v = [real.vertices[i] for i in cyc]
        normal = _cross(_sub(v[1], v[0]), _sub(v[2], v[0]))
        if sum(a * b for a, b in zip(normal, f.normal)) < 0:
            cyc = [cyc[0]] + cyc[1:][::-1]
        faces.append(cyc)
    return faces


def to_off(real) -> str:
    if real.catalog.rank != 3:
        raise ExportError(f"OFF export needs rank 3, {real.catalog.cartan_type} has rank "
                          f"{real.catalog.rank}")
    faces = face_cycles(real)
    n_edges = len(real.pairs)
    lines = ["OFF",
             f"# generalized associahedron {real.catalog.cartan_type}, support "
             f"{real.support.mode} {[frac_str(v) for v in real.support.orbit_values]}",
             f"# verified: {str(bool(real.verified)).lower()}",
             f"{len(real.vertices)} {len(faces)} {n_edges}"]
    for c, v in zip(real.clusters, real.vertices):
        dec = " ".join(repr(float(x)) for x in v)
        exact = " ".join(frac_str(x) for x in v)
        lines.append(f"{dec}  # {exact} cluster {' '.join(real.catalog.label(k) for k in c)}")
    for f, cyc in zip(real.facets, faces):
        lines.append(f"{len(cyc)} " + " ".join(map(str, cyc))
                     + f"  # {real.catalog.label(f.root)}")
    return "\n".join(lines) + "\n"


def inequality_str(normal, rhs) -> str:
    terms = []
    for j, c in enumerate(normal):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(("-" if c < 0 else "+", f"{mag}z{j + 1}"))
    s = " ".join(f"{sg} {t}" for sg, t in terms)
    s = s[2:] if s.startswith("+ ") else "-" + s[2:]
    return f"{s} <= {frac_str(rhs)}"


def to_text(real) -> str:
    lines = [f"# {real.catalog.cartan_type}: {len(real.facets)} inequalities, "
             f"{len(real.vertices)} vertices, verified: {str(bool(real.verified)).lower()}"]
    lines += [inequality_str(f.normal, f.rhs) for f in real.facets]
    return "\n".join(lines) + "\n"


def export(real, fmt: str) -> bytes:
    fmt = fmt.lower()
    if fmt == "json":
        return to_json(real).encode()
    if fmt == "off":
        return to_off(real).encode()
    if fmt in ("txt", "text"):
        return to_text(real).encode()
    raise ExportError(f"unknown format {fmt!r}")
