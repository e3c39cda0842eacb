"""Declarative scenario files and the built-in registry of known answers.

A scenario is an INI file with sections ``scenario``, ``group``,
``peripherals``, ``space``, ``tasks``, ``expected`` and ``provenance``.
Every key under ``expected`` needs a matching ``provenance`` note.
"""
from __future__ import annotations

import configparser
import os
import re
import tempfile
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GuardError, InputError

SPACE_KINDS = ("cusped-graph", "cusped-complex", "cayley-only", "horoball", "cylinder")
TASKS = ("hc", "ends", "dimension", "delta", "regularity", "local")
ORDER = {name: i for i, name in enumerate(TASKS)}  # dimension needs hc


@dataclass
class Scenario:
    name: str
    group: object
    peripherals: list
    space: str
    params: dict
    tasks: dict
    expected: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    description: str = ""
    seed: int = 0
    source: str = "<string>"


def _ranges(text: str) -> list[int]:
    """'1-6' or '1,3,5' or '2'."""
    out = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        a, sep, b = part.partition("-")
        out.extend(range(int(a), int(b) + 1) if sep else [int(a)])
    return out


def _gaps(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        a, _, b = part.strip().partition(":")
        out.append((int(a), int(b)))
    return out


def _line_of(text: str, section: str, key: str | None) -> int:
    cur = None
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        m = re.match(r"\[(.+)\]", s)
        if m:
            cur = m.group(1).strip()
            if key is None and cur == section:
                return no
        elif cur == section and key is not None and re.match(rf"{re.escape(key)}\s*[=:]", s):
            return no
    return 0


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    from .groups import GroupSpec, PeripheralSpec
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise InputError(f"{source}: {exc}") from None

    def fail(section, key, msg):
        raise InputError(f"{source}:{_line_of(text, section, key)}: {msg}")

    for sec in ("scenario", "group", "space", "tasks"):
        if not cp.has_section(sec):
            raise InputError(f"{source}: missing section [{sec}]")
    for sec in cp.sections():
        if sec not in ("scenario", "group", "peripherals", "space", "tasks", "expected",
                       "provenance"):
            fail(sec, None, f"unknown section [{sec}]")
    name = cp.get("scenario", "name", fallback=os.path.splitext(os.path.basename(source))[0])

    g = cp["group"]
    kind = g.get("kind", "free")
    try:
        if kind == "free-product":
            factors = [f.strip().split() for f in g.get("factors", "").split(",") if f.strip()]
            spec = GroupSpec.free_product([(k, int(r)) for k, r in factors])
        else:
            spec = GroupSpec(kind, int(g.get("rank", "1")))
    except (ValueError, InputError) as exc:
        fail("group", "kind", str(exc))

    peripherals = []
    if cp.has_section("peripherals"):
        for pname, gens in cp["peripherals"].items():
            peripherals.append((pname, [w.strip() for w in gens.split(",") if w.strip()]))
    try:
        per = PeripheralSpec.parse(spec, peripherals)
    except InputError as exc:
        fail("peripherals", None, str(exc))

    s = cp["space"]
    space = s.get("kind", "")
    if space not in SPACE_KINDS:
        fail("space", "kind", f"unknown space kind {space!r}")
    params: dict = {}
    for key in ("R", "T", "D", "C", "dim_cap", "margin"):
        if key in s:
            try:
                params[key] = int(s[key])
            except ValueError:
                fail("space", key, f"{key} must be an integer")
    for key in ("radii", "depths"):
        if key in s:
            params[key] = _ranges(s[key])
    for key in ("K", "proxy", "strip"):
        if key in s:
            params[key] = s[key].strip()

    tasks = {}
    for tname, arg in cp["tasks"].items():
        if tname not in TASKS:
            fail("tasks", tname, f"unknown task {tname!r}")
        try:
            if tname in ("hc", "ends", "regularity"):
                tasks[tname] = _ranges(arg)
            elif tname == "local":
                tasks[tname] = _gaps(arg)
            elif tname == "delta":
                tasks[tname] = int(arg)
            else:
                tasks[tname] = arg.strip()
        except ValueError:
            fail("tasks", tname, f"cannot parse argument {arg!r}")
    if "dimension" in tasks and "hc" not in tasks:
        fail("tasks", "dimension", "dimension needs the hc task")

    expected = dict(cp["expected"]) if cp.has_section("expected") else {}
    provenance = dict(cp["provenance"]) if cp.has_section("provenance") else {}
    for key in expected:
        if not provenance.get(key):
            fail("expected", key, f"expectation {key!r} has no provenance note")
    scen = Scenario(name, spec, per, space, params, tasks, expected, provenance,
                    cp.get("scenario", "description", fallback=""),
                    cp.getint("scenario", "seed", fallback=0), source)
    try:
        validate(scen)
    except GuardError as exc:
        fail("space", None, str(exc))
    return scen


def load_scenario(path_or_name: str) -> Scenario:
    if path_or_name in REGISTRY:
        return parse_scenario(REGISTRY[path_or_name], f"{path_or_name}.ini")
    if not os.path.exists(path_or_name):
        raise InputError(f"no scenario file or registered scenario {path_or_name!r}")
    with open(path_or_name, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), path_or_name)


def validate(s: Scenario) -> None:
    """Guard inequalities, checked before any computation."""
    p = s.params
    margin = p.get("margin", 2)
    needs = {"cusped-graph": ("R", "T"), "cusped-complex": ("R", "T"), "cayley-only": ("R",),
             "horoball": ("R", "T"), "cylinder": ("T", "K")}[s.space]
    for key in needs:
        if key not in p:
            raise GuardError(f"space {s.space} needs parameter {key}")
    if s.space == "cylinder":
        extent = p["T"]
    elif s.space == "cayley-only":
        extent = p["R"]
    else:
        extent = min(p["R"], p["T"])
    if "hc" in s.tasks:
        radii = p.get("radii")
        if not radii:
            raise GuardError("hc needs a radii schedule")
        if max(radii) > extent - margin:
            raise GuardError(f"radius {max(radii)} exceeds the safe radius {extent - margin}",
                             safe_radius=extent - margin)
    if "ends" in s.tasks and max(s.tasks["ends"]) > p.get("R", 0):
        raise GuardError("ends radii exceed the ball radius", safe_radius=p.get("R"))
    if "regularity" in s.tasks:
        if s.space != "cusped-complex":
            raise GuardError("regularity runs on cusped complexes")
        if max(s.tasks["regularity"]) > p["T"] - 2 or min(s.tasks["regularity"]) < 1:
            raise GuardError(f"regularity depths must lie in 1..{p['T'] - 2}",
                             safe_radius=p["T"] - 2)
    if "local" in s.tasks and ("D" not in p or "proxy" not in p):
        raise GuardError("local probe needs D and proxy")


# ---------------------------------------------------------------------------
# building spaces


def named_complex(name: str):
    from .homology import SimplicialComplex
    shapes = {
        "point": [(0,)],
        "two-points": [(0,), (1,)],
        "hollow-triangle": [(0, 1), (1, 2), (0, 2)],
        "edge": [(0, 1)],
        "triangle": [(0, 1, 2)],
    }
    if name not in shapes:
        raise InputError(f"unknown complex {name!r}")
    return SimplicialComplex(shapes[name])


def build_space(s: Scenario):
    """The graph or complex a scenario describes."""
    from .compact import cylinder_complex
    from .cusped import CuspedComplex, build_cusped_graph, build_horoball
    from .groups import cayley_ball
    p = s.params
    if s.space == "cayley-only":
        return cayley_ball(s.group, p["R"], 10**7)
    if s.space == "cusped-graph":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return build_cusped_graph(s.group, s.peripherals, p["R"], p["T"])
    if s.space == "cusped-complex":
        return CuspedComplex(s.group, s.peripherals, p["R"], p["T"])
    if s.space == "horoball":
        return build_horoball(cayley_ball(s.group, p["R"], 10**7), p["T"])
    return cylinder_complex(named_complex(p["K"]), p["T"])


def graph_complex(G, extent: int, basepoint):
    """A graph as a 1-dimensional exhaustible complex."""
    from .compact import FiniteExhaustion
    from .homology import SimplicialComplex
    X = SimplicialComplex([(v,) for v in G.vertices()])
    for u, v in G.edges():
        X.add((u, v))
    return FiniteExhaustion(X, basepoint=basepoint, extent=extent)


def exhaustible(s: Scenario, space):
    from .cusped import DepthVertex
    from .graph import Graph
    if isinstance(space, Graph):
        p = s.params
        extent = p["R"] if s.space == "cayley-only" else min(p["R"], p["T"])
        base = DepthVertex(0, "", "e") if s.space == "cusped-graph" else \
            ("e" if s.space == "cayley-only" else space.vertices()[0])
        return graph_complex(space, extent, base)
    return space


def graph_of(s: Scenario, space):
    from .graph import Graph
    if isinstance(space, Graph):
        return space
    raise InputError(f"space {s.space} has no graph view")


# ---------------------------------------------------------------------------
# running


@dataclass
class RunResult:
    observed: dict
    outputs: dict  # file name -> text
    diff: list
    records: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.diff


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def run_scenario(s: Scenario, seed: int | None = None, max_simplices: int = 300_000,
                 stages: int | None = None) -> RunResult:
    """Execute the tasks of a scenario in dependency order."""
    from .compact import (ExhaustionSchedule, boundary_dim_estimate, coboundary_of,
                          boundary_of, hc_pro_system, local_homology_probe, pro_classify,
                          regularity_probe)
    from .cusped import DepthVertex
    from .metric import delta_estimate, ends_profile
    seed = s.seed if seed is None else seed
    space = build_space(s)
    observed: dict = {}
    outputs: dict = {}
    records: dict = {}
    radii = s.params.get("radii", [])
    if stages is not None:
        radii = radii[:stages]
    verdicts = {}
    for task in sorted(s.tasks, key=ORDER.get):
        arg = s.tasks[task]
        if task == "hc":
            X = exhaustible(s, space)
            sched = ExhaustionSchedule(tuple(radii), margin=s.params.get("margin", 2))
            for k in arg:
                P = hc_pro_system(X, k, sched)
                v = pro_classify(P)
                verdicts[k] = v
                observed[f"hc.{k}"] = str(v)
                outputs[f"hc_{k}.csv"] = P.csv()
        elif task == "dimension":
            est = boundary_dim_estimate(verdicts)
            observed["dimension"] = "none" if est["estimate"] is None else str(est["estimate"])
            records["dimension"] = est
        elif task == "ends":
            G = graph_of(s, space)
            base = DepthVertex(0, "", "e") if s.space == "cusped-graph" else "e"
            prof = ends_profile(G, base, arg)
            observed["ends"] = prof["verdict"]
            outputs["ends.csv"] = "radius,components\n" + "".join(
                f"{r},{c}\n" for r, c in zip(prof["radii"], prof["counts"]))
        elif task == "delta":
            G = graph_of(s, space)
            rep = delta_estimate(G, samples=arg, seed=seed, triangle_samples=min(arg, 1000))
            observed["delta_thin"] = _fmt(rep.delta_thin)
            observed["delta_four_point"] = _fmt(rep.delta_four_point)
            outputs["delta.txt"] = rep.record()
            records["delta"] = rep
        elif task == "regularity":
            key = s.params.get("strip", "0:e")
            lines = ["depth,mode,status,primitive_radius"]
            worst, ok = 0, True
            for t in arg:
                e = (space.vertex(t, key, 0), space.vertex(t, key, 1))
                tri = space.triangles_at(space.vertex(t, key, 0))[0]
                for mode, target in (("cochain", coboundary_of(space, tuple(sorted(e)))),
                                     ("chain", boundary_of(tri))):
                    rep = regularity_probe(space, target, mode, max_radius=3)
                    lines.append(f"{t},{mode},{rep.status},{_fmt(rep.primitive_radius)}")
                    ok &= rep.found
                    if rep.found:
                        worst = max(worst, rep.primitive_radius)
            observed["regularity"] = "bounded" if ok else "failed"
            observed["regularity_radius"] = str(worst)
            outputs["regularity.csv"] = "\n".join(lines) + "\n"
        elif task == "local":
            G = graph_of(s, space)
            z = _proxy(s, G)
            delta = records["delta"].delta_thin if "delta" in records else 0
            D, C = s.params["D"], s.params.get("C", 0)
            rows = local_homology_probe(G, z, arg, D, C, delta, max_simplices=max_simplices)
            cols = ["n_outer", "n_inner", "threshold", "compliant", "size_outer", "size_inner",
                    "h0_zero", "h1_zero", "status"]
            outputs["local.csv"] = ",".join(cols) + "\n" + "".join(
                ",".join(_fmt(r.get(c, "")) for c in cols) + "\n" for r in rows)
            compliant = [r["status"] for r in rows if r["compliant"]]
            if D < 4 * delta + 6 * C:
                observed["local"] = "inadmissible"
            elif not compliant or "inconclusive" in compliant:
                observed["local"] = "inconclusive"
            elif all(x == "vanishes" for x in compliant):
                observed["local"] = "vanishes"
            else:
                observed["local"] = "nonvanishing"
    diff = []
    for key, want in sorted(s.expected.items()):
        got = observed.get(key)
        if got != want.strip():
            diff.append(f"{key}: expected {want.strip()}, observed {got}")
    return RunResult(observed, outputs, diff, records)


def _proxy(s: Scenario, G):
    from .cusped import DepthVertex
    from .metric import BoundaryProxy
    kind, _, arg = s.params["proxy"].partition(" ")
    base = DepthVertex(0, "", "e") if s.space == "cusped-graph" else "e"
    if kind == "parabolic":
        return BoundaryProxy("parabolic", base, coset=arg.strip())
    return BoundaryProxy("conical", base, period=arg.strip())


def report_text(s: Scenario, res: RunResult) -> str:
    lines = [f"scenario {s.name}"]
    for key in sorted(res.observed):
        lines.append(f"  {key} = {res.observed[key]}")
    if res.diff:
        lines.append("mismatches:")
        lines += [f"  {d}" for d in res.diff]
    else:
        lines.append("all expectations met")
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# registry

REGISTRY: dict[str, str] = {
    "line-ends": """
[scenario]
name = line-ends
description = integers acting on the line; two ends
[group]
kind = free
rank = 1
[space]
kind = cayley-only
R = 10
radii = 1-6
[tasks]
hc = 0-1
ends = 1-6
dimension = yes
[expected]
hc.0 = pro-trivial
hc.1 = stable(1)
ends = 2 ends
dimension = 0
[provenance]
hc.0 = oracle: relative H0 of a line rel two rays vanishes at every stage
hc.1 = oracle: hand computation of H1 of the line rel two rays, rank 1 at every stage
ends = oracle: BFS components of ball complements
dimension = oracle: two-point boundary has dimension 0
""",
    "plane": """
[scenario]
name = plane
description = free abelian group of rank 2; one end
[group]
kind = free-abelian
rank = 2
[space]
kind = cayley-only
R = 8
radii = 1-6
[tasks]
hc = 0
ends = 1-6
[expected]
hc.0 = pro-trivial
ends = 1 end
[provenance]
hc.0 = oracle: connected complements carry no relative H0
ends = oracle: BFS components of ball complements
""",
    "free-tree": """
[scenario]
name = free-tree
description = free group of rank 2 on its tree; Cantor set of ends
[group]
kind = free
rank = 2
[space]
kind = cayley-only
R = 7
radii = 1-5
[tasks]
hc = 1
ends = 1-5
dimension = yes
[expected]
hc.1 = growing
ends = growing
dimension = 0
[provenance]
hc.1 = oracle: stage rank is the number of complementary branches minus one
ends = oracle: BFS component counts 4*3^(n-1)
dimension = oracle: a Cantor set has dimension 0
""",
    "punctured-torus": """
[scenario]
name = punctured-torus
description = free group of rank 2 relative to the commutator; circle boundary
[group]
kind = free
rank = 2
[peripherals]
P = abAB
[space]
kind = cusped-complex
R = 8
T = 8
radii = 1-6
[tasks]
hc = 0-2
dimension = yes
regularity = 3-6
[expected]
hc.0 = pro-trivial
hc.1 = pro-trivial
hc.2 = stable(1)
dimension = 1
regularity = bounded
[provenance]
hc.0 = known answer: reduced cohomology of a circle vanishes in degree 0
hc.1 = known answer: the boundary circle is connected
hc.2 = known answer: top cohomology of the boundary circle is Z
dimension = known answer: the boundary is a circle
regularity = known answer: cochain complex of the cusped space is regular
""",
    "pants": """
[scenario]
name = pants
description = free group of rank 2 relative to a, b and ab; circle boundary
[group]
kind = free
rank = 2
[peripherals]
A = a
B = b
C = ab
[space]
kind = cusped-complex
R = 8
T = 8
radii = 1-6
[tasks]
hc = 0-2
dimension = yes
[expected]
hc.0 = pro-trivial
hc.1 = pro-trivial
hc.2 = stable(1)
dimension = 1
[provenance]
hc.0 = known answer: reduced cohomology of a circle vanishes in degree 0
hc.1 = known answer: the boundary circle is connected
hc.2 = known answer: top cohomology of the boundary circle is Z
dimension = known answer: the boundary is a circle
""",
    "free-rel-a": """
[scenario]
name = free-rel-a
description = free group of rank 2 relative to one generator; disconnected boundary
[group]
kind = free
rank = 2
[peripherals]
P = a
[space]
kind = cusped-complex
R = 8
T = 8
radii = 1-6
[tasks]
hc = 1-2
[expected]
hc.1 = growing
hc.2 = pro-trivial
[provenance]
hc.1 = oracle: complementary pieces multiply with the radius
hc.2 = oracle: direct computation of the stage groups and composite image ranks
""",
    "ray": """
[scenario]
name = ray
description = half-open interval
[group]
kind = free
rank = 1
[space]
kind = cylinder
K = point
T = 8
radii = 1-6
[tasks]
hc = 0-1
[expected]
hc.0 = pro-trivial
hc.1 = pro-trivial
[provenance]
hc.0 = known answer: compactly supported cohomology of a half-open interval vanishes
hc.1 = known answer: compactly supported cohomology of a half-open interval vanishes
""",
    "cylinder": """
[scenario]
name = cylinder
description = half-open cylinder over a hollow triangle
[group]
kind = free
rank = 1
[space]
kind = cylinder
K = hollow-triangle
T = 8
radii = 1-6
[tasks]
hc = 0-2
[expected]
hc.0 = pro-trivial
hc.1 = pro-trivial
hc.2 = pro-trivial
[provenance]
hc.0 = known answer: half-open cylinders have vanishing compactly supported cohomology
hc.1 = known answer: half-open cylinders have vanishing compactly supported cohomology
hc.2 = known answer: half-open cylinders have vanishing compactly supported cohomology
""",
    "parabolic-probe": """
[scenario]
name = parabolic-probe
description = local homology near a parabolic point of the free group relative to a
seed = 0
[group]
kind = free
rank = 2
[peripherals]
P = a
[space]
kind = cusped-graph
R = 3
T = 16
D = 12
proxy = parabolic 0:e
[tasks]
delta = 3000
local = 1:14, 2:16
[expected]
local = vanishes
[provenance]
local = oracle: component and cycle counts of Rips complexes before and after inclusion
""",
    "small-cusped-graph": """
[scenario]
name = small-cusped-graph
description = free group of rank 2 relative to a, ball radius 2, one horoball level
[group]
kind = free
rank = 2
[peripherals]
P = a
[space]
kind = cusped-graph
R = 2
T = 1
[tasks]
delta = 2000
""",
}
