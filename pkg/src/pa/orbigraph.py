"""Weighted-graph models of pared 3-orbifolds.

An orbifold here is a triple (W, Sigma, w): an ambient space tag, a graph
Sigma inside it, and a weight function w on edges with values in
{1, 2, 3, ...} u {inf}.  Finite weights >= 2 mark singular locus indices,
inf marks parabolic locus (cusps), and weight 1 marks an edge that is not
really there (it is elided, smoothing its endpoints away).

Structural rules:
* interior vertices are trivalent (loops count twice), except that a
  degree-4 vertex is allowed when all four incident edge germs have
  weight 2 (an S^2(2,2,2,2) parabolic locus), and a degree-2 vertex is
  allowed when both germs belong to one loop edge (the basepoint of a
  free circle component, treated as a smooth point);
* boundary components are modeled as one boundary-flagged vertex each,
  collecting every strand end on that component.

The sphere condition (SC) for a boundary sphere S asks |S n Sigma| >= 3,
and when equal to 3 that sum(1/w(e_i)) <= 1.  Orbifold surgery replaces
the weight function, caps boundary spheres that became spherical
3-punctured spheres with a cone (the boundary vertex becomes an interior
trivalent vertex), and elides weight-1 edges.

Z_2-homology of a closed S^3 graph orbifold O is computed from the
presentation with one generator per edge meridian, relations m_e = 0 for
finite odd w(e), and the germ-sum relation at every interior vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .slopes import Slope, canonical, hat, slope


class _Infinity:
    """Weight value for parabolic (cusp) edges; compares equal only to
    itself and counts as an even weight."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

AMBIENTS = ("S3", "RP3", "ball-pair", "abstract")


def is_weight(w) -> bool:
    return w is INF or (isinstance(w, int) and not isinstance(w, bool) and w >= 1)


def weight_recip(w) -> Fraction:
    return Fraction(0) if w is INF else Fraction(1, w)


def weight_is_even(w) -> bool:
    return w is INF or w % 2 == 0


def weight_str(w) -> str:
    return "inf" if w is INF else str(w)


def parse_weight(s):
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if s is INF or s == "inf":
        return INF
    return int(s)


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]
    weight: object

    def __post_init__(self):
        object.__setattr__(self, "ends", tuple(sorted(self.ends)))

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    def other_end(self, v: str) -> str:
        a, b = self.ends
        return b if v == a else a


class GraphStructureError(ValueError):
    pass


class WeightedGraphOrbifold:
    """Immutable-by-convention weighted graph in an ambient space."""

    def __init__(self, ambient: str, vertices, edges, name: str | None = None):
        if ambient not in AMBIENTS:
            raise GraphStructureError(f"unknown ambient {ambient!r}")
        self.ambient = ambient
        self.name = name
        self._vertices: dict[str, bool] = {}
        for vid, boundary in vertices:
            if vid in self._vertices:
                raise GraphStructureError(f"duplicate vertex id {vid!r}")
            self._vertices[str(vid)] = bool(boundary)
        self._edges: dict[str, Edge] = {}
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(item[0], tuple(item[1]), item[2])
            if e.id in self._edges:
                raise GraphStructureError(f"duplicate edge id {e.id!r}")
            for v in e.ends:
                if v not in self._vertices:
                    raise GraphStructureError(f"edge {e.id!r} touches unknown vertex {v!r}")
            if not is_weight(e.weight):
                raise GraphStructureError(f"bad weight {e.weight!r} on edge {e.id!r}")
            self._edges[e.id] = e
        self._validate_degrees()

    # -- basic queries -------------------------------------------------------
    def vertex_ids(self) -> list[str]:
        return list(self._vertices)

    def is_boundary(self, v: str) -> bool:
        return self._vertices[v]

    def edges(self) -> list[Edge]:
        return list(self._edges.values())

    def edge(self, eid: str) -> Edge:
        return self._edges[eid]

    def edge_ids(self) -> list[str]:
        return list(self._edges)

    def germs(self, v: str) -> list[Edge]:
        """Incident edges with loops listed twice."""
        out = []
        for e in self._edges.values():
            if e.ends[0] == v:
                out.append(e)
            if e.ends[1] == v:
                out.append(e)
        return out

    def degree(self, v: str) -> int:
        return len(self.germs(v))

    def _validate_degrees(self) -> None:
        for v, boundary in self._vertices.items():
            if boundary:
                continue
            germs = self.germs(v)
            deg = len(germs)
            if deg == 3:
                continue
            if deg == 4 and all(e.weight == 2 for e in germs):
                continue
            if deg == 2 and germs[0].is_loop and germs[0] is germs[1]:
                continue
            raise GraphStructureError(
                f"interior vertex {v!r} has invalid star (degree {deg})"
            )

    # -- equality and isomorphism ---------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, WeightedGraphOrbifold):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash(
            (self.ambient, tuple(sorted(self._vertices.items())),
             tuple(sorted(self._edges.items())))
        )

    def _pair_weights(self):
        """Map unordered vertex pair -> sorted multiset of edge weights."""
        out: dict[tuple[str, str], list] = {}
        for e in self._edges.values():
            out.setdefault(e.ends, []).append(weight_str(e.weight))
        return {k: sorted(v) for k, v in out.items()}

    def is_isomorphic(self, other: "WeightedGraphOrbifold") -> bool:
        """Exhaustive labeled matching; graphs here are tiny."""
        if self.ambient != other.ambient:
            return False
        if len(self._vertices) != len(other._vertices):
            return False
        if len(self._edges) != len(other._edges):
            return False
        mine, theirs = self.vertex_ids(), other.vertex_ids()
        pw1, pw2 = self._pair_weights(), other._pair_weights()
        sig1 = {v: (self._vertices[v], self.degree(v)) for v in mine}
        sig2 = {v: (other._vertices[v], other.degree(v)) for v in theirs}
        if sorted(sig1.values()) != sorted(sig2.values()):
            return False
        for perm in itertools.permutations(theirs):
            assign = dict(zip(mine, perm))
            if any(sig1[v] != sig2[assign[v]] for v in mine):
                continue
            image = {
                tuple(sorted((assign[a], assign[b]))): ws for (a, b), ws in pw1.items()
            }
            if image == pw2:
                return True
        return False

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return (
            f"<WeightedGraphOrbifold{tag} ambient={self.ambient} "
            f"|V|={len(self._vertices)} |E|={len(self._edges)}>"
        )


# ---------------------------------------------------------------------------
# Sphere condition and vertex geometry


@dataclass(frozen=True)
class SCViolation:
    vertex: str
    clause: str  # "punctures" or "reciprocal-sum"
    detail: str


def check_sc(g: WeightedGraphOrbifold) -> list[SCViolation]:
    """Violations of the sphere condition; empty list means pass."""
    violations = []
    for v in g.vertex_ids():
        if not g.is_boundary(v):
            continue
        germs = g.germs(v)
        k = len(germs)
        if k < 3:
            violations.append(
                SCViolation(v, "punctures", f"|S n Sigma| = {k} < 3")
            )
        elif k == 3:
            total = sum((weight_recip(e.weight) for e in germs), Fraction(0))
            if total > 1:
                ws = ",".join(weight_str(e.weight) for e in germs)
                violations.append(
                    SCViolation(v, "reciprocal-sum", f"weights ({ws}) sum to {total} > 1")
                )
    return violations


def vertex_geometry(g: WeightedGraphOrbifold, v: str) -> str:
    """"spherical", "euclidean" or "hyperbolic" by the reciprocal-sum
    trichotomy at an interior trivalent vertex (1/inf = 0)."""
    if g.is_boundary(v):
        raise ValueError(f"vertex {v!r} is a boundary component, not trivalent")
    germs = g.germs(v)
    if len(germs) != 3:
        raise ValueError(
            f"vertex {v!r} has degree {len(germs)}; geometry is defined for "
            "trivalent vertices only"
        )
    total = sum((weight_recip(e.weight) for e in germs), Fraction(0))
    if total > 1:
        return "spherical"
    if total == 1:
        return "euclidean"
    return "hyperbolic"


# ---------------------------------------------------------------------------
# Weight-1 elision


def _elide_weight_one(ambient, vertices, edges, name=None) -> WeightedGraphOrbifold:
    """Drop weight-1 edges and smooth the resulting degree-2 interior
    vertices by merging their two germs (which must have equal weights)."""
    vertices = dict(vertices)
    edges = {e.id: e for e in edges if e.weight != 1}

    def germs_of(v):
        out = []
        for e in edges.values():
            for end in e.ends:
                if end == v:
                    out.append(e)
        return out

    changed = True
    while changed:
        changed = False
        for v in sorted(vertices):
            if vertices[v]:  # boundary components are never smoothed
                continue
            germs = germs_of(v)
            if len(germs) == 0:
                del vertices[v]
                changed = True
                break
            if len(germs) == 1:
                raise GraphStructureError(
                    f"elision leaves vertex {v!r} with a single germ"
                )
            if len(germs) == 2:
                e1, e2 = germs
                if e1 is e2:
                    continue  # free circle basepoint; a smooth point
                if e1.weight != e2.weight:
                    raise GraphStructureError(
                        f"cannot smooth vertex {v!r}: germ weights "
                        f"{weight_str(e1.weight)} != {weight_str(e2.weight)}"
                    )
                new_id = min(e1.id, e2.id)
                merged = Edge(new_id, (e1.other_end(v), e2.other_end(v)), e1.weight)
                del edges[e1.id], edges[e2.id]
                del vertices[v]
                edges[new_id] = merged
                changed = True
                break
    return WeightedGraphOrbifold(
        ambient, list(vertices.items()), list(edges.values()), name=name
    )


# ---------------------------------------------------------------------------
# Orbifold surgery


class OrbifoldSurgeryError(ValueError):
    pass


def surger(g: WeightedGraphOrbifold, reweight: dict) -> WeightedGraphOrbifold:
    """Replace weights per ``reweight`` (edge-id -> weight in {1,2,...,inf}),
    cap boundary spheres that became spherical 3-punctured spheres with a
    cone vertex, elide weight-1 edges, and return the augmented graph.

    Raises OrbifoldSurgeryError when the result cannot satisfy the sphere
    condition or the structural rules.
    """
    new_edges = []
    for e in g.edges():
        if e.id in reweight:
            w = parse_weight(reweight[e.id])
            if not is_weight(w):
                raise OrbifoldSurgeryError(f"bad weight {reweight[e.id]!r}")
            e = Edge(e.id, e.ends, w)
        new_edges.append(e)
    unknown = set(reweight) - {e.id for e in new_edges}
    if unknown:
        raise OrbifoldSurgeryError(f"unknown edge ids {sorted(unknown)}")

    by_end: dict[str, list[Edge]] = {}
    for e in new_edges:
        for end in e.ends:
            by_end.setdefault(end, []).append(e)
    vertices = []
    for v in g.vertex_ids():
        boundary = g.is_boundary(v)
        if boundary:
            germs = by_end.get(v, [])
            if len(germs) == 3:
                total = sum((weight_recip(e.weight) for e in germs), Fraction(0))
                if total > 1:  # now a spherical 3-punctured sphere: cap it
                    boundary = False
        vertices.append((v, boundary))

    try:
        result = _elide_weight_one(g.ambient, vertices, new_edges)
    except GraphStructureError as err:
        raise OrbifoldSurgeryError(str(err)) from None
    violations = check_sc(result)
    if violations:
        first = violations[0]
        raise OrbifoldSurgeryError(
            f"surgered graph violates SC at {first.vertex!r}: {first.detail}"
        )
    return result


# ---------------------------------------------------------------------------
# Z_2 homology


@dataclass(frozen=True)
class H1Z2Report:
    """dim H_1(O; Z_2) with meridian classes in a fixed basis.

    ``basis`` lists the edge ids whose meridians form a basis;
    ``meridian_class`` maps every edge id to its coordinate vector.
    """

    dimension: int
    basis: tuple[str, ...]
    meridian_class: dict[str, tuple[int, ...]]


def h1_z2(g: WeightedGraphOrbifold) -> H1Z2Report:
    """Z_2 homology of a closed graph orbifold in S^3.

    Generators: one meridian per edge.  Relations: m_e = 0 for every edge
    of finite odd weight (weight inf counts as even and keeps its
    generator); at every interior vertex the incident germs sum to zero
    (loops contribute twice, hence nothing; degree-4 parabolic vertices
    contribute one relation over their four germs).
    """
    if g.ambient != "S3":
        raise ValueError("h1_z2 is defined for ambient S3 graphs")
    if any(g.is_boundary(v) for v in g.vertex_ids()):
        raise ValueError("h1_z2 needs a closed (boundaryless) graph")
    eids = sorted(g.edge_ids())
    col = {eid: i for i, eid in enumerate(eids)}
    rows = []
    for eid in eids:
        if not weight_is_even(g.edge(eid).weight):
            rows.append(1 << col[eid])
    for v in g.vertex_ids():
        mask = 0
        for e in g.germs(v):
            if not e.is_loop:  # loops contribute 2*m_e = 0
                mask ^= 1 << col[e.id]
        # each non-loop germ toggles once per endpoint at v; loops never
        if mask:
            rows.append(mask)
    pivots, reduced = _gf2_rref(rows, len(eids))
    free = [i for i in range(len(eids)) if i not in pivots]
    free_index = {c: i for i, c in enumerate(free)}
    classes: dict[str, tuple[int, ...]] = {}
    pivot_row = {c: r for c, r in zip(pivots, reduced)}
    for eid in eids:
        c = col[eid]
        vec = [0] * len(free)
        if c in free_index:
            vec[free_index[c]] = 1
        else:
            row = pivot_row[c]
            for fc, fi in free_index.items():
                if row >> fc & 1:
                    vec[fi] = 1
        classes[eid] = tuple(vec)
    return H1Z2Report(len(free), tuple(eids[i] for i in free), classes)


def _gf2_rref(rows, ncols):
    """Reduced row echelon form over GF(2) on bitmask rows; returns the
    pivot column list and the reduced pivot rows (in pivot order)."""
    pivots, reduced = [], []
    rows = [r for r in rows if r]
    for c in range(ncols):
        pivot_row = None
        for i, r in enumerate(rows):
            if r >> c & 1:
                pivot_row = rows.pop(i)
                break
        if pivot_row is None:
            continue
        rows = [r ^ pivot_row if r >> c & 1 else r for r in rows]
        reduced = [r ^ pivot_row if r >> c & 1 else r for r in reduced]
        pivots.append(c)
        reduced.append(pivot_row)
    return pivots, reduced


# ---------------------------------------------------------------------------
# Descriptors and family constructors


FAMILY_TAGS = ("E", "M0", "M1", "M2", "O", "Oinf", "ORP3O", "D22xI", "custom")


@dataclass(frozen=True)
class ParedOrbifoldDescriptor:
    """A weighted graph together with its family tag and parameters.

    ``parabolic_edges`` is the set of weight-inf edge ids (the parabolic
    locus P); ``family`` holds the tag and its defining parameters.
    """

    graph: WeightedGraphOrbifold
    parabolic_edges: frozenset[str]
    family: dict

    def __post_init__(self):
        tag = self.family.get("tag")
        if tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {tag!r}")
        expected = frozenset(
            e.id for e in self.graph.edges() if e.weight is INF
        )
        if frozenset(self.parabolic_edges) != expected:
            raise ValueError("parabolic_edges must be exactly the weight-inf edges")
        object.__setattr__(self, "parabolic_edges", frozenset(self.parabolic_edges))

    @property
    def tag(self) -> str:
        return self.family["tag"]


def _descriptor(graph: WeightedGraphOrbifold, family: dict) -> ParedOrbifoldDescriptor:
    parabolic = frozenset(e.id for e in graph.edges() if e.weight is INF)
    return ParedOrbifoldDescriptor(graph, parabolic, family)


def _template_graph(p_even: bool, arc_weights, w_plus, w_minus, name=None):
    """The 2-bridge template: K(r) u tau+ u tau- with the four vertices
    a1, a2 = ends of tau+ and b1, b2 = ends of tau-.

    For p odd K(r) is the 4-cycle a1-b1-a2-b2 (arcs K1..K4); for p even it
    is two parallel-arc pairs a1=b1 (K1, K2) and a2=b2 (K3, K4), one pair
    per link component.
    """
    vertices = [("a1", False), ("a2", False), ("b1", False), ("b2", False)]
    if p_even:
        ends = {"K1": ("a1", "b1"), "K2": ("a1", "b1"),
                "K3": ("a2", "b2"), "K4": ("a2", "b2")}
    else:
        ends = {"K1": ("a1", "b1"), "K2": ("b1", "a2"),
                "K3": ("a2", "b2"), "K4": ("b2", "a1")}
    edges = [Edge(k, ends[k], arc_weights[k]) for k in ("K1", "K2", "K3", "K4")]
    edges.append(Edge("tplus", ("a1", "a2"), w_plus))
    edges.append(Edge("tminus", ("b1", "b2"), w_minus))
    return _elide_weight_one("S3", vertices, edges, name=name)


def make_heckoid(r, n) -> ParedOrbifoldDescriptor:
    """The Heckoid orbifold of slope r and index n (2n integral, 2n >= 3).

    Integral n gives M0(r;n): K(r) with weight inf and tunnel tau- with
    weight n.  Half-integral n = m/2 gives, depending on the parity of the
    denominator of r, M1(r^;m) (theta-curve: J1 inf, J2 2, tau- m) or
    M2(r^;m) (J1 inf, J2 2, tau+ 2, tau- m), where r^ is the doubled-index
    slope substitution.
    """
    r = slope(r)
    if r.is_infinite:
        raise ValueError("Heckoid families need a finite slope")
    twice = Fraction(n) * 2
    if twice.denominator != 1 or twice < 3:
        raise ValueError(f"index must be a half-integer >= 3/2, got {n}")
    twice = int(twice)
    if twice % 2 == 0:
        n_int = twice // 2
        graph = _template_graph(
            r.p % 2 == 0,
            {"K1": INF, "K2": INF, "K3": INF, "K4": INF},
            1,
            n_int,
            name=f"M0({r};{n_int})",
        )
        return _descriptor(graph, {"tag": "M0", "r": str(r), "n": n_int})
    m = twice
    rhat = hat(r)
    if r.p % 2 == 1:
        graph = _template_graph(
            False,
            {"K1": INF, "K2": 2, "K3": 2, "K4": INF},
            1,
            m,
            name=f"M1({rhat};{m})",
        )
        return _descriptor(
            graph,
            {"tag": "M1", "r": str(rhat), "m": m, "J1": ["K1"], "J2": ["K2"]},
        )
    graph = _template_graph(
        rhat.p % 2 == 0,
        {"K1": INF, "K2": 2, "K3": INF, "K4": 2},
        2,
        m,
        name=f"M2({rhat};{m})",
    )
    return _descriptor(
        graph,
        {"tag": "M2", "r": str(rhat), "m": m, "J1": ["K1", "K3"], "J2": ["K2", "K4"]},
    )


def make_dihedral(r, d_plus: int, d_minus: int) -> ParedOrbifoldDescriptor:
    """The dihedral orbifold O(r; d+, d-): K(r) with weight 2 and tunnels
    tau+ and tau- with coprime weights d+ and d- (weight-1 tunnels are
    elided)."""
    from math import gcd

    r = slope(r)
    if r.is_infinite:
        raise ValueError("O(r;d+,d-) needs a finite slope")
    if d_plus < 1 or d_minus < 1:
        raise ValueError("tunnel weights must be positive")
    if gcd(d_plus, d_minus) != 1:
        raise ValueError(f"tunnel weights must be coprime, got ({d_plus},{d_minus})")
    graph = _template_graph(
        r.p % 2 == 0,
        {"K1": 2, "K2": 2, "K3": 2, "K4": 2},
        d_plus,
        d_minus,
        name=f"O({r};{d_plus},{d_minus})",
    )
    return _descriptor(
        graph, {"tag": "O", "r": str(r), "d_plus": d_plus, "d_minus": d_minus}
    )


def make_exterior(r) -> ParedOrbifoldDescriptor:
    """The link exterior E(K(r)): K(r) itself with weight inf, no tunnels."""
    r = slope(r)
    if r.is_infinite:
        raise ValueError("E(K(r)) needs a finite slope")
    graph = _template_graph(
        r.p % 2 == 0,
        {"K1": INF, "K2": INF, "K3": INF, "K4": INF},
        1,
        1,
        name=f"E(K({r}))",
    )
    return _descriptor(graph, {"tag": "E", "r": str(r)})


def templates() -> list[ParedOrbifoldDescriptor]:
    """The three fixed orbifolds: O(inf), O(RP3,O), D2(2,2)xI."""
    o_inf = WeightedGraphOrbifold(
        "S3",
        [("c1", False), ("c2", False)],
        [Edge("L1", ("c1", "c1"), 2), Edge("L2", ("c2", "c2"), 2)],
        name="O(inf)",
    )
    o_rp3 = WeightedGraphOrbifold(
        "RP3",
        [("c1", False)],
        [Edge("L1", ("c1", "c1"), 2)],
        name="O(RP3,O)",
    )
    d22 = WeightedGraphOrbifold(
        "ball-pair",
        [("B", True)],
        [Edge("S1", ("B", "B"), 2), Edge("S2", ("B", "B"), 2)],
        name="D2(2,2)xI",
    )
    return [
        _descriptor(o_inf, {"tag": "Oinf"}),
        _descriptor(o_rp3, {"tag": "ORP3O"}),
        _descriptor(d22, {"tag": "D22xI"}),
    ]


# ---------------------------------------------------------------------------
# Canonical keys


def canonical_key(d: ParedOrbifoldDescriptor) -> str:
    """Deterministic normal form, constant under the stated identifications:
    slopes are replaced by their preserving-equivalence canonical form
    (which subsumes M2(r;m) = M2((p+q)/p;m), a mod-p move), and
    O(q/p;d+,d-) = O(q'/p;d-,d+) for qq' = 1 mod p picks the
    lexicographically least (q, d+, d-) triple."""
    tag = d.tag
    family = d.family
    if tag == "custom":
        raise ValueError("custom descriptors have no canonical key")
    if tag in ("Oinf", "ORP3O", "D22xI"):
        return tag
    r = slope(family["r"])
    if tag == "E":
        return f"E[{canonical(r)}]"
    if tag == "M0":
        return f"M0[{canonical(r)};{family['n']}]"
    if tag == "M1":
        return f"M1[{canonical(r)};{family['m']}]"
    if tag == "M2":
        return f"M2[{canonical(r)};{family['m']}]"
    if tag == "O":
        d1, d2 = family["d_plus"], family["d_minus"]
        p = r.p
        q = r.q % p if p > 1 else 0
        candidates = [(q, d1, d2)]
        if p > 1:
            candidates.append((pow(q, -1, p), d2, d1))
        else:
            candidates.append((q, d2, d1))
        qc, c1, c2 = min(candidates)
        return f"O[{qc}/{p};{c1},{c2}]"
    raise ValueError(f"unhandled family {tag!r}")


# ---------------------------------------------------------------------------
# JSON


def graph_to_json(g: WeightedGraphOrbifold) -> dict:
    return {
        "ambient": g.ambient,
        "vertices": [
            {"id": v, "boundary": g.is_boundary(v)} for v in g.vertex_ids()
        ],
        "edges": [
            {"id": e.id, "ends": list(e.ends), "weight": weight_str(e.weight)}
            for e in g.edges()
        ],
    }


def descriptor_to_json(d: ParedOrbifoldDescriptor) -> dict:
    obj = graph_to_json(d.graph)
    obj["family"] = dict(d.family)
    return obj


def graph_from_json(obj: dict) -> WeightedGraphOrbifold:
    vertices = [(v["id"], bool(v.get("boundary", False))) for v in obj["vertices"]]
    edges = [
        Edge(e["id"], tuple(e["ends"]), parse_weight(e["weight"]))
        for e in obj["edges"]
    ]
    return WeightedGraphOrbifold(obj["ambient"], vertices, edges)


def descriptor_from_json(obj: dict) -> ParedOrbifoldDescriptor:
    graph = graph_from_json(obj)
    family = dict(obj.get("family") or {"tag": "custom"})
    return _descriptor(graph, family)
