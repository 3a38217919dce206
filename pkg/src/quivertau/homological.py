"""Projective covers, syzygies, projective and global dimension.

Infinite projective dimension is certified in one of two ways: isomorphic
minimal syzygies at distinct indices, or (for monomial algebras) a cycle in
the chain automaton of overlapping relations.  The two detectors are
independent and cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg as rl
from .ratlinalg import F0, F1, Matrix
from .presentations import (AlgebraElement, BoundQuiver, InternalConsistencyError,
                            Path, PresentationError, recognize_class, trivial_path)
from .representations import (Morphism, Representation, StringWord, is_isomorphic,
                              radical_subspace, standard_module, string_is_valid,
                              _supports_included)


class ProjSum:
    """A finite direct sum of indecomposable projectives with coordinates
    indexed by (copy, normal-form path); the workhorse behind covers and
    presentations."""

    def __init__(self, algebra: BoundQuiver, vertices: list[str]):
        self.algebra = algebra
        self.vertices = list(vertices)
        self.coords: dict[str, list[tuple[int, Path]]] = {v: [] for v in algebra.quiver.vertices}
        for k, v in enumerate(self.vertices):
            for p in algebra.basis:
                if p.source == v:
                    self.coords[p.target].append((k, p))
        self.row_index = {a: {kp: i for i, kp in enumerate(self.coords[a])}
                          for a in self.coords}
        dims = {a: len(self.coords[a]) for a in self.coords}
        maps = {}
        for name, (s, t) in algebra.quiver.arrow_map().items():
            arrow = Path(s, t, (name,))
            m = rl.zeros(dims[s], dims[t])
            for i, (k, p) in enumerate(self.coords[s]):
                for q, c in algebra.path_nf(p * arrow).terms.items():
                    m[i][self.row_index[t][(k, q)]] += c
            maps[name] = m
        self.rep = Representation(algebra, dims, maps, check=False)

    def generator_coord(self, k: int) -> tuple[str, int]:
        v = self.vertices[k]
        return v, self.row_index[v][(k, trivial_path(v))]

    def morphism_to(self, target: Representation, gen_images: list[list[Fraction]]) -> Morphism:
        """The map sending the k-th generator to the given row of target at
        the k-th vertex, extended by the right action."""
        blocks = {}
        for a in self.coords:
            rows = []
            for (k, p) in self.coords[a]:
                rows.append(rl.row_mul(gen_images[k], target.path_matrix(p),
                                       ncols=target.dims[a]))
            blocks[a] = rows if rows else rl.zeros(0, target.dims[a])
        return Morphism(self.rep, target, blocks)

    def vector_to_elements(self, a: str, vec: list[Fraction]) -> list[AlgebraElement]:
        """Split a coordinate vector at vertex a into one algebra element
        per summand (paths v_k -> a)."""
        per = [dict() for _ in self.vertices]
        for i, (k, p) in enumerate(self.coords[a]):
            if vec[i]:
                per[k][p] = vec[i]
        return [AlgebraElement(d) for d in per]


@dataclass
class AlgebraElementMatrix:
    """A map between sums of projectives stored as algebra elements:
    entry[k][l] lies in e_{row_vertices[k]} A e_{col_vertices[l]} and the map
    sends (x_l) to (sum_l entry[k][l] * x_l)."""

    row_vertices: list[str]
    col_vertices: list[str]
    entries: list[list[AlgebraElement]]


@dataclass
class MinimalPresentation:
    module: Representation
    p0: ProjSum
    cover: Morphism          # P0 -> M, a projective cover
    syzygy: Representation   # ker(cover)
    p1: ProjSum
    p1_cover: Morphism       # P1 -> syzygy, a projective cover
    p_morphism: Morphism     # P1 -> P0
    matrix: AlgebraElementMatrix


def top_generators(m: Representation) -> list[tuple[str, list[Fraction]]]:
    """Rows of M spanning M/rad M, tagged by vertex, in canonical order."""
    rad = radical_subspace(m)
    gens = []
    for v in m.algebra.quiver.vertices:
        if m.dims[v] == 0:
            continue
        red, piv = rl.rref(rad[v]) if rad[v] else ([], [])
        pivset = set(piv)
        for j in range(m.dims[v]):
            if j not in pivset:
                row = [F0] * m.dims[v]
                row[j] = F1
                gens.append((v, row))
    return gens


def projective_cover(m: Representation) -> tuple[ProjSum, Morphism]:
    gens = top_generators(m)
    ps = ProjSum(m.algebra, [v for v, _ in gens])
    eps = ps.morphism_to(m, [row for _, row in gens])
    return ps, eps


def syzygy_step(m: Representation) -> Representation:
    """Kernel of a projective cover (the first minimal syzygy)."""
    if m.is_zero():
        return m
    _, eps = projective_cover(m)
    ker, _ = eps.kernel()
    return ker


def minimal_presentation(m: Representation) -> MinimalPresentation:
    """Minimal projective presentation P1 -> P0 -> M -> 0 with the map
    P1 -> P0 also extracted as a matrix of algebra elements."""
    if m.is_zero():
        raise PresentationError("zero module has no minimal presentation")
    p0, eps = projective_cover(m)
    ker, emb = eps.kernel()
    kgens = top_generators(ker)
    p1 = ProjSum(m.algebra, [v for v, _ in kgens])
    p1_cover = p1.morphism_to(ker, [row for v, row in kgens])
    embm = Morphism(ker, p0.rep, emb)
    p_mor = p1_cover.compose(embm)
    entries = [[AlgebraElement() for _ in p1.vertices] for _ in p0.vertices]
    for l, (w, krow) in enumerate(kgens):
        p0row = rl.row_mul(krow, emb[w]) if ker.dims[w] else [F0] * p0.rep.dims[w]
        for k, elem in enumerate(p0.vector_to_elements(w, p0row)):
            entries[k][l] = elem
    mat = AlgebraElementMatrix(list(p0.vertices), list(p1.vertices), entries)
    return MinimalPresentation(m, p0, eps, ker, p1, p1_cover, p_mor, mat)


# -- projective dimension --------------------------------------------------


@dataclass(frozen=True)
class SyzygyPeriod:
    """Omega^i and Omega^j repeat: isomorphic, or with the same set of
    indecomposable summands (mode "stable-support"), which also forces the
    resolution to run forever."""
    i: int
    j: int
    mode: str = "isomorphic"


@dataclass(frozen=True)
class ChainCycle:
    """A cycle of (relation path, cut) states in the monomial chain
    automaton, witnessing an infinite overlap sequence."""
    states: tuple[tuple[Path, int], ...]


@dataclass(frozen=True)
class PdResult:
    kind: str  # "finite" | "infinite" | "at_least"
    value: int | None = None
    certificate: object | None = None

    @staticmethod
    def finite(d: int) -> "PdResult":
        return PdResult("finite", d)

    @staticmethod
    def infinite(cert) -> "PdResult":
        return PdResult("infinite", None, cert)

    @staticmethod
    def at_least(n: int) -> "PdResult":
        return PdResult("at_least", n)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def conclusive(self) -> bool:
        return self.kind != "at_least"

    def __str__(self) -> str:
        if self.kind == "finite":
            return f"ExactFinite({self.value})"
        if self.kind == "infinite":
            return f"Infinite({self.certificate})"
        return f"AtLeast({self.value})"


def _supports_equal(a: Representation, b: Representation) -> bool:
    return _supports_included(a, b) and _supports_included(b, a)


def pd(m: Representation, cutoff: int = 12, dim_cap: int = 400) -> PdResult:
    """Projective dimension by iterating minimal syzygies.

    ExactFinite(d) once a syzygy vanishes; Infinite with a SyzygyPeriod
    certificate when two nonzero syzygies at distinct indices are isomorphic
    or have the same summand support; otherwise AtLeast(levels computed).
    """
    if m.is_zero():
        return PdResult.finite(-1)
    if cutoff < 1:
        raise PresentationError("cutoff must be >= 1")
    chain = [m]
    for d in range(1, cutoff + 2):
        k = syzygy_step(chain[-1])
        if k.is_zero():
            return PdResult.finite(d - 1)
        for i, prev in enumerate(chain):
            if prev.dim_vector() == k.dim_vector() and is_isomorphic(prev, k):
                return PdResult.infinite(SyzygyPeriod(i, d, "isomorphic"))
        for i, prev in enumerate(chain):
            if (prev.total_dim + k.total_dim <= 120
                    and _supports_equal(prev, k)):
                return PdResult.infinite(SyzygyPeriod(i, d, "stable-support"))
        if k.total_dim > dim_cap:
            return PdResult.at_least(d)
        chain.append(k)
    return PdResult.at_least(cutoff)


def gldim(algebra: BoundQuiver, cutoff: int = 12) -> PdResult:
    """Global dimension: the maximum of pd over the simple modules, with
    Infinite dominating and AtLeast propagating as inconclusive."""
    best = -1
    pending = None
    for v in algebra.quiver.vertices:
        r = pd(standard_module(algebra, "S", v), cutoff)
        if r.is_infinite:
            return r
        if r.kind == "at_least":
            pending = max(pending or 0, r.value)
        else:
            best = max(best, r.value)
    if pending is not None:
        return PdResult.at_least(max(pending, best))
    return PdResult.finite(best)


# -- the monomial chain automaton ------------------------------------------


def _is_monomial(algebra: BoundQuiver) -> bool:
    cache = algebra._caches
    if "is_monomial" not in cache:
        cache["is_monomial"] = recognize_class(algebra).is_monomial
    return cache["is_monomial"]


def chain_transitions(rels: list[Path], state: tuple[int, int]) -> list[tuple[int, int]]:
    """Successor states of (relation index, cut): the next relation must
    genuinely overlap, its prefix matching a suffix of the current relation
    that starts at or after the cut."""
    ri, cut = state
    r = rels[ri].arrows
    out = []
    for p in range(cut, len(r)):
        suffix = r[p:]
        for j, other in enumerate(rels):
            if other.arrows[:len(suffix)] == suffix and len(other.arrows) > len(suffix):
                out.append((j, len(r) - p))
    return out


def monomial_pd_exact(algebra: BoundQuiver, vertex: str,
                      cross_check: bool = True) -> PdResult:
    """pd of S(vertex) over a monomial algebra via the overlap-chain
    automaton; finite answers are cross-checked against the syzygy oracle
    and a disagreement raises, never guesses."""
    if not _is_monomial(algebra):
        raise PresentationError("algebra is not monomial")
    if vertex not in algebra.quiver.vertices:
        raise PresentationError(f"unknown vertex {vertex!r}")
    rels = algebra.minimal_zero_paths()
    initial = [(i, 1) for i, r in enumerate(rels) if r.source == vertex]
    if not initial:
        result = PdResult.finite(0 if not algebra.quiver.arrows_from(vertex) else 1)
    else:
        # DFS with cycle detection and longest-chain computation
        color: dict[tuple[int, int], int] = {}
        longest: dict[tuple[int, int], int] = {}
        cycle_holder: list[list[tuple[int, int]]] = []
        stack_path: list[tuple[int, int]] = []

        def dfs(s) -> int:
            color[s] = 1
            stack_path.append(s)
            best = 1
            for t in chain_transitions(rels, s):
                c = color.get(t, 0)
                if c == 1:
                    idx = stack_path.index(t)
                    cycle_holder.append(stack_path[idx:])
                    raise _CycleFound()
                if c == 2:
                    best = max(best, 1 + longest[t])
                else:
                    best = max(best, 1 + dfs(t))
            stack_path.pop()
            color[s] = 2
            longest[s] = best
            return best

        try:
            n = 0
            for s in initial:
                if color.get(s, 0) != 2:
                    n = max(n, dfs(s))
                else:
                    n = max(n, longest[s])
            result = PdResult.finite(n + 1)
        except _CycleFound:
            cyc = tuple((rels[i], c) for i, c in cycle_holder[0])
            result = PdResult.infinite(ChainCycle(cyc))
    if cross_check and result.is_finite:
        oracle = pd(standard_module(algebra, "S", vertex), result.value + 2)
        if oracle.conclusive and oracle != result:
            raise InternalConsistencyError(
                f"chain automaton says {result} but syzygy oracle says {oracle} "
                f"for S({vertex})")
    return result


class _CycleFound(Exception):
    pass


# -- Tor against a nilpotent quotient ---------------------------------------


def module_ideal_image(m: Representation, ideal_elements: list[AlgebraElement]) -> dict[str, Matrix]:
    """Row spans of M*J per vertex, J given by spanning algebra elements."""
    spans: dict[str, list] = {v: [] for v in m.dims}
    for elem in ideal_elements:
        for comp in elem.components():
            s, t = comp.parallel_class()
            if m.dims[s] == 0:
                continue
            mat = m.elem_matrix(comp)
            for row in mat:
                if any(row):
                    spans[t].append(list(row))
    return {v: rl.row_space(rows) for v, rows in spans.items()}


def resolution(m: Representation, length: int) -> tuple[list[ProjSum], list[Morphism]]:
    """Minimal projective resolution data up to P_length: returns the
    projective terms and the differentials d_i: P_i -> P_{i-1} (d_0 = cover)."""
    terms: list[ProjSum] = []
    maps: list[Morphism] = []
    cur = m
    emb_prev: dict[str, Matrix] | None = None
    for i in range(length + 1):
        if cur.is_zero():
            break
        ps, eps = projective_cover(cur)
        if i == 0:
            maps.append(eps)
        else:
            embm = Morphism(cur, terms[-1].rep, emb_prev)
            maps.append(eps.compose(embm))
        terms.append(ps)
        ker, emb = eps.kernel()
        emb_prev = emb
        cur = ker
    return terms, maps


def tor_quotient_dims(m: Representation, ideal, degree: int, *,
                      _resolution=None) -> int:
    """dim Tor_degree(M, A/J) computed as homology of P_* tensored with A/J,
    i.e. of the complex P_i / P_i J."""
    if not ideal.nilpotent:
        raise PresentationError("ideal is not nilpotent")
    if degree < 0:
        raise PresentationError("degree must be >= 0")
    terms, maps = _resolution if _resolution is not None else resolution(m, degree + 1)
    jelems = ideal.elements
    algebra = m.algebra
    verts = algebra.quiver.vertices

    def quotient_data(ps: ProjSum):
        sub = module_ideal_image(ps.rep, jelems)
        out = {}
        for v in verts:
            red, piv = rl.rref(sub[v]) if sub[v] else ([], [])
            keep = [j for j in range(ps.rep.dims[v]) if j not in set(piv)]
            out[v] = (red, piv, keep)
        return out

    qdata = [quotient_data(t) for t in terms]

    def reduced_map(i: int) -> dict[str, Matrix]:
        """d_i tensored with A/J: from Q_i to Q_{i-1}."""
        blocks = {}
        src, tgt = qdata[i], qdata[i - 1]
        for v in verts:
            redt, pivt, keept = tgt[v]
            rows = []
            for j in src[v][2]:
                img = list(maps[i].blocks[v][j])
                img = rl.reduce_against(redt, pivt, img)
                rows.append([img[c] for c in keept])
            blocks[v] = rows
        return blocks

    def rank_of(i: int) -> int:
        if i >= len(terms) or i == 0:
            return 0
        blocks = reduced_map(i)
        return sum(rl.rank(blocks[v]) for v in verts if blocks[v])

    if degree == 0:
        q0_dim = sum(len(qdata[0][v][2]) for v in verts) if terms else 0
        return q0_dim - rank_of(1)
    if degree >= len(terms):
        return 0
    qm_dim = sum(len(qdata[degree][v][2]) for v in verts)
    return qm_dim - rank_of(degree) - rank_of(degree + 1)


# -- the HL global-dimension-two conditions ---------------------------------


@dataclass
class GDReport:
    gd1: bool
    gd2: bool
    gd3: bool
    witnesses: dict[str, list]

    @property
    def all_hold(self) -> bool:
        return self.gd1 and self.gd2 and self.gd3


def gd_conditions(algebra: BoundQuiver) -> GDReport:
    """The three combinatorial conditions characterizing special biserial
    algebras of global dimension at most two, checked by exhaustive
    enumeration over binomial pairs, minimal zero paths and nonzero paths."""
    rec = recognize_class(algebra)
    if not rec.is_special_biserial:
        raise PresentationError("algebra is not special biserial: "
                                + "; ".join(rec.violations))
    witnesses: dict[str, list] = {"gd1": [], "gd2": [], "gd3": []}
    binomials = algebra.binomial_pairs()
    nonzero = algebra.nonzero_paths()

    def path_vertices(p: Path) -> set[str]:
        amap = algebra.quiver.arrow_map()
        verts = {p.source}
        for a in p.arrows:
            verts.add(amap[a][1])
        return verts

    gd1 = True
    for i, (p, q) in enumerate(binomials):
        for j, (p2, q2) in enumerate(binomials):
            if i == j:
                continue
            if p.source in path_vertices(p2) | path_vertices(q2):
                gd1 = False
                witnesses["gd1"].append(((p, q), (p2, q2)))

    zero_rels = algebra.minimal_zero_paths()
    zero_arr = {z.arrows for z in zero_rels}

    def zero_occurrences(word: tuple[str, ...]) -> list[tuple[int, tuple[str, ...]]]:
        occ = []
        for z in zero_arr:
            for off in range(len(word) - len(z) + 1):
                if word[off:off + len(z)] == z:
                    occ.append((off, z))
        return occ

    gd2 = True
    for r1 in zero_rels:
        for cut in range(1, len(r1)):
            p2arr = r1.arrows[cut:]
            for r2 in zero_rels:
                if r2.arrows[:len(p2arr)] != p2arr or len(r2) <= len(p2arr):
                    continue
                word = r1.arrows + r2.arrows[len(p2arr):]
                occ = zero_occurrences(word)
                if sorted(occ) != sorted([(0, r1.arrows), (cut, r2.arrows)]):
                    continue
                p2 = algebra.make_path(list(p2arr))
                w2 = StringWord(tuple((a, True) for a in p2arr))
                if not string_is_valid(algebra, w2)[0]:
                    continue
                gd2 = False
                witnesses["gd2"].append((r1, r2, p2))

    gd3 = True
    for p, q in binomials:
        # binomial paths have length >= 2, so front/back truncations exist
        pre1 = algebra.make_path(list(p.arrows[:-1]))
        pre2 = algebra.make_path(list(q.arrows[:-1]))
        suf1 = algebra.make_path(list(p.arrows[1:]))
        suf2 = algebra.make_path(list(q.arrows[1:]))
        start, end = p.source, p.target
        for u in nonzero:
            if len(u) == 0 or u.target != start:
                continue
            if algebra.path_is_zero(u * pre1) and algebra.path_is_zero(u * pre2):
                gd3 = False
                witnesses["gd3"].append(("front", u, (p, q)))
        for v in nonzero:
            if len(v) == 0 or v.source != end:
                continue
            if algebra.path_is_zero(suf1 * v) and algebra.path_is_zero(suf2 * v):
                gd3 = False
                witnesses["gd3"].append(("back", v, (p, q)))
    return GDReport(gd1, gd2, gd3, witnesses)
