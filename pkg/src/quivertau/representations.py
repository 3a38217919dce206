"""Finite-dimensional right modules as quiver representations.

A representation assigns to each vertex a rational vector space (a
dimension) and to each arrow a matrix, acting on row vectors, so that every
relation of the bound quiver acts as zero.  The right-module convention
means a path p = a1*a2 acts as ``mat(a1) @ mat(a2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg as rl
from .ratlinalg import F0, F1, Matrix
from .presentations import (AlgebraElement, BoundQuiver, InternalConsistencyError,
                            Path, PresentationError, trivial_path)


class Representation:
    """A right module over a bound quiver algebra.

    ``dims`` maps vertices to dimensions and ``maps`` maps arrow labels to
    matrices of shape dims[source] x dims[target]; zero maps may be omitted.
    """

    def __init__(self, algebra: BoundQuiver, dims: dict[str, int],
                 maps: dict[str, Matrix] | None = None, check: bool = True):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.quiver.vertices}
        self.maps = {}
        amap = algebra.quiver.arrow_map()
        maps = maps or {}
        for name, (s, t) in amap.items():
            m = maps.get(name)
            if m is None:
                m = rl.zeros(self.dims[s], self.dims[t])
            else:
                m = [[rl.frac(x) for x in row] for row in m]
                if len(m) != self.dims[s] or any(len(r) != self.dims[t] for r in m):
                    raise PresentationError(
                        f"map for arrow {name} has wrong shape")
            self.maps[name] = m
        self._cache: dict = {}
        if check:
            self.check_relations()

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, p: Path) -> Matrix:
        m = rl.identity(self.dims[p.source])
        amap = self.algebra.quiver.arrow_map()
        for a in p.arrows:
            m = rl.mat_mul(m, self.maps[a], ncols=self.dims[amap[a][1]])
        return m

    def elem_matrix(self, elem: AlgebraElement) -> Matrix:
        """Action of a parallel element as a single matrix."""
        cls = elem.parallel_class()
        if cls is None:
            raise PresentationError("element is not parallel: " + str(elem))
        s, t = cls
        out = rl.zeros(self.dims[s], self.dims[t])
        for p, c in elem.terms.items():
            out = rl.mat_add(out, rl.mat_scale(c, self.path_matrix(p)))
        return out

    def check_relations(self) -> None:
        for g in self.algebra.relations:
            if not rl.mat_eq_zero(self.elem_matrix(g)):
                raise PresentationError(
                    f"relation {g} does not act as zero on the representation")

    # -- structural helpers ------------------------------------------

    def direct_sum(self, other: "Representation") -> "Representation":
        if other.algebra is not self.algebra:
            raise PresentationError("direct sum across different algebras")
        dims = {v: self.dims[v] + other.dims[v] for v in self.dims}
        maps = {}
        for name, (s, t) in self.algebra.quiver.arrow_map().items():
            m = rl.zeros(dims[s], dims[t])
            a, b = self.maps[name], other.maps[name]
            for i in range(self.dims[s]):
                for j in range(self.dims[t]):
                    m[i][j] = a[i][j]
            for i in range(other.dims[s]):
                for j in range(other.dims[t]):
                    m[self.dims[s] + i][self.dims[t] + j] = b[i][j]
            maps[name] = m
        return Representation(self.algebra, dims, maps, check=False)

    def sub_or_quotient(self, span: dict[str, Matrix], kind: str) -> "Representation":
        """Subrepresentation spanned by the given row vectors (kind="sub"),
        or the quotient by it (kind="quot").  The span must be closed under
        the arrow action; closure is checked while solving."""
        basis = {v: rl.row_space(span.get(v, [])) for v in self.dims}
        if kind == "sub":
            dims = {v: len(basis[v]) for v in self.dims}
            maps = {}
            for name, (s, t) in self.algebra.quiver.arrow_map().items():
                rows = []
                for b in basis[s]:
                    img = rl.row_mul(b, self.maps[name])
                    x = rl.solve_row(basis[t], img) if basis[t] else ([] if not any(img) else None)
                    if x is None:
                        raise PresentationError("span is not arrow-stable")
                    rows.append(x if basis[t] else [])
                maps[name] = rows
            return Representation(self.algebra, dims, maps, check=False)
        # quotient: coordinates are the non-pivot ambient coordinates
        proj = {}
        for v in self.dims:
            red, piv = rl.rref(basis[v])
            keep = [j for j in range(self.dims[v]) if j not in set(piv)]
            proj[v] = (red, piv, keep)
        dims = {v: len(proj[v][2]) for v in self.dims}
        maps = {}
        for name, (s, t) in self.algebra.quiver.arrow_map().items():
            redt, pivt, keept = proj[t]
            rows = []
            for j in proj[s][2]:
                img = [x for x in self.maps[name][j]]
                img = rl.reduce_against(redt, pivt, img)
                rows.append([img[c] for c in keept])
            maps[name] = rows
        return Representation(self.algebra, dims, maps, check=False)

    def __str__(self) -> str:
        return "Rep" + str(self.dim_vector())

    __repr__ = __str__


@dataclass
class Morphism:
    """A homomorphism of representations: one matrix block per vertex,
    commuting with all arrow maps."""

    source: Representation
    target: Representation
    blocks: dict[str, Matrix]

    def check(self) -> bool:
        for name, (s, t) in self.source.algebra.quiver.arrow_map().items():
            left = rl.mat_mul(self.source.maps[name], self.blocks[t],
                              ncols=self.target.dims[t])
            right = rl.mat_mul(self.blocks[s], self.target.maps[name],
                               ncols=self.target.dims[t])
            if left != right:
                return False
        return True

    def is_invertible(self) -> bool:
        return (self.source.dim_vector() == self.target.dim_vector()
                and all(rl.is_invertible(self.blocks[v]) for v in self.source.dims
                        if self.source.dims[v]))

    def compose(self, other: "Morphism") -> "Morphism":
        """self then other."""
        return Morphism(self.source, other.target,
                        {v: rl.mat_mul(self.blocks[v], other.blocks[v],
                                       ncols=other.target.dims[v])
                         for v in self.blocks})

    def kernel(self) -> tuple[Representation, dict[str, Matrix]]:
        """Kernel subrepresentation; also returns its embedding rows."""
        rows = {v: rl.nullspace([list(col) for col in zip(*self.blocks[v])] if self.target.dims[v] else [],
                                ncols=self.source.dims[v])
                for v in self.source.dims}
        ker = self.source.sub_or_quotient(rows, "sub")
        emb = {v: rl.row_space(rows[v]) for v in rows}
        return ker, emb


def zero_representation(algebra: BoundQuiver) -> Representation:
    return Representation(algebra, {}, check=False)


def standard_module(algebra: BoundQuiver, kind: str, vertex: str) -> Representation:
    """P(v), S(v) or I(v).

    P(v) has basis the normal-form paths with source v and arrows act by
    right concatenation; I(v) is the dual construction on paths into v with
    arrows acting by left pre-composition on the dual side.
    """
    if vertex not in algebra.quiver.vertices:
        raise PresentationError(f"unknown vertex {vertex!r}")
    cache = algebra._caches.setdefault("standard", {})
    key = (kind, vertex)
    if key in cache:
        return cache[key]
    if kind == "S":
        rep = Representation(algebra, {vertex: 1}, check=False)
    elif kind == "P":
        basis = sorted((p for p in algebra.basis if p.source == vertex), key=Path.key)
        index = {p: i for i, p in enumerate(basis)}
        dims: dict[str, int] = {}
        for p in basis:
            dims[p.target] = dims.get(p.target, 0) + 1
        pos = {}
        counter = {v: 0 for v in algebra.quiver.vertices}
        for p in basis:
            pos[p] = counter[p.target]
            counter[p.target] += 1
        maps = {}
        for name, (s, t) in algebra.quiver.arrow_map().items():
            m = rl.zeros(dims.get(s, 0), dims.get(t, 0))
            arrow = Path(s, t, (name,))
            for p in basis:
                if p.target != s:
                    continue
                for q, c in algebra.path_nf(p * arrow).terms.items():
                    m[pos[p]][pos[q]] += c
            maps[name] = m
        rep = Representation(algebra, dims, maps, check=False)
        rep._cache["proj_basis"] = basis
    elif kind == "I":
        basis = sorted((p for p in algebra.basis if p.target == vertex), key=Path.key)
        dims: dict[str, int] = {}
        pos = {}
        counter = {v: 0 for v in algebra.quiver.vertices}
        for p in basis:
            dims[p.source] = dims.get(p.source, 0) + 1
            pos[p] = counter[p.source]
            counter[p.source] += 1
        maps = {}
        for name, (s, t) in algebra.quiver.arrow_map().items():
            # dual of w |-> NF(arrow * w) for w a basis path t -> vertex
            m = rl.zeros(dims.get(s, 0), dims.get(t, 0))
            arrow = Path(s, t, (name,))
            for w in basis:
                if w.source != t:
                    continue
                for u, c in algebra.path_nf(arrow * w).terms.items():
                    m[pos[u]][pos[w]] += c
            maps[name] = m
        rep = Representation(algebra, dims, maps, check=False)
        rep._cache["inj_basis"] = basis
    else:
        raise PresentationError(f"unknown standard module kind {kind!r}")
    rep.check_relations()
    cache[key] = rep
    return rep


@dataclass(frozen=True)
class StringWord:
    """A reduced walk: letters are (arrow label, direct?) with inverse
    letters traversed against the arrow.  The trivial word carries its
    base vertex."""

    letters: tuple[tuple[str, bool], ...]
    base: str | None = None  # vertex, for the trivial word

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def inverse(self) -> "StringWord":
        return StringWord(tuple((a, not d) for a, d in reversed(self.letters)), self.base)

    def canonical(self) -> "StringWord":
        inv = self.inverse()
        return min(self, inv, key=lambda w: w.letters)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.base}"
        return "/".join(a + ("" if d else "^-1") for a, d in self.letters)


def word_vertices(algebra: BoundQuiver, w: StringWord) -> list[str]:
    """Vertex sequence v_0..v_n visited by the walk; validates composability."""
    if w.is_trivial:
        if w.base not in algebra.quiver.vertices:
            raise PresentationError(f"unknown vertex {w.base!r}")
        return [w.base]
    amap = algebra.quiver.arrow_map()
    verts = []
    for i, (a, direct) in enumerate(w.letters):
        if a not in amap:
            raise PresentationError(f"unknown arrow {a!r}")
        s, t = amap[a]
        frm, to = (s, t) if direct else (t, s)
        if i == 0:
            verts = [frm, to]
        else:
            if verts[-1] != frm:
                raise PresentationError(f"letters do not compose at position {i}")
            verts.append(to)
    return verts


def _direct_runs(w: StringWord) -> list[list[str]]:
    """Maximal directed paths contained in the walk (either orientation)."""
    runs = []
    cur: list[str] = []
    cur_dir: bool | None = None
    for a, d in w.letters:
        if cur_dir is None or d == cur_dir:
            cur.append(a)
            cur_dir = d
        else:
            runs.append(cur if cur_dir else list(reversed(cur)))
            cur = [a]
            cur_dir = d
    if cur:
        runs.append(cur if cur_dir else list(reversed(cur)))
    return runs


def string_is_valid(algebra: BoundQuiver, w: StringWord) -> tuple[bool, str]:
    """A reduced walk is a string when no contained path is a zero-relation
    or a maximal subpath of a binomial relation."""
    if w.is_trivial:
        return True, ""
    try:
        word_vertices(algebra, w)
    except PresentationError as e:
        return False, str(e)
    for (a, da), (b, db) in zip(w.letters, w.letters[1:]):
        if a == b and da != db:
            return False, f"not reduced at {a}"
    banned = {p.arrows for p in algebra.minimal_zero_paths()}
    for p, q in algebra.binomial_pairs():
        banned.add(p.arrows)
        banned.add(q.arrows)
    for run in _direct_runs(w):
        for i in range(len(run)):
            for j in range(i + 1, len(run) + 1):
                sub = tuple(run[i:j])
                if sub in banned:
                    return False, f"contains forbidden path {'*'.join(sub)}"
                seg = algebra.make_path(list(sub))
                if algebra.path_is_zero(seg):
                    return False, f"contains zero path {'*'.join(sub)}"
    return True, ""


def string_module(algebra: BoundQuiver, w: StringWord) -> Representation:
    """The string module M(w) with one basis vector per walk position and
    identity maps along the letters."""
    ok, why = string_is_valid(algebra, w)
    if not ok:
        raise PresentationError(f"not a string: {why}")
    verts = word_vertices(algebra, w)
    dims: dict[str, int] = {}
    pos = []
    for v in verts:
        pos.append(dims.get(v, 0))
        dims[v] = dims.get(v, 0) + 1
    maps: dict[str, Matrix] = {}
    amap = algebra.quiver.arrow_map()
    mats = {name: rl.zeros(dims.get(s, 0), dims.get(t, 0))
            for name, (s, t) in amap.items()}
    for i, (a, direct) in enumerate(w.letters):
        if direct:
            mats[a][pos[i]][pos[i + 1]] = F1
        else:
            mats[a][pos[i + 1]][pos[i]] = F1
    rep = Representation(algebra, dims, mats, check=False)
    rep.check_relations()
    rep._cache["string"] = w
    return rep


def radical_subspace(m: Representation) -> dict[str, Matrix]:
    """Row spans of rad M = sum of arrow images, per vertex."""
    spans = {v: [] for v in m.dims}
    for name, (s, t) in m.algebra.quiver.arrow_map().items():
        for row in m.maps[name]:
            if any(row):
                spans[t].append(row)
    return {v: rl.row_space(rows) for v, rows in spans.items()}


def socle_subspace(m: Representation) -> dict[str, Matrix]:
    """Vectors killed by every arrow, per vertex."""
    out = {}
    for v in m.dims:
        mats = [m.maps[name] for name, (s, t) in m.algebra.quiver.arrow_map().items() if s == v]
        stacked = []
        for i in range(m.dims[v]):
            stacked.append(sum((list(mat[i]) for mat in mats), []))
        if stacked and stacked[0]:
            out[v] = rl.nullspace([list(col) for col in zip(*stacked)], ncols=m.dims[v])
        else:
            out[v] = rl.identity(m.dims[v])
    return out


@dataclass
class StructureReport:
    top_multiplicities: dict[str, int]
    socle_multiplicities: dict[str, int]
    dimension_vector: dict[str, int]
    radical: Representation
    top: Representation
    socle: Representation


def structure(m: Representation) -> StructureReport:
    """top, radical and socle of a module, as representations plus
    semisimple multiplicity vectors."""
    rad_rows = radical_subspace(m)
    rad = m.sub_or_quotient(rad_rows, "sub")
    top = m.sub_or_quotient(rad_rows, "quot")
    soc_rows = socle_subspace(m)
    soc = m.sub_or_quotient(soc_rows, "sub")
    return StructureReport(
        top_multiplicities={v: top.dims[v] for v in m.dims if top.dims[v]},
        socle_multiplicities={v: soc.dims[v] for v in m.dims if soc.dims[v]},
        dimension_vector=dict(m.dims),
        radical=rad, top=top, socle=soc)


def hom_space(m: Representation, n: Representation) -> list[Morphism]:
    """Basis of Hom(M, N): solve the block commuting system exactly."""
    if m.algebra is not n.algebra:
        raise PresentationError("Hom across different algebras")
    verts = list(m.algebra.quiver.vertices)
    offs = {}
    total = 0
    for v in verts:
        offs[v] = total
        total += m.dims[v] * n.dims[v]
    equations: Matrix = []
    for name, (s, t) in m.algebra.quiver.arrow_map().items():
        a, b = m.maps[name], n.maps[name]
        if m.dims[s] == 0 or n.dims[t] == 0:
            continue
        for i in range(m.dims[s]):
            for j in range(n.dims[t]):
                row = [F0] * total
                # (M_a F_t)_{ij} - (F_s N_a)_{ij} = 0
                for k in range(m.dims[t]):
                    if a[i][k]:
                        row[offs[t] + k * n.dims[t] + j] += a[i][k]
                for l in range(n.dims[s]):
                    if b[l][j]:
                        row[offs[s] + i * n.dims[s] + l] -= b[l][j]
                if any(row):
                    equations.append(row)
    sols = rl.nullspace(equations, ncols=total)
    out = []
    for sol in sols:
        blocks = {}
        for v in verts:
            blk = rl.zeros(m.dims[v], n.dims[v])
            for i in range(m.dims[v]):
                for j in range(n.dims[v]):
                    blk[i][j] = sol[offs[v] + i * n.dims[v] + j]
            blocks[v] = blk
        out.append(Morphism(m, n, blocks))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_space(m, n))


def _morphism_to_flat(f: Morphism) -> list[Fraction]:
    out: list[Fraction] = []
    for v in f.source.algebra.quiver.vertices:
        for row in f.blocks[v]:
            out.extend(row)
    return out


def endo_algebra_gram_radical(basis: list[Morphism]) -> list[list[Fraction]]:
    """Coordinates (in the given basis) of rad End via the trace form of the
    action on the underlying space; valid in characteristic zero."""
    k = len(basis)
    gram = rl.zeros(k, k)
    verts = basis[0].source.algebra.quiver.vertices if basis else ()
    for i in range(k):
        for j in range(k):
            tr = F0
            for v in verts:
                prod = rl.mat_mul(basis[i].blocks[v], basis[j].blocks[v])
                tr += rl.trace(prod)
            gram[i][j] = tr
    return rl.nullspace(gram, ncols=k)


def end_radical_dim(m: Representation) -> tuple[int, int]:
    """(dim End M, dim rad End M)."""
    basis = hom_space(m, m)
    return len(basis), len(endo_algebra_gram_radical(basis))


def is_indecomposable(m: Representation) -> bool:
    """End(M) local, detected as: the trace-form radical has codimension 1."""
    if m.is_zero():
        raise PresentationError("zero module")
    e, r = end_radical_dim(m)
    return e - r == 1


def _supports_included(m: Representation, n: Representation) -> bool:
    """Every indecomposable summand of M occurs in N: id_M lies in the span
    of compositions M -> N -> M."""
    if m.is_zero():
        return True
    if n.is_zero():
        return False
    fs = hom_space(m, n)
    gs = hom_space(n, m)
    if not fs or not gs:
        return False
    span: list[list[Fraction]] = []
    for f in fs:
        for g in gs:
            span.append(_morphism_to_flat(f.compose(g)))
    ident = Morphism(m, m, {v: rl.identity(m.dims[v]) for v in m.dims})
    target = _morphism_to_flat(ident)
    red, piv = rl.rref(span) if span else ([], [])
    return rl.in_row_span(red, piv, target)


def is_isomorphic(m: Representation, n: Representation) -> bool:
    """Exact isomorphism test.

    After cheap invariants, multiplicities of the common indecomposable
    summands are compared through the semisimple quotient of End(M + N):
    with a = dim (M,M)-corner mod radical, b = (N,N), c = (M,N), the
    quantity a + b - 2c equals the weighted square norm of the multiplicity
    difference, so M and N are isomorphic iff it vanishes.
    """
    if m.algebra is not n.algebra:
        raise PresentationError("isomorphism across different algebras")
    if m.dim_vector() != n.dim_vector():
        return False
    if m.is_zero():
        return True
    hmn = hom_space(m, n)
    hnm = hom_space(n, m)
    if len(hmn) != len(hnm):
        return False
    hmm = hom_space(m, m)
    hnn = hom_space(n, n)
    if len(hmm) != len(hnn):
        return False
    big = m.direct_sum(n)
    basis: list[Morphism] = []
    embeds = []
    for f in hmm:
        embeds.append(_embed_block(f, m, n, "mm"))
    for f in hmn:
        embeds.append(_embed_block(f, m, n, "mn"))
    for f in hnm:
        embeds.append(_embed_block(f, m, n, "nm"))
    for f in hnn:
        embeds.append(_embed_block(f, m, n, "nn"))
    basis = [Morphism(big, big, blocks) for blocks in embeds]
    rad = endo_algebra_gram_radical(basis)
    nmm, nmn, nnm = len(hmm), len(hmn), len(hnm)
    # dimensions of the corners of the radical
    def corner_rad_dim(lo: int, hi: int) -> int:
        rows = [vec[lo:hi] for vec in rad]
        return rl.rank(rows) if rows else 0

    a = len(hmm) - corner_rad_dim(0, nmm)
    c = len(hmn) - corner_rad_dim(nmm, nmm + nmn)
    b = len(hnn) - corner_rad_dim(nmm + nmn + nnm, len(basis))
    return a + b - 2 * c == 0


def _embed_block(f: Morphism, m: Representation, n: Representation, corner: str) -> dict[str, Matrix]:
    blocks = {}
    for v in m.dims:
        dm, dn = m.dims[v], n.dims[v]
        blk = rl.zeros(dm + dn, dm + dn)
        src = f.blocks[v]
        if corner == "mm":
            for i in range(dm):
                for j in range(dm):
                    blk[i][j] = src[i][j]
        elif corner == "mn":
            for i in range(dm):
                for j in range(dn):
                    blk[i][dm + j] = src[i][j]
        elif corner == "nm":
            for i in range(dn):
                for j in range(dm):
                    blk[dm + i][j] = src[i][j]
        else:
            for i in range(dn):
                for j in range(dn):
                    blk[dm + i][dm + j] = src[i][j]
        blocks[v] = blk
    return blocks


def find_isomorphism(m: Representation, n: Representation, attempts: int = 64) -> Morphism | None:
    """Explicit invertible morphism, searched over a deterministic sequence
    of coefficient vectors; None when is_isomorphic fails."""
    if not is_isomorphic(m, n):
        return None
    basis = hom_space(m, n)
    k = len(basis)
    seeds = []
    for i in range(k):
        seeds.append([F1 if j == i else F0 for j in range(k)])
    seeds.append([F1] * k)
    s = 2
    while len(seeds) < attempts:
        seeds.append([rl.frac(s) ** j for j in range(k)])
        s += 1
    for coeffs in seeds:
        blocks = {}
        for v in m.dims:
            blk = rl.zeros(m.dims[v], n.dims[v])
            for c, f in zip(coeffs, basis):
                if c:
                    blk = rl.mat_add(blk, rl.mat_scale(c, f.blocks[v]))
            blocks[v] = blk
        cand = Morphism(m, n, blocks)
        if cand.is_invertible():
            return cand
    raise InternalConsistencyError(
        "modules certified isomorphic but no invertible combination found")
