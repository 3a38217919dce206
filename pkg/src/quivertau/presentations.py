"""Bound quivers and their finite-dimensional path algebras.

A bound quiver is a finite quiver together with an admissible ideal given by
a finite list of relations.  Constructing a :class:`BoundQuiver` computes a
normal-form basis of the quotient algebra by degree-truncated two-sided
saturation of the relation ideal, from which everything else (nilpotency of
the radical, nonzero paths, relation taxonomy, class recognition) is derived.

Composition of paths is written left to right: ``p * q`` traverses p first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ratlinalg import F0, F1, frac


class PresentationError(ValueError):
    """Invalid quiver data or a non-admissible relation ideal."""


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (label, source, target)

    def __post_init__(self):
        if not self.vertices:
            raise PresentationError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex labels")
        labels = [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise PresentationError("duplicate arrow labels")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise PresentationError(
                    f"arrow {name}: endpoint {s if s not in vs else t} is not a declared vertex")

    def arrow_map(self) -> dict[str, tuple[str, str]]:
        return {name: (s, t) for name, s, t in self.arrows}

    def arrows_from(self, v: str) -> list[tuple[str, str, str]]:
        return [a for a in self.arrows if a[1] == v]

    def arrows_into(self, v: str) -> list[tuple[str, str, str]]:
        return [a for a in self.arrows if a[2] == v]


@dataclass(frozen=True, order=False)
class Path:
    """A path in a quiver: a base vertex for trivial paths, else an arrow
    label sequence.  ``source``/``target`` are carried explicitly so trivial
    paths at different vertices stay distinct."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def key(self) -> tuple:
        # length-lexicographic canonical order
        return (len(self.arrows), self.arrows, self.source)

    def __mul__(self, other: "Path") -> "Path | None":
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.source}"
        return "*".join(self.arrows)


def trivial_path(v: str) -> Path:
    return Path(v, v, ())


class AlgebraElement:
    """A formal rational linear combination of paths.

    Terms with the same (source, target) are called parallel; a general
    element may mix parallel classes (e.g. an annihilator basis vector).
    Zero coefficients are never stored and terms are kept in canonical
    length-lexicographic order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Path, Fraction] | None = None):
        self.terms: dict[Path, Fraction] = {}
        if terms:
            for p, c in terms.items():
                if c:
                    self.terms[p] = frac(c)

    @classmethod
    def from_path(cls, p: Path, c=F1) -> "AlgebraElement":
        return cls({p: frac(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[Path, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].key())

    def paths(self) -> list[Path]:
        return [p for p, _ in self.items()]

    def is_parallel(self) -> bool:
        st = {(p.source, p.target) for p in self.terms}
        return len(st) <= 1

    def parallel_class(self) -> tuple[str, str] | None:
        st = {(p.source, p.target) for p in self.terms}
        return next(iter(st)) if len(st) == 1 else None

    def components(self) -> "list[AlgebraElement]":
        """Split into parallel components, one per (source, target) class."""
        buckets: dict[tuple[str, str], dict[Path, Fraction]] = {}
        for p, c in self.terms.items():
            buckets.setdefault((p.source, p.target), {})[p] = c
        return [AlgebraElement(b) for _, b in sorted(buckets.items())]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, F0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-F1)

    def scale(self, c) -> "AlgebraElement":
        c = frac(c)
        if not c:
            return AlgebraElement()
        return AlgebraElement({p: c * x for p, x in self.terms.items()})

    def raw_mul(self, other: "AlgebraElement") -> "AlgebraElement":
        """Product in the free path algebra (no reduction)."""
        out: dict[Path, Fraction] = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = p * q
                if pq is None:
                    continue
                s = out.get(pq, F0) + c * d
                if s:
                    out[pq] = s
                else:
                    out.pop(pq, None)
        return AlgebraElement(out)

    def leading_path(self) -> Path:
        return max(self.terms, key=Path.key)

    def max_length(self) -> int:
        return max((len(p) for p in self.terms), default=0)

    def min_length(self) -> int:
        return min((len(p) for p in self.terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p, c in self.items():
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(f"{coef}{p}")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def _elem_from_pairs(pairs) -> AlgebraElement:
    out: dict[Path, Fraction] = {}
    for p, c in pairs:
        s = out.get(p, F0) + c
        if s:
            out[p] = s
        else:
            out.pop(p, None)
    return AlgebraElement(out)


@dataclass
class RecognitionReport:
    is_monomial: bool
    is_special_biserial: bool
    binomial_pairs: list[tuple[Path, Path]]
    violations: list[str]


class BoundQuiver:
    """The algebra A = kQ/I presented by a quiver and an admissible ideal.

    On construction the relation generators are normalized (split into
    parallel components, zero coefficients dropped) and the ideal is
    saturated degree by degree up to ``lmax``; the basis of path normal
    forms, the radical nilpotency index and the reduction map all come out
    of that single elimination.  Instances are immutable after construction
    and safe to share.
    """

    def __init__(self, quiver: Quiver, relations: list[AlgebraElement], lmax: int = 30):
        self.quiver = quiver
        self.lmax = lmax
        self._amap = quiver.arrow_map()
        self.relations = self._normalize_generators(relations)
        self._saturate_and_enumerate()
        self.relations = self._minimalize(self.relations)

    # -- construction -------------------------------------------------

    def _normalize_generators(self, relations: list[AlgebraElement]) -> list[AlgebraElement]:
        gens = []
        for rel in relations:
            for name in {a for p in rel.terms for a in p.arrows}:
                if name not in self._amap:
                    raise PresentationError(f"relation references unknown arrow {name!r}")
            for comp in rel.components():
                if comp.is_zero():
                    continue
                if comp.min_length() < 2:
                    raise PresentationError(
                        "not admissible: relation of length < 2: " + str(comp))
                gens.append(comp)
        return gens

    def _reduce_raw(self, elem: AlgebraElement) -> AlgebraElement:
        """Fully reduce against the current leading-term table."""
        terms = dict(elem.terms)
        while True:
            hit = None
            for p in terms:
                if p in self._lead:
                    if hit is None or p.key() > hit.key():
                        hit = p
            if hit is None:
                return AlgebraElement(terms)
            c = terms.pop(hit)
            for q, d in self._lead[hit].terms.items():
                if q == hit:
                    continue
                s = terms.get(q, F0) - c * d
                if s:
                    terms[q] = s
                else:
                    terms.pop(q, None)

    def _saturate_and_enumerate(self) -> None:
        """Iterative deepening: saturate the ideal up to a degree window,
        check that the prefix-live path tree dies inside it, and widen the
        window if the certificate is not yet conclusive."""
        spread = max((g.max_length() - g.min_length() for g in self.relations), default=0)
        for g in self.relations:
            if g.max_length() > self.lmax:
                raise PresentationError(
                    "radical not nilpotent within the configured length bound")
        depth = min(self.lmax,
                    max((g.max_length() for g in self.relations), default=0) + spread + 2)
        while True:
            self._lead = {}
            self._saturate_to(depth)
            died_at = self._enumerate_paths(depth)
            if died_at is not None and died_at + spread + 1 <= depth:
                break
            if depth >= self.lmax:
                raise PresentationError(
                    "radical not nilpotent within the configured length bound")
            depth = min(self.lmax, max(depth * 2, depth + spread + 2))
        self._sat_depth = depth
        self._build_basis()

    def _saturate_to(self, depth: int) -> None:
        import heapq

        counter = 0
        heap: list[tuple[int, int, AlgebraElement]] = []
        for g in self.relations:
            heapq.heappush(heap, (g.max_length(), counter, g))
            counter += 1
        work_cap = 400000
        while heap:
            work_cap -= 1
            if work_cap < 0:
                raise PresentationError("ideal saturation exceeded work bound")
            _, _, x = heapq.heappop(heap)
            x = self._reduce_raw(x)
            if x.is_zero() or x.max_length() > depth:
                continue
            lead = x.leading_path()
            x = x.scale(F1 / x.terms[lead])
            # keep the table inter-reduced so reduction is a projection
            for lp, e in list(self._lead.items()):
                if lead in e.terms:
                    c = e.terms[lead]
                    self._lead[lp] = e - x.scale(c)
            self._lead[lead] = x
            src, tgt = lead.source, lead.target
            if x.max_length() < depth:
                for name, s, t in self.quiver.arrows:
                    if s == tgt:
                        prod = x.raw_mul(AlgebraElement.from_path(Path(s, t, (name,))))
                        if not prod.is_zero():
                            heapq.heappush(heap, (prod.max_length(), counter, prod))
                            counter += 1
                    if t == src:
                        prod = AlgebraElement.from_path(Path(s, t, (name,))).raw_mul(x)
                        if not prod.is_zero():
                            heapq.heappush(heap, (prod.max_length(), counter, prod))
                            counter += 1

    def _enumerate_paths(self, depth: int) -> int | None:
        """Grow the prefix-live path tree; returns the degree at which no
        live path remains, or None if paths survive to the window edge."""
        self._nf = {}
        live: list[Path] = []
        for v in self.quiver.vertices:
            e = trivial_path(v)
            self._nf[e] = AlgebraElement.from_path(e)
            live.append(e)
        path_cap = 200000
        degree = 0
        while live:
            degree += 1
            if degree > depth:
                return None
            nxt: list[Path] = []
            for b in live:
                for name, s, t in self.quiver.arrows:
                    if s != b.target:
                        continue
                    p = Path(b.source, t, b.arrows + (name,))
                    nf = self._reduce_raw(AlgebraElement.from_path(p))
                    self._nf[p] = nf
                    if not nf.is_zero():
                        nxt.append(p)
                    if len(self._nf) > path_cap:
                        return None
            live = nxt
        return degree

    def _build_basis(self) -> None:
        # least n with every path of length n zero in A
        maxlen = max((len(p) for p, nf in self._nf.items() if not nf.is_zero()), default=0)
        self.nilpotency = maxlen + 1
        self.basis: list[Path] = sorted(
            (p for p, nf in self._nf.items()
             if not nf.is_zero() and p not in self._lead),
            key=Path.key)
        self._basis_index = {p: i for i, p in enumerate(self.basis)}
        self.dim = len(self.basis)
        by_pair: dict[tuple[str, str], list[Path]] = {}
        for p in self.basis:
            by_pair.setdefault((p.source, p.target), []).append(p)
        self.basis_by_pair = by_pair
        self._caches: dict = {}

    def _minimalize(self, gens: list[AlgebraElement]) -> list[AlgebraElement]:
        """Drop generators lying in the ideal generated by the others."""
        order = sorted(gens, key=lambda g: (g.max_length(), str(g)))
        kept = list(order)
        i = len(kept) - 1
        while i >= 0:
            rest = kept[:i] + kept[i + 1:]
            if rest and self._in_ideal(kept[i], rest):
                kept = rest
            i -= 1
        return kept

    def _in_ideal(self, elem: AlgebraElement, gens: list[AlgebraElement]) -> bool:
        probe = BoundQuiver.__new__(BoundQuiver)
        probe.quiver = self.quiver
        probe.lmax = self.lmax
        probe._amap = self._amap
        probe.relations = gens
        probe._lead = {}
        try:
            probe._saturate_to(self._sat_depth)
        except PresentationError:
            return False
        return probe._reduce_raw(elem).is_zero()

    # -- the quotient algebra ------------------------------------------

    def reduce(self, elem: AlgebraElement) -> AlgebraElement:
        """Normal form of an element of kQ in A; linear, idempotent, and
        kills exactly the ideal (within the saturation bound)."""
        out = AlgebraElement()
        for p, c in elem.terms.items():
            out = out + self.path_nf(p).scale(c)
        return out

    def path_nf(self, p: Path) -> AlgebraElement:
        nf = self._nf.get(p)
        if nf is not None:
            return nf
        for a in p.arrows:
            if a not in self._amap:
                raise PresentationError(f"unknown arrow {a!r}")
        # long or dead-prefixed paths: fold arrow by arrow through the table
        cur = AlgebraElement.from_path(trivial_path(p.source))
        for a in p.arrows:
            s, t = self._amap[a]
            arrow = Path(s, t, (a,))
            nxt = AlgebraElement()
            for b, c in cur.terms.items():
                ba = b * arrow
                if ba is None:
                    continue
                nf = self._nf.get(ba)
                if nf is None:
                    nf = self._reduce_raw(AlgebraElement.from_path(ba))
                nxt = nxt + nf.scale(c)
            cur = nxt
            if cur.is_zero():
                return cur
        return cur

    def mul(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self.reduce(a.raw_mul(b))

    def path_is_zero(self, p: Path) -> bool:
        return self.path_nf(p).is_zero()

    def make_path(self, arrow_names: list[str] | tuple[str, ...]) -> Path:
        """Build a path from consecutive arrow labels, checking composability."""
        if not arrow_names:
            raise PresentationError("empty arrow list; use trivial_path(vertex)")
        segs = []
        for a in arrow_names:
            if a not in self._amap:
                raise PresentationError(f"unknown arrow {a!r}")
            segs.append(self._amap[a])
        for (s1, t1), (s2, t2) in zip(segs, segs[1:]):
            if t1 != s2:
                raise PresentationError(
                    f"arrows do not compose: target {t1} != source {s2}")
        return Path(segs[0][0], segs[-1][1], tuple(arrow_names))

    def nonzero_paths(self, max_length: int | None = None) -> list[Path]:
        """All paths with nonzero image in A, in canonical order."""
        out = [p for p, nf in self._nf.items() if not nf.is_zero()]
        if max_length is not None:
            out = [p for p in out if len(p) <= max_length]
        return sorted(out, key=Path.key)

    def minimal_zero_paths(self) -> list[Path]:
        """Paths in the ideal none of whose proper subpaths is in the ideal
        (for a monomial algebra these are the canonical minimal relations)."""
        key = "minzero"
        if key in self._caches:
            return self._caches[key]
        out = []
        for p, nf in self._nf.items():
            if len(p) < 2 or not nf.is_zero():
                continue
            head = Path(p.source, self._amap[p.arrows[-2]][1], p.arrows[:-1])
            tail = Path(self._amap[p.arrows[1]][0], p.target, p.arrows[1:])
            if not self.path_nf(head).is_zero() and not self.path_nf(tail).is_zero():
                out.append(p)
        out.sort(key=Path.key)
        self._caches[key] = out
        return out

    def vector(self, elem: AlgebraElement) -> list[Fraction]:
        """Coordinates of reduce(elem) in the global basis."""
        v = [F0] * self.dim
        for p, c in self.reduce(elem).terms.items():
            v[self._basis_index[p]] += c
        return v

    def element_from_vector(self, vec) -> AlgebraElement:
        return _elem_from_pairs((self.basis[i], frac(c)) for i, c in enumerate(vec) if c)

    # -- taxonomy -------------------------------------------------------

    def binomial_pairs(self, minimal_only: bool = True) -> list[tuple[Path, Path]]:
        """Pairs of nonzero parallel paths (p, q) with some lp + mq in the
        ideal; with ``minimal_only`` pairs obtained from a smaller pair by
        padding a common prefix/suffix arrow are dropped."""
        key = ("binpairs", minimal_only)
        if key in self._caches:
            return self._caches[key]
        classes: dict[tuple, list[Path]] = {}
        for p in self.nonzero_paths():
            if len(p) < 2:
                continue
            nf = self.path_nf(p)
            items = nf.items()
            lead_c = items[0][1]
            sig = tuple((q, c / lead_c) for q, c in items)
            classes.setdefault(sig, []).append(p)
        pairs = []
        for group in classes.values():
            group.sort(key=Path.key)
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    pairs.append((group[i], group[j]))
        if minimal_only:
            pairset = {(p.arrows, q.arrows) for p, q in pairs}

            def shrinkable(p: Path, q: Path) -> bool:
                if p.arrows[:1] == q.arrows[:1] and len(p) > 1 and len(q) > 1:
                    if (p.arrows[1:], q.arrows[1:]) in pairset or (q.arrows[1:], p.arrows[1:]) in pairset:
                        return True
                if p.arrows[-1:] == q.arrows[-1:] and len(p) > 1 and len(q) > 1:
                    if (p.arrows[:-1], q.arrows[:-1]) in pairset or (q.arrows[:-1], p.arrows[:-1]) in pairset:
                        return True
                return False

            pairs = [pq for pq in pairs if not shrinkable(*pq)]
        pairs.sort(key=lambda pq: (pq[0].key(), pq[1].key()))
        self._caches[key] = pairs
        return pairs

    def serialize(self) -> str:
        from .dsl import serialize_presentation

        return serialize_presentation(self)

    def __str__(self) -> str:
        return (f"BoundQuiver({len(self.quiver.vertices)} vertices, "
                f"{len(self.quiver.arrows)} arrows, {len(self.relations)} relations, "
                f"dim {self.dim})")

    __repr__ = __str__


@dataclass
class RelationClass:
    generator: AlgebraElement
    kind: str  # "zero-relation" | "minimal" | "non-minimal"
    binomial_pair: tuple[Path, Path] | None = None


def classify_relations(algebra: BoundQuiver) -> list[RelationClass]:
    """Tag each normalized relation generator: a single path is a
    zero-relation; otherwise the generator is minimal when no proper
    sub-sum of its terms lies in the ideal.  Two-term generators whose
    paths are nonzero in A are additionally reported as binomial pairs."""
    from itertools import combinations

    out = []
    for gen in algebra.relations:
        items = gen.items()
        if len(items) == 1:
            out.append(RelationClass(gen, "zero-relation"))
            continue
        minimal = True
        idx = range(len(items))
        for r in range(1, len(items)):
            for sub in combinations(idx, r):
                part = _elem_from_pairs(items[i] for i in sub)
                if algebra.reduce(part).is_zero():
                    minimal = False
                    break
            if not minimal:
                break
        pair = None
        if len(items) == 2:
            p, q = items[0][0], items[1][0]
            if not algebra.path_is_zero(p) and not algebra.path_is_zero(q):
                pair = (p, q)
        out.append(RelationClass(gen, "minimal" if minimal else "non-minimal", pair))
    return out


def recognize_class(algebra: BoundQuiver) -> RecognitionReport:
    """Monomial / special biserial recognition with diagnostics."""
    violations: list[str] = []

    # monomial <=> the paths inside the ideal already generate it
    zero_paths = [AlgebraElement.from_path(p) for p in algebra.minimal_zero_paths()]
    if zero_paths:
        probe = BoundQuiver(algebra.quiver, zero_paths, lmax=algebra.lmax)
        is_monomial = probe.dim == algebra.dim
    else:
        is_monomial = all(g.is_zero() for g in algebra.relations) or not algebra.relations
        if algebra.relations and not is_monomial:
            violations.append("ideal is nonzero but contains no paths")

    sb = True
    for v in algebra.quiver.vertices:
        n_out = len(algebra.quiver.arrows_from(v))
        n_in = len(algebra.quiver.arrows_into(v))
        if n_out > 2 or n_in > 2:
            sb = False
            violations.append(f"vertex {v}: {n_in} in-arrows, {n_out} out-arrows")
    amap = algebra.quiver.arrow_map()
    for name, s, t in algebra.quiver.arrows:
        succ = [b for b, (sb_, _) in amap.items()
                if sb_ == t and not algebra.path_is_zero(Path(s, amap[b][1], (name, b)))]
        if len(succ) > 1:
            sb = False
            violations.append(f"arrow {name}: successors {sorted(succ)} all survive")
        pred = [b for b, (_, tb) in amap.items()
                if tb == s and not algebra.path_is_zero(Path(amap[b][0], t, (b, name)))]
        if len(pred) > 1:
            sb = False
            violations.append(f"arrow {name}: predecessors {sorted(pred)} all survive")
    for rc in classify_relations(algebra):
        n = len(rc.generator.terms)
        if n > 2 or (n == 2 and rc.binomial_pair is None):
            sb = False
            violations.append(f"generator {rc.generator} is neither a path nor a binomial pair")

    return RecognitionReport(
        is_monomial=is_monomial,
        is_special_biserial=sb,
        binomial_pairs=algebra.binomial_pairs(),
        violations=violations,
    )
