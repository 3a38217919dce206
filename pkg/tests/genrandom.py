"""Seeded random inputs for the property suites: monomial algebras,
special biserial presentations, nilpotent path ideals and module pools."""

from __future__ import annotations

import random

from quivertau import (AlgebraElement, BoundQuiver, Path, PresentationError,
                       Quiver, recognize_class, standard_module, trivial_path)
from quivertau.representations import Representation
from quivertau.homological import syzygy_step
from quivertau.tau import ar_translate, enumerate_strings


def _random_quiver(rng: random.Random, max_vertices: int, max_arrows: int,
                   acyclic: bool, allow_loops: bool) -> Quiver:
    n = rng.randint(3, max_vertices)
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = []
    n_arrows = rng.randint(n - 1, max_arrows)
    tries = 0
    while len(arrows) < n_arrows and tries < 200:
        tries += 1
        s = rng.randrange(n)
        t = rng.randrange(n)
        if acyclic and t <= s:
            continue
        if s == t and not allow_loops:
            continue
        arrows.append((f"x{len(arrows) + 1}", vertices[s], vertices[t]))
    return Quiver(vertices, tuple(arrows))


def _paths_up_to(quiver: Quiver, max_len: int, cap: int = 4000) -> list[Path]:
    amap = quiver.arrow_map()
    out = []
    frontier = [Path(s, t, (a,)) for a, s, t in quiver.arrows]
    out.extend(frontier)
    for _ in range(max_len - 1):
        nxt = []
        for p in frontier:
            for a, s, t in quiver.arrows:
                if s == p.target:
                    nxt.append(Path(p.source, t, p.arrows + (a,)))
                    if len(out) + len(nxt) > cap:
                        return out + nxt
        out.extend(nxt)
        frontier = nxt
    return out


def random_monomial_algebra(rng: random.Random, max_vertices: int = 7,
                            max_relations: int = 10) -> BoundQuiver:
    """Admissible monomial algebra; cyclic quivers included, so overlap
    cycles and infinite projective dimensions do occur."""
    for _ in range(60):
        acyclic = rng.random() < 0.45
        quiver = _random_quiver(rng, max_vertices, max_vertices + 4,
                                acyclic, allow_loops=rng.random() < 0.3)
        paths = [p for p in _paths_up_to(quiver, rng.randint(2, 3))
                 if 2 <= len(p) <= 4]
        if not paths:
            continue
        rng.shuffle(paths)
        rels = paths[:rng.randint(1, max_relations)]
        try:
            algebra = BoundQuiver(quiver, [AlgebraElement.from_path(p) for p in rels],
                                  lmax=14)
        except PresentationError:
            continue
        if algebra.dim > 60:
            continue
        return algebra
    # deterministic fallback: a commutative square with both lanes killed
    quiver = Quiver(("1", "2", "3"), (("x1", "1", "2"), ("x2", "2", "3")))
    return BoundQuiver(quiver, [AlgebraElement.from_path(Path("1", "3", ("x1", "x2")))])


def random_special_biserial(rng: random.Random, max_vertices: int = 6,
                            want_string_finite: bool = False) -> BoundQuiver:
    """Special biserial presentation: degree caps, an injective partial
    successor map (everything else a quadratic zero relation), optional
    longer zero relations on cycles, optional binomial pairs."""
    for _ in range(200):
        n = rng.randint(3, max_vertices)
        vertices = tuple(str(i) for i in range(1, n + 1))
        arrows = []
        out_deg = {v: 0 for v in vertices}
        in_deg = {v: 0 for v in vertices}
        n_arrows = rng.randint(n - 1, min(2 * n, n + 4))
        tries = 0
        while len(arrows) < n_arrows and tries < 300:
            tries += 1
            s = rng.choice(vertices)
            t = rng.choice(vertices)
            if s == t:
                continue
            if out_deg[s] >= 2 or in_deg[t] >= 2:
                continue
            arrows.append((f"x{len(arrows) + 1}", s, t))
            out_deg[s] += 1
            in_deg[t] += 1
        if len(arrows) < 2:
            continue
        quiver = Quiver(vertices, tuple(arrows))
        amap = quiver.arrow_map()
        names = [a for a, _, _ in arrows]
        # choose the allowed successor of each arrow, injectively
        succ: dict[str, str | None] = {}
        used_succ: set[str] = set()
        for a in names:
            cands = [b for b, (sb, _) in amap.items()
                     if sb == amap[a][1] and b not in used_succ and b != a]
            rng.shuffle(cands)
            pick = cands[0] if cands and rng.random() < 0.8 else None
            succ[a] = pick
            if pick:
                used_succ.add(pick)
        rels: list[AlgebraElement] = []
        for a in names:
            for b, (sb, tb) in amap.items():
                if sb != amap[a][1]:
                    continue
                if succ[a] != b:
                    rels.append(AlgebraElement.from_path(
                        Path(amap[a][0], tb, (a, b))))
        # kill surviving successor cycles with a longer zero relation
        for a in names:
            chain = [a]
            cur = a
            seen = {a}
            for _ in range(2 * len(names)):
                nxt = succ.get(cur)
                if nxt is None:
                    break
                if nxt in seen:
                    cut = rng.randint(2, min(3, len(chain)))
                    word = chain[-cut:] + [nxt]
                    segs = [amap[x] for x in word]
                    rels.append(AlgebraElement.from_path(
                        Path(segs[0][0], segs[-1][1], tuple(word))))
                    succ[chain[-1]] = None
                    break
                chain.append(nxt)
                seen.add(nxt)
                cur = nxt
        # optional binomial pair from a double-out vertex
        if rng.random() < 0.45:
            starts = [v for v in vertices if out_deg[v] == 2]
            rng.shuffle(starts)
            for v in starts:
                outs = [a for a, (s, _) in amap.items() if s == v]

                def chain_from(a0, length):
                    word = [a0]
                    cur = a0
                    for _ in range(length - 1):
                        nxt = succ.get(cur)
                        if nxt is None:
                            break
                        word.append(nxt)
                        cur = nxt
                    return word

                p = chain_from(outs[0], rng.randint(2, 3))
                q = chain_from(outs[1], rng.randint(2, 3))
                if len(p) < 2 or len(q) < 2:
                    continue
                pe = amap[p[-1]][1]
                qe = amap[q[-1]][1]
                if pe != qe:
                    continue
                ppath = Path(v, pe, tuple(p))
                qpath = Path(v, qe, tuple(q))
                rels.append(AlgebraElement.from_path(ppath)
                            - AlgebraElement.from_path(qpath))
                break
        try:
            algebra = BoundQuiver(quiver, rels, lmax=14)
        except PresentationError:
            continue
        rec = recognize_class(algebra)
        if not rec.is_special_biserial:
            continue
        if want_string_finite:
            try:
                enumerate_strings(algebra, cap=300)
            except PresentationError:
                continue
        return algebra
    raise RuntimeError("could not sample a special biserial algebra")


def random_path_ideal(rng: random.Random, algebra: BoundQuiver):
    """Nilpotent two-sided ideal generated by one to three nonzero paths."""
    from quivertau.annquot import Ideal

    paths = [p for p in algebra.nonzero_paths() if 1 <= len(p) <= 3]
    if not paths:
        return Ideal(algebra, [])
    picks = rng.sample(paths, k=min(len(paths), rng.randint(1, 3)))
    return Ideal.from_elements(algebra, [AlgebraElement.from_path(p) for p in picks])


def module_pool(rng: random.Random, algebra: BoundQuiver,
                size: int = 10) -> list[Representation]:
    """A varied pool of nonzero modules: standard ones, radical quotients,
    syzygies and translates, and a couple of direct sums."""
    pool: list[Representation] = []
    verts = list(algebra.quiver.vertices)
    for v in verts:
        pool.append(standard_module(algebra, "S", v))
        pool.append(standard_module(algebra, "P", v))
        pool.append(standard_module(algebra, "I", v))
    extras: list[Representation] = []
    for m in list(pool):
        if rng.random() < 0.35:
            k = syzygy_step(m)
            if not k.is_zero() and k.total_dim <= 30:
                extras.append(k)
        if rng.random() < 0.3 and not m.is_zero():
            t = ar_translate(m)
            if not t.is_zero() and t.total_dim <= 30:
                extras.append(t)
    pool.extend(extras)
    pool = [m for m in pool if not m.is_zero()]
    rng.shuffle(pool)
    pool = pool[:size]
    if len(pool) >= 2 and rng.random() < 0.5:
        pool.append(pool[0].direct_sum(pool[1]))
    return pool
