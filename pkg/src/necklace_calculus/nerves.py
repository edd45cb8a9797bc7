"""Strict and homotopy coherent nerves of simplicial categories.

The strict nerve at (m, k) is the set of strings of m composable k-simplices.
The coherent nerve at (m, k) is the set of enriched functors from the coherent
simplex category into C^{Delta[k]}, whose homs are maps Delta[j] x Delta[k] -> hom.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple, Optional

from . import delta
from .bisset import BiMap, BiSSet, materialize_bi
from .cubes import Chain, chain_act, cube_hom
from .ops import Product, enumerate_maps, product
from .scat import SCat
from .sset import NF, SSet, SSetError, SSetMap, nd


class Nerve(NamedTuple):
    cat: SCat
    bisset: BiSSet
    to_nf: object
    elem_of: dict
    act: object
    edge_hom: object  # element at (1, k) -> (a, b, hom element at level k)
    kind: str


def _auto_bounds(C: SCat) -> tuple[int, int]:
    """Longest composable chain without identities, and its vertical capacity."""
    if not C.is_directed():
        raise SSetError("nerve bounds are only automatic for directed categories")
    obs = C.objects
    idx = {o: i for i, o in enumerate(obs)}
    best_len: dict[str, int] = {}
    best_v: dict[str, int] = {}

    def dfs(a: str) -> tuple[int, int]:
        if a in best_len:
            return best_len[a], best_v[a]
        bl = bv = 0
        for b in obs:
            if idx[b] <= idx[a] or C.hom[(a, b)].is_empty():
                continue
            sl, sv = dfs(b)
            bl = max(bl, 1 + sl)
            bv = max(bv, max(C.hom[(a, b)].dim_bound, 0) + sv)
        best_len[a], best_v[a] = bl, bv
        return bl, bv

    return max((dfs(a)[0] for a in obs), default=0), max((dfs(a)[1] for a in obs), default=0)


def strict_nerve(C: SCat, m_bound: Optional[int] = None,
                 k_bound: Optional[int] = None) -> Nerve:
    """The strict nerve as a bisimplicial set with discrete row 0."""
    if m_bound is None or k_bound is None:
        am, ak = _auto_bounds(C)
        m_bound = am if m_bound is None else m_bound
        k_bound = ak if k_bound is None else k_bound

    def levels(m, k):
        out = []
        for objs in itertools.product(C.objects, repeat=m + 1):
            pools = [C.hom[(objs[r], objs[r + 1])].simplices(k) for r in range(m)]
            if any(not p for p in pools):
                continue
            for fs in itertools.product(*pools):
                out.append((objs, fs))
        return sorted(out)

    def act(e, mk, mu_h, mu_v):
        objs, fs = e
        m, k = mk
        if mu_v is not None:
            fs = tuple(C.hom[(objs[r], objs[r + 1])].act(f, mu_v) for r, f in enumerate(fs))
            k = len(mu_v) - 1
        if mu_h is not None:
            new_objs = tuple(objs[v] for v in mu_h)
            new_fs = []
            for r in range(len(mu_h) - 1):
                lo, hi = mu_h[r], mu_h[r + 1]
                if lo == hi:
                    new_fs.append(C.id_el(objs[lo], k))
                    continue
                acc = fs[lo]
                for s in range(lo + 1, hi):
                    acc = C.comp(objs[lo], objs[s], objs[s + 1], fs[s], acc)
                new_fs.append(acc)
            objs, fs = new_objs, tuple(new_fs)
        return (objs, fs)

    mat = materialize_bi(levels, act, m_bound, k_bound, prefix="n")

    def edge_hom(e, k):
        objs, fs = e
        return objs[0], objs[1], fs[0]

    return Nerve(C, mat.bisset, mat.to_nf, mat.elem_of, act, edge_hom, "strict")


# -- exponentials H^{Delta[k]} ---------------------------------------------------


@lru_cache(maxsize=None)
def _prism(d: int, k: int) -> Product:
    from .shapes import simplex

    return product(simplex(d), simplex(k))


ExpEl = tuple  # sorted tuple of (generator, NF) pairs over prism generators


def exp_elements(H: SSet, d: int, k: int) -> list[ExpEl]:
    """All d-simplices of H^{Delta[k]}: maps Delta[d] x Delta[k] -> H."""
    pr = _prism(d, k)
    return sorted(tuple(sorted(f.assign.items())) for f in enumerate_maps(pr.sset, H))


def exp_as_map(H: SSet, d: int, k: int, e: ExpEl) -> SSetMap:
    return SSetMap(_prism(d, k).sset, H, dict(e), validate=False)


def exp_act(H: SSet, d: int, k: int, e: ExpEl, mu: delta.Monotone,
            nu: Optional[delta.Monotone] = None) -> ExpEl:
    """Pre-composition along mu x nu."""
    from .shapes import simplex, simplex_operator

    d2 = len(mu) - 1
    k2 = k if nu is None else len(nu) - 1
    src, dst = _prism(d2, k2), _prism(d, k)
    f = exp_as_map(H, d, k, e)
    op_h = simplex_operator(mu, d)
    op_v = simplex_operator(nu, k) if nu is not None else None
    assign = {}
    for g in src.sset.gens():
        x, y = src.projections[0](nd(g)), src.projections[1](nd(g))
        xi = op_h(x)
        yi = y if op_v is None else op_v(y)
        dd = src.sset.gen_dim(g)
        assign[g] = f(dst.to_nf(dd, (xi, yi)))
    return tuple(sorted(assign.items()))


def exp_comp(C: SCat, a: str, b: str, c: str, k: int, d: int,
             eg: ExpEl, ef: ExpEl) -> ExpEl:
    """Pointwise composition in C^{Delta[k]}."""
    pr = _prism(d, k)
    g = exp_as_map(C.hom[(b, c)], d, k, eg)
    f = exp_as_map(C.hom[(a, b)], d, k, ef)
    out = {}
    for pg in pr.sset.gens():
        dd = pr.sset.gen_dim(pg)
        out[pg] = C.comp(a, b, c, g(nd(pg)), f(nd(pg)))
    return tuple(sorted(out.items()))


def exp_of_element(H: SSet, d: int, k: int, x: NF) -> ExpEl:
    """The d-fold degenerate prism map classifying x in H_k."""
    from .shapes import simplex

    pr = _prism(d, k)
    dk = simplex(k)
    assign = {}
    for g in pr.sset.gens():
        y = pr.projections[1](nd(g))
        vy = tuple(int(v) for v in dk.vertices(y))
        assign[g] = H.act(x, vy)
    return tuple(sorted(assign.items()))


# -- the coherent nerve ------------------------------------------------------------


class CoherentFunctor(NamedTuple):
    """An enriched functor from the coherent simplex into C^{Delta[k]}."""

    objs: tuple[str, ...]
    maps: tuple  # per (i, j), i < j: tuple over nd cube chains of ExpEl


def _cube_cells(i: int, j: int):
    c = cube_hom((i, j), range(i, j + 1))
    cells = sorted(c.chain_of.items())
    return c, cells


def hc_functors(C: SCat, m: int, k: int) -> list[CoherentFunctor]:
    """All enriched functors c^h Delta[m] -> C^{Delta[k]}."""
    out = []
    pairs = [(i, j) for gap in range(1, m + 1) for i in range(m + 1 - gap)
             for j in [i + gap]]
    for objs in itertools.product(C.objects, repeat=m + 1):
        partial: dict[tuple[int, int], dict[str, ExpEl]] = {}

        def lookup(i: int, j: int, ch: Chain, d: int) -> ExpEl:
            if i == j:
                return exp_of_element(C.hom[(objs[i],) * 2], d, k, C.id_el(objs[i], k))
            cube, _ = _cube_cells(i, j)
            word = tuple(sorted((r for r in range(d) if ch[r] == ch[r + 1]), reverse=True))
            strict = tuple(S for r, S in enumerate(ch) if r == 0 or S != ch[r - 1])
            base = partial[(i, j)][cube.to_nf(len(strict) - 1, strict).gen]
            if not word:
                return base
            H = C.hom[(objs[i], objs[j])]
            return exp_act(H, len(strict) - 1, k, base, delta.word_to_epi(word, d))

        def extend(idx: int):
            if idx == len(pairs):
                out.append(CoherentFunctor(
                    objs, tuple(tuple(partial[p][g] for g, _ in _cube_cells(*p)[1])
                                for p in pairs)))
                return
            i, j = pairs[idx]
            H = C.hom[(objs[i], objs[j])]
            cube, cells = _cube_cells(i, j)
            forced: dict[str, ExpEl] = {}
            for g, ch in cells:
                d = cube.space.gen_dim(g)
                ps = [p for p in range(i + 1, j) if all(p in S for S in ch)]
                if ps:
                    p = ps[0]
                    left = tuple(tuple(v for v in S if v <= p) for S in ch)
                    right = tuple(tuple(v for v in S if v >= p) for S in ch)
                    forced[g] = exp_comp(C, objs[i], objs[p], objs[j], k, d,
                                         lookup(p, j, right, d), lookup(i, p, left, d))
            assigns: dict[str, ExpEl] = {}

            def fill(cells_left) -> None:
                if not cells_left:
                    partial[(i, j)] = dict(assigns)
                    extend(idx + 1)
                    del partial[(i, j)]
                    return
                (g, ch) = cells_left[0]
                d = cube.space.gen_dim(g)
                if g in forced:
                    cands = [forced[g]]
                else:
                    cands = exp_elements(H, d, k)
                for e in cands:
                    ok = True
                    for r in range(d + 1) if d else ():
                        fchain = chain_act(ch, delta.coface(r, d))
                        word = tuple(sorted((s for s in range(d - 1)
                                             if fchain[s] == fchain[s + 1]), reverse=True))
                        strict = tuple(S for s, S in enumerate(fchain)
                                       if s == 0 or S != fchain[s - 1])
                        want = assigns[cube.to_nf(len(strict) - 1, strict).gen]
                        if word:
                            want = exp_act(H, len(strict) - 1, k, want,
                                           delta.word_to_epi(word, d - 1))
                        if exp_act(H, d, k, e, delta.coface(r, d)) != want:
                            ok = False
                            break
                    if ok:
                        assigns[g] = e
                        fill(cells_left[1:])
                        del assigns[g]

            ordered = sorted(cells, key=lambda it: cube.space.gen_dim(it[0]))
            fill(ordered)

        extend(0)
    return sorted(out)


def hc_nerve(C: SCat, m_bound: int, k_bound: int, cell_guard: int = 200000) -> Nerve:
    """The truncated homotopy coherent nerve."""
    budget = 0

    def levels(m, k):
        nonlocal budget
        fs = hc_functors(C, m, k)
        budget += len(fs)
        if budget > cell_guard:
            raise SSetError("coherent nerve exceeds the cell guard")
        return fs

    def act(e, mk, mu_h, mu_v):
        m, k = mk
        objs, maps = e
        pairs = [(i, j) for gap in range(1, m + 1) for i in range(m + 1 - gap)
                 for j in [i + gap]]
        table = {p: dict(zip((g for g, _ in _cube_cells(*p)[1]), ms))
                 for p, ms in zip(pairs, maps)}

        def component(i, j, ch, d):
            if i == j:
                return exp_of_element(C.hom[(objs[i],) * 2], d, k, C.id_el(objs[i], k))
            cube, _ = _cube_cells(i, j)
            word = tuple(sorted((r for r in range(d) if ch[r] == ch[r + 1]), reverse=True))
            strict = tuple(S for r, S in enumerate(ch) if r == 0 or S != ch[r - 1])
            base = table[(i, j)][cube.to_nf(len(strict) - 1, strict).gen]
            H = C.hom[(objs[i], objs[j])]
            if word:
                base = exp_act(H, len(strict) - 1, k, base, delta.word_to_epi(word, d))
            return base

        m2 = m if mu_h is None else len(mu_h) - 1
        k2 = k if mu_v is None else len(mu_v) - 1
        mu = delta.identity(m) if mu_h is None else mu_h
        objs2 = tuple(objs[v] for v in mu)
        new_maps = []
        for gap in range(1, m2 + 1):
            for i in range(m2 + 1 - gap):
                j = i + gap
                cube, cells = _cube_cells(i, j)
                H2 = C.hom[(objs2[i], objs2[j])]
                comp_maps = []
                for g, ch in cells:
                    d = cube.space.gen_dim(g)
                    big = tuple(tuple(sorted({mu[v] for v in S})) for S in ch)
                    val = component(mu[i], mu[j], big, d)
                    if mu_v is not None:
                        val = exp_act(H2, d, k, val, delta.identity(d), mu_v)
                    comp_maps.append(val)
                new_maps.append(tuple(comp_maps))
        return CoherentFunctor(objs2, tuple(new_maps))

    mat = materialize_bi(levels, act, m_bound, k_bound, prefix="hn")

    def edge_hom(e, k):
        objs, maps = e
        val = maps[0][0]
        H = C.hom[(objs[0], objs[1])]
        f = exp_as_map(H, 0, k, val)
        pr = _prism(0, k)
        from .shapes import subset_id

        full = pr.to_nf(k, (NF(tuple(range(k - 1, -1, -1)), "0"),
                            nd(subset_id(range(k + 1)))))
        return objs[0], objs[1], f(full)

    return Nerve(C, mat.bisset, mat.to_nf, mat.elem_of, act, edge_hom, "hc")


def nerve_comparison(N: Nerve, HN: Nerve) -> BiMap:
    """The canonical map from the strict to the coherent nerve."""
    C = N.cat
    assign = {}
    for g in N.bisset.gens():
        m, k = N.bisset.bidegree(g)
        objs, fs = N.elem_of[g]
        pairs = [(i, j) for gap in range(1, m + 1) for i in range(m + 1 - gap)
                 for j in [i + gap]]
        maps = []
        for (i, j) in pairs:
            acc = fs[i]
            for s in range(i + 1, j):
                acc = C.comp(objs[i], objs[s], objs[s + 1], fs[s], acc)
            cube, cells = _cube_cells(i, j)
            H = C.hom[(objs[i], objs[j])]
            comp_maps = []
            for gg, ch in cells:
                d = cube.space.gen_dim(gg)
                comp_maps.append(exp_of_element(H, d, k, acc))
            maps.append(tuple(comp_maps))
        fun = CoherentFunctor(objs, tuple(maps))
        assign[g] = HN.to_nf(m, k, fun)
    return BiMap(N.bisset, HN.bisset, assign)