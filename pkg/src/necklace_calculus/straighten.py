"""Straightening over a Segal precategory, its closed forms, and unstraightening.

A cell of W is straightened by left Kan extending the universal representable
case along its categorified classifying map; the classical route through the
one-point extension W_sigma is kept (w_sigma) and cross-checked wherever its
levels are 1-ordered.  General objects over W are straightened by gluing the
cellwise results along the face relations of the total object.
"""

from __future__ import annotations

import itertools
from typing import Callable, NamedTuple, Optional

from . import delta
from .bisset import (BiColimit, BiMap, BiNF, BiSSet, LF, bi_pushout, bnd, external,
                     external_map, lf, lf_induced, lf_map, materialize_bi, rename_gens)
from .categorify import Categorification, categorify, cfunctor
from .cubes import weight_F, weight_G0, weighted_colim
from .kan import LanResult, enriched_lan
from .necklace import UnsupportedInput
from .ops import Colimit, Diagram, colimit, is_connected
from .scat import (EnrichedFunctor, NatTrans, Presheaf, SCat, enumerate_nat_trans,
                   glue_end, suspension)
from .shapes import point, simplex, simplex_operator
from .sset import NF, SSet, SSetError, SSetMap, constant_map, identity_map, nd


class Cell(NamedTuple):
    """A cell of W: a map F[m, k] -> W, named by its image element."""

    m: int
    k: int
    el: BiNF


def pushout_induced(po: BiColimit, legs: dict[str, BiMap], target: BiSSet,
                    validate: bool = True) -> BiMap:
    """The map out of a bisimplicial colimit determined by a commuting cocone."""
    assign = {}
    for g in po.bisset.gens():
        name, e = po.reps[g]
        assign[g] = legs[name](e)
    return BiMap(po.bisset, target, assign, validate=validate)


def delta_precat(n: int) -> LF:
    """Delta[n] as a precategory with vertices named 0..n."""
    return lf(n, point())


class WSigma(NamedTuple):
    cell: Cell
    lf_m: LF
    lf_m1: LF
    ext: BiSSet
    iota: BiMap  # W -> W_sigma
    sigma_prime: BiMap  # LF[m+1, k] -> W_sigma
    top: str


def cell_product_map(W: BiSSet, cell: Cell, lfm: LF) -> BiMap:
    """F[m, k] -> W classifying the cell."""
    assign = {}
    for gx in lfm.product.gens():
        s, t = gx.split("|")
        mu_h = tuple(int(v) for v in s.split("."))
        mu_v = tuple(int(v) for v in t.split("."))
        assign[gx] = W.act(cell.el, mu_h=mu_h, mu_v=mu_v)
    return BiMap(lfm.product, W, assign, validate=False)


def w_sigma(W: BiSSet, cell: Cell) -> WSigma:
    m, k = cell.m, cell.k
    lfm, lfm1 = lf(m, simplex(k)), lf(m + 1, simplex(k))
    left = lf_map(lfm, lfm1, delta.coface(m + 1, m + 1), identity_map(simplex(k)))
    right = lf_induced(lfm, W, cell_product_map(W, cell, lfm))
    po = bi_pushout(left, right)
    iota = po.cocone["Y"]
    sigma_prime = po.cocone["X"]
    top = sigma_prime(bnd(str(m + 1))).gen
    return WSigma(cell, lfm, lfm1, po.bisset, iota, sigma_prime, top)


class FullRep(NamedTuple):
    """St over LF[m, Delta[k]] of the identity: the universal representable case."""

    m: int
    k: int
    lfm: LF
    lfm1: LF
    C: Categorification
    C1: Categorification
    base: SCat
    presheaf: Presheaf


class Straightener:
    """Computes St_W cellwise by left Kan extension of the universal case.

    St_W(sigma) is the extension of St(id) along the categorified classifying
    map of sigma; this is defined for every cell of W, degenerate ones
    included, while the one-point extension of a degenerate cell has no
    1-ordered levels and admits no finite necklace computation.
    """

    def __init__(self, W: BiSSet, bound: Optional[int] = None, check: bool = True):
        self.W = W
        self.CW = categorify(W, bound=bound, check=check)
        self.base_cat = self.CW.scat()
        self.bound = self.CW.bound
        self._fulls: dict[tuple[int, int], FullRep] = {}
        self._sig: dict[Cell, object] = {}
        self._lans: dict[Cell, "LanResult"] = {}
        self._ops: dict[tuple, object] = {}

    def full(self, m: int, k: int) -> FullRep:
        key = (m, k)
        if key not in self._fulls:
            lfm, lfm1 = lf(m, simplex(k)), lf(m + 1, simplex(k))
            C = categorify(lfm.W, check=False)
            C1 = categorify(lfm1.W, check=False)
            iota = cfunctor(
                lf_map(lfm, lfm1, delta.coface(m + 1, m + 1), identity_map(simplex(k))),
                C, C1)
            base = C.scat()
            top = str(m + 1)
            values = {a: C1.hom_sset(a, top) for a in C.objects}

            def action(a, b, h, x, C1=C1, iota=iota, top=top):
                return C1.comp_el(a, b, top, x, iota.on_hom(a, b, h))

            pre = Presheaf(base, values, action)
            self._fulls[key] = FullRep(m, k, lfm, lfm1, C, C1, base, pre)
        return self._fulls[key]

    def sigma_functor(self, cell: Cell):
        """The enriched functor from the categorified representable into c W."""
        if cell not in self._sig:
            fr = self.full(cell.m, cell.k)
            pm = cell_product_map(self.W, cell, fr.lfm)
            sig = lf_induced(fr.lfm, self.W, pm)
            raw = cfunctor(sig, fr.C, self.CW)
            self._sig[cell] = EnrichedFunctor(fr.base, self.base_cat, raw.on_obj,
                                              raw.on_hom)
        return self._sig[cell]

    def lan(self, cell: Cell) -> LanResult:
        if cell not in self._lans:
            fr = self.full(cell.m, cell.k)
            self._lans[cell] = enriched_lan(fr.presheaf, self.sigma_functor(cell),
                                            self.base_cat)
        return self._lans[cell]

    def cells(self, P: BiSSet, p: BiMap) -> list[tuple[str, Cell]]:
        return [(g, Cell(*P.bidegree(g), p(bnd(g)))) for g in P.gens()]

    # -- representable straightening --------------------------------------------

    def value(self, cell: Cell, a: str) -> SSet:
        return self.lan(cell).colimits[a].sset

    def st_rep(self, cell: Cell) -> Presheaf:
        return self.lan(cell).presheaf

    def _transport(self, src: Cell, dst: Cell, mu_h: delta.Monotone,
                   mu_v: delta.Monotone):
        """c L[mu+1, nu]: the functor between the universal extensions."""
        key = ("tr", src.m, src.k, dst.m, dst.k, mu_h, mu_v)
        if key not in self._ops:
            fs, fd = self.full(src.m, src.k), self.full(dst.m, dst.k)
            mu_plus = tuple(mu_h) + (dst.m + 1,)
            lmap = lf_map(fs.lfm1, fd.lfm1, mu_plus,
                          simplex_operator(mu_v, dst.k))
            self._ops[key] = cfunctor(lmap, fs.C1, fd.C1)
        return self._ops[key]

    def st_operator(self, src: Cell, dst: Cell, mu_h: delta.Monotone,
                    mu_v: delta.Monotone, a: str) -> SSetMap:
        """Component at a of St_W(dst . delta) -> St_W(dst), with src = dst . delta."""
        key = (src, dst, mu_h, mu_v, a)
        if key in self._ops:
            return self._ops[key]
        lan_s, lan_d = self.lan(src), self.lan(dst)
        tr = self._transport(src, dst, mu_h, mu_v)
        col = lan_s.colimits[a]
        assign = {}
        for g in col.sset.gens():
            name, rep = col.reps[g]
            j_src = name.split(".", 1)[1]
            j_dst = str(mu_h[int(j_src)])
            pr = lan_s.products[a][j_src]
            h_el = pr.projections[0](rep)
            x_el = pr.projections[1](rep)
            x_img = tr.on_hom(j_src, str(src.m + 1), x_el)
            target = lan_d.products[a][j_dst].to_nf(col.sset.gen_dim(g), (h_el, x_img))
            assign[g] = lan_d.colimits[a].cocone[f"p.{j_dst}"](target)
        out = SSetMap(col.sset, self.value(dst, a), assign, validate=False)
        self._ops[key] = out
        return out

    # -- straightening of arbitrary objects over W ------------------------------

    def st_object(self, P: BiSSet, p: BiMap) -> "StObject":
        return StObject(self, P, p)


class StObject:
    """St_W of a map p: P -> W, computed as a colimit of representable pieces.

    One colimit piece per generator of P, plus one per (generator, face); the
    face pieces glue each generator to the non-degenerate roots of its faces.
    """

    def __init__(self, st: Straightener, P: BiSSet, p: BiMap):
        self.st = st
        self.P = P
        self.p = p
        self._diagrams: dict[str, Colimit] = {}
        self._presheaves: dict[str, Presheaf] = {}
        self._obj_cells: dict[str, Cell] = {}
        self._obj_elem: dict[str, BiNF] = {}
        self._relations: list[tuple[str, str, delta.Monotone, delta.Monotone]] = []
        for g in P.gens():
            self._add_piece(f"c.{g}", bnd(g))
        for g in P.gens():
            m, k = P.bidegree(g)
            for direction, n in (("h", m), ("v", k)):
                for i in range(n + 1) if n else ():
                    mu_h = delta.coface(i, m) if direction == "h" else delta.identity(m)
                    mu_v = delta.coface(i, k) if direction == "v" else delta.identity(k)
                    e = P.act(bnd(g), mu_h=mu_h, mu_v=mu_v)
                    name = f"f.{g}.{direction}{i}"
                    self._add_piece(name, e)
                    self._relations.append((name, f"c.{g}", mu_h, mu_v))
                    m2 = m - (1 if direction == "h" else 0)
                    k2 = k - (1 if direction == "v" else 0)
                    self._relations.append(
                        (name, f"c.{e.gen}", delta.word_to_epi(e.hword, m2),
                         delta.word_to_epi(e.vword, k2)))

    def _add_piece(self, name: str, e: BiNF) -> None:
        m, k = self.P.bidim(e)
        self._obj_cells[name] = Cell(m, k, self.p(e))
        self._obj_elem[name] = e

    def colim(self, a: str) -> Colimit:
        if a in self._diagrams:
            return self._diagrams[a]
        st = self.st
        objects = {name: st.value(cell, a) for name, cell in self._obj_cells.items()}
        diag = Diagram(objects)
        for idx, (src, dst, mu_h, mu_v) in enumerate(self._relations):
            f = st.st_operator(self._obj_cells[src], self._obj_cells[dst], mu_h, mu_v, a)
            diag.add(f"e{idx}", src, dst, f)
        col = colimit(diag)
        self._diagrams[a] = col
        return col

    def value(self, a: str) -> SSet:
        return self.colim(a).sset

    def into(self, a: str, e: BiNF, y: NF) -> NF:
        """Class in value(a) of a piece element y sitting over the P-element e."""
        m, k = self.P.bidim(e)
        cell = Cell(m, k, self.p(e))
        root = Cell(*self.P.bidegree(e.gen), self.p(bnd(e.gen)))
        f = self.st.st_operator(cell, root,
                                delta.word_to_epi(e.hword, m), delta.word_to_epi(e.vword, k), a)
        return self.colim(a).cocone[f"c.{e.gen}"](f(y))

    def presheaf(self) -> Presheaf:
        st = self.st
        values = {a: self.value(a) for a in st.CW.objects}
        for name, cell in self._obj_cells.items():
            if name not in self._presheaves:
                self._presheaves[name] = st.st_rep(cell)

        def action(a, b, h, x):
            col_b = self.colim(b)
            name, y0 = col_b.reps[x.gen]
            d = values[b].dim(x)
            piece_val = st.value(self._obj_cells[name], b)
            y = y0 if not x.word else piece_val.act(y0, delta.word_to_epi(x.word, d))
            z = self._presheaves[name].action(a, b, h, y)
            return self.colim(a).cocone[name](z)

        return Presheaf(st.base_cat, values, action)


def st_over_map(src: StObject, dst: StObject, g: BiMap, a: str) -> SSetMap:
    """Component at a of St_W applied to a map g: P -> P' over W."""
    col = src.colim(a)
    assign = {}
    for gen in col.sset.gens():
        name, y = col.reps[gen]
        assign[gen] = dst.into(a, g(src._obj_elem[name]), y)
    return SSetMap(col.sset, dst.value(a), assign)


# -- the Cone pushout and the dual-path straightening formulas -------------------


class Cone(NamedTuple):
    mu: delta.Monotone
    m: int
    f: SSetMap
    ext: BiSSet  # vertices renamed 0..m+1
    iota_f: BiMap  # LF[m, Y] -> Cone
    q: BiMap  # Cone -> Delta[m+1] as a precategory
    lf_m: LF


def cone(mu: delta.Monotone, m: int, f: SSetMap) -> Cone:
    """The pushout LF[l+1, X] <- LF[l, X] -> LF[m, Y] with its vertex naming."""
    X, Y = f.src, f.dst
    if not (is_connected(X) and is_connected(Y)):
        raise UnsupportedInput("cone needs connected inputs; decompose first")
    ell = len(mu) - 1
    lfl, lfl1, lfm = lf(ell, X), lf(ell + 1, X), lf(m, Y)
    left = lf_map(lfl, lfl1, delta.coface(ell + 1, ell + 1), identity_map(X))
    right = lf_map(lfl, lfm, mu, f)
    po = bi_pushout(left, right)
    ren = {}
    for i in range(m + 1):
        ren[po.cocone["Y"](bnd(str(i))).gen] = str(i)
    ren[po.cocone["X"](bnd(str(ell + 1))).gen] = str(m + 1)
    ext = rename_gens(po.bisset, ren)

    def rn(e: BiNF) -> BiNF:
        return BiNF(e.hword, e.vword, ren.get(e.gen, e.gen))

    iota_f = BiMap(lfm.W, ext, {g: rn(po.cocone["Y"].assign[g]) for g in lfm.W.gens()},
                   validate=False)
    dp = delta_precat(m + 1)
    legs = {
        "Y": lf_map(lfm, dp, delta.coface(m + 1, m + 1), constant_map(Y, point(), "0")),
        "X": lf_map(lfl1, dp, tuple(mu) + (m + 1,), constant_map(X, point(), "0")),
    }
    legs["A"] = right.then(legs["Y"])
    q_raw = pushout_induced(po, legs, dp.W, validate=False)
    q = BiMap(ext, dp.W, {ren.get(g, g): q_raw.assign[g] for g in q_raw.assign})
    return Cone(tuple(mu), m, f, ext, iota_f, q, lfm)


def st_mono_formula(mu: delta.Monotone, m: int, f: SSetMap, i: int) -> SSet:
    """diag of the cube-weighted colimit of the mono weight; decomposes the source."""
    from .ops import component_maps, coproduct

    if is_connected(f.src):
        return weighted_colim(weight_F(mu, f, i, m)).sset
    parts = [weighted_colim(weight_F(mu, fj, i, m)).sset for fj in component_maps(f)]
    return coproduct(parts).sset


def cone_hom(mu: delta.Monotone, m: int, f: SSetMap, i: int,
             bound: Optional[int] = None, cache: Optional[dict] = None) -> SSet:
    """Hom in the categorified Cone from i to m+1, decomposing the source."""
    from .ops import component_maps, coproduct

    if is_connected(f.src):
        key = (tuple(mu),)
        if cache is not None and key in cache:
            C = cache[key]
        else:
            cn = cone(mu, m, f)
            C = categorify(cn.ext, bound=bound)
            if cache is not None:
                cache[key] = C
        return C.hom_sset(str(i), str(m + 1))
    parts = [cone_hom(mu, m, fj, i, bound=bound) for fj in component_maps(f)]
    return coproduct(parts).sset


# -- closed-form straightenings ---------------------------------------------------


class SpecialSt(NamedTuple):
    presheaf: Presheaf
    base: Categorification
    compare: Optional[dict[str, SSetMap]]  # components into the full straightening


def straighten_full(m: int, Y: SSet, bound: Optional[int] = None) -> SpecialSt:
    """St of [id, id_Y]: values Hom_{c LF[m+1, Y]}(i, m+1)."""
    lfm, lfm1 = lf(m, Y), lf(m + 1, Y)
    C = categorify(lfm.W, bound=bound)
    C1 = categorify(lfm1.W, bound=bound)
    F = cfunctor(lf_map(lfm, lfm1, delta.coface(m + 1, m + 1), identity_map(Y)), C, C1)
    top = str(m + 1)
    values = {a: C1.hom_sset(a, top) for a in C.objects}

    def action(a, b, h, x):
        return C1.comp_el(a, b, top, x, F.on_hom(a, b, h))

    out = Presheaf(C.scat(), values, action)
    return SpecialSt(out, C, None)


def _edge_bead(lfm1: LF, C1: Categorification, mpos: int, y: NF, j: int):
    """The single-bead necklace on the edge (mpos, mpos+1) labelled by y in Y_j."""
    from .shapes import subset_id

    prod_el = BiNF((), y.word, f"{subset_id([mpos, mpos + 1])}|{y.gen}")
    cls = lfm1.cls(prod_el)
    if cls.hword:
        raise SSetError("edge bead unexpectedly degenerate")
    Lj = C1.level(j)
    bead = Lj._id(cls.gen, cls.vword)
    seg = (str(mpos), str(mpos + 1))
    chain = tuple(seg for _ in range(j + 1))
    return ((bead,), chain)


def straighten_last_vertex(m: int, X: SSet, bound: Optional[int] = None) -> SpecialSt:
    """St of [<m>, id_X]: values over the pushout category of LF[m, X] with a cone."""
    if not is_connected(X):
        raise UnsupportedInput("last-vertex straightening needs a connected input")
    lfm, lfm1 = lf(m, X), lf(m + 1, X)
    C = categorify(lfm.W, bound=bound)
    C1 = categorify(lfm1.W, bound=bound)
    base_cat = C.scat()
    glue = glue_end(base_cat, suspension(X), {"0": str(m), "1": str(m + 1)})
    top = str(m + 1)
    values = {a: glue.hom[(a, top)] for a in C.objects}

    def action(a, b, h, x):
        return glue.comp(a, b, top, x, h)

    pre = Presheaf(base_cat, values, action)
    # the canonical comparison into the full straightening
    full = straighten_full(m, X, bound=bound)
    F = cfunctor(lf_map(lfm, lfm1, delta.coface(m + 1, m + 1), identity_map(X)), C, C1)
    compare = {}
    for a in C.objects:
        src = values[a]
        assign = {}
        for g in src.gens():
            d = src.gen_dim(g)
            if a == str(m):
                y = nd(g)  # hom(m, m+1) = X itself
                el = _edge_bead(lfm1, C1, m, y, d)
                assign[g] = C1.hom(a, top).to_nf(d, el)
            else:
                h1 = glue.cross[(a, top)].projections[0](nd(g))
                y = glue.cross[(a, top)].projections[1](nd(g))
                edge = C1.hom(str(m), top).to_nf(d, _edge_bead(lfm1, C1, m, y, d))
                assign[g] = C1.comp_el(a, str(m), top, edge, F.on_hom(a, str(m), h1))
        compare[a] = SSetMap(src, full.presheaf.value[a], assign)
    return SpecialSt(pre, C, compare)


def pushout_product_object(m: int, f: SSetMap) -> tuple[BiSSet, BiMap, BiMap, LF]:
    """The object bd F[m,Y] u_{bd F[m,X]} F[m,X] over LF[m,Y], with its inclusion
    into F[m,Y] -> LF[m,Y]."""
    from .shapes import boundary, simplex, sub_inclusion

    X, Y = f.src, f.dst
    bd = boundary(m)
    inc = sub_inclusion(bd, simplex(m))
    A = external(bd, X)
    left = external_map(identity_map(bd), f, A, external(bd, Y))
    right = external_map(inc, identity_map(X), A, external(simplex(m), X))
    po = bi_pushout(left, right)
    lfm = lf(m, Y)
    legs = {
        "A": external_map(inc, f, A, lfm.product).then(lfm.q),
        "X": external_map(sub_inclusion(bd, simplex(m)), identity_map(Y),
                          external(bd, Y), lfm.product).then(lfm.q),
        "Y": external_map(identity_map(simplex(m)), f, external(simplex(m), X),
                          lfm.product).then(lfm.q),
    }
    p = pushout_induced(po, legs, lfm.W)
    # the inclusion of the pushout product into F[m, Y] over LF[m, Y]
    j_legs = {
        "A": external_map(inc, f, A, lfm.product),
        "X": external_map(sub_inclusion(bd, simplex(m)), identity_map(Y),
                          external(bd, Y), lfm.product),
        "Y": external_map(identity_map(simplex(m)), f, external(simplex(m), X),
                          lfm.product),
    }
    j = pushout_induced(po, j_legs, lfm.product)
    return po.bisset, p, j, lfm


def straighten_boundary_pp(m: int, f: SSetMap,
                           bound: Optional[int] = None) -> tuple[StObject, StObject, dict]:
    """St of the pushout-product map, the full straightening of F[m,Y], and the
    comparison components, all over LF[m, Y] via the general engine."""
    P, p, j, lfm = pushout_product_object(m, f)
    st = Straightener(lfm.W, bound=bound)
    ob_pp = st.st_object(P, p)
    full = st.st_object(lfm.product, lfm.q)
    compare = {a: st_over_map(ob_pp, full, j, a) for a in st.CW.objects}
    return ob_pp, full, compare


def straighten_special(kind: str, m: int, f_or_space, bound: Optional[int] = None):
    """Closed-form straightenings: full(m, Y), last_vertex(m, X), boundary_pp(m, f)."""
    if kind == "full":
        return straighten_full(m, f_or_space, bound=bound)
    if kind == "last_vertex":
        return straighten_last_vertex(m, f_or_space, bound=bound)
    if kind == "boundary_pp":
        return straighten_boundary_pp(m, f_or_space, bound=bound)
    raise SSetError(f"unknown special straightening {kind!r}")


# -- unstraightening ---------------------------------------------------------------


class Unstraightening(NamedTuple):
    bisset: BiSSet
    projection: BiMap
    to_nf: object
    elem_of: dict
    act: object
    decode: object  # (Cell, encoding) -> NatTrans


def unstraighten(st: Straightener, F: Presheaf, h_bound: int,
                 v_bound: int) -> Unstraightening:
    """The truncated total object over W whose cells over sigma are Nat(St sigma, F)."""
    W = st.W

    def encode(component: dict):
        return tuple((a, tuple(sorted(component[a].assign.items())))
                     for a in sorted(component))

    def decode(cell: Cell, enc) -> NatTrans:
        comp = {}
        src = st.st_rep(cell)
        for a, items in enc:
            comp[a] = SSetMap(src.value[a], F.value[a], dict(items), validate=False)
        return NatTrans(src, F, comp)

    def levels(m, k):
        out = []
        for e in W.simplices(m, k):
            cell = Cell(m, k, e)
            for eta in enumerate_nat_trans(st.st_rep(cell), F):
                out.append((e, encode(eta.component)))
        return sorted(out)

    def act(el, mk, mu_h, mu_v):
        e, enc = el
        m, k = mk
        if mu_h is None:
            mu_h = delta.identity(m)
        if mu_v is None:
            mu_v = delta.identity(k)
        e2 = W.act(e, mu_h=mu_h, mu_v=mu_v)
        src_cell = Cell(len(mu_h) - 1, len(mu_v) - 1, e2)
        dst_cell = Cell(m, k, e)
        eta = decode(dst_cell, enc)
        comp = {a: st.st_operator(src_cell, dst_cell, mu_h, mu_v, a).then(eta.component[a])
                for a in eta.component}
        return (e2, encode(comp))

    mat = materialize_bi(levels, act, h_bound, v_bound, prefix="un")
    proj = BiMap(mat.bisset, W, {g: mat.elem_of[g][0] for g in mat.bisset.gens()})
    return Unstraightening(mat.bisset, proj, mat.to_nf, mat.elem_of, act, decode)


# -- the projection Pi_{m,Y} --------------------------------------------------------


class PiFunctor(NamedTuple):
    src_cat: SCat
    dst_cat: SCat
    on_obj: dict[str, str]
    on_hom: Callable[[str, str, NF], NF]
    C1: Categorification
    C: Categorification


def projection_pi(m: int, Y: SSet, bound: Optional[int] = None) -> PiFunctor:
    """The enriched functor c LF[m+1, Y] -> c LF[m, Y] u_{[0]} Sigma Y."""
    if not is_connected(Y):
        raise UnsupportedInput("projection needs a connected input")
    lfm, lfm1 = lf(m, Y), lf(m + 1, Y)
    C1 = categorify(lfm1.W, bound=bound)
    C = categorify(lfm.W, bound=bound)
    base = C.scat()
    glue = glue_end(base, suspension(Y), {"0": str(m), "1": str(m + 1)})
    iota = lf_map(lfm, lfm1, delta.coface(m + 1, m + 1), identity_map(Y))
    inv_gen = {iota.assign[g].gen: g for g in lfm.W.gens()}

    def bead_data(j: int, bead: str):
        """(vertex subset, Y label) of a level-j bead of LF[m+1, Y]."""
        origin = C1.level(j).origin[bead]
        rep = lfm1.rep[origin.gen]
        s, yg = rep.gen.split("|")
        alpha = tuple(int(v) for v in s.split("."))
        yw = delta.merge_words(origin.vword, rep.vword, lfm1.X.gen_dim(yg) + len(rep.vword))
        return alpha, NF(yw, yg)

    def build_bead(j: int, alpha, y: NF) -> str:
        from .shapes import subset_id

        cls = lfm.cls(BiNF((), y.word, f"{subset_id(alpha)}|{y.gen}"))
        if cls.hword:
            raise SSetError("prefix bead unexpectedly degenerate")
        return C.level(j)._id(cls.gen, cls.vword)

    def down(j: int, beads) -> tuple[str, ...]:
        """Carry beads of the d^{m+1} face into LF[m, Y]."""
        out = []
        for g in beads:
            origin = C1.level(j).origin[g]
            pre = inv_gen[origin.gen]
            out.append(C.level(j)._id(pre, origin.vword))
        return tuple(out)

    def on_hom(a: str, b: str, x: NF) -> NF:
        hs = C1.hom(a, b)
        j = hs.space.dim(x)
        beads, ch = hs.expand(x, j)
        if b != str(m + 1):
            if C1._is_point(beads):
                el = (beads, ch)
            else:
                el = (down(j, beads), ch)
            return C.hom(a, b).to_nf(j, el) if b != a else C.hom(a, b).to_nf(j, el)
        # target m+1: add the vertex m as a joint and split off the last edge
        if a == str(m + 1):
            return glue.id_el(a, j)
        mname = str(m)
        ch2 = tuple(tuple(sorted(set(S) | {mname})) for S in ch)
        verts = [int(v) for v in ch2[-1]]
        joints = [int(v) for v in ch2[0]]
        if C1._is_point(beads):
            raise SSetError("no point necklaces with distinct endpoints")
        tj = [0]
        data = []
        for g in beads:
            alpha, y = bead_data(j, g)
            data.append((alpha, y))
        y_last = data[-1][1]
        prefix_joints = [v for v in joints if v <= m]
        prefix_beads = []
        for r in range(len(prefix_joints) - 1):
            u, w = prefix_joints[r], prefix_joints[r + 1]
            seg = tuple(v for v in verts if u <= v <= w)
            holder = None
            for alpha, y in data:
                if alpha[0] <= u and w <= alpha[-1]:
                    holder = (alpha, y)
                    break
            if holder is None:
                # the segment ending at m sits inside the last bead
                holder = data[-1]
            prefix_beads.append(build_bead(j, seg, holder[1]))
        pre_ch = tuple(tuple(v for v in S if int(v) <= m) for S in ch2)
        if not prefix_beads:
            # a = m: the element is just the Y label
            return y_last
        pre_el = C.hom(a, mname).to_nf(j, (tuple(prefix_beads), pre_ch))
        return glue.cross[(a, str(m + 1))].to_nf(j, (pre_el, y_last))

    on_obj = {str(i): str(i) for i in range(m + 2)}
    src_cat = C1.scat()
    return PiFunctor(src_cat, glue, on_obj, on_hom, C1, C)
