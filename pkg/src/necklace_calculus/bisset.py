"""Finite bisimplicial sets with EZ normal forms in both directions.

Generators carry a bidegree (m, k); the first (horizontal) direction is the
categorical one, the second (vertical) direction is the space one.  A Segal
precategory is a bisimplicial set whose row 0 is a discrete vertex set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, NamedTuple, Optional

from . import delta
from .delta import Monotone, Word
from .sset import NF, SSet, SSetError, nd


class BiNF(NamedTuple):
    hword: Word
    vword: Word
    gen: str


def bnd(gen: str) -> BiNF:
    return BiNF((), (), gen)


class BiSSet:
    """A finite bisimplicial set; immutable after construction."""

    def __init__(self, gens: Iterable[tuple[str, tuple[int, int]]],
                 hfaces: Mapping[str, tuple[BiNF, ...]],
                 vfaces: Mapping[str, tuple[BiNF, ...]],
                 labels: Optional[Mapping[str, str]] = None, validate: bool = True):
        self._deg: dict[str, tuple[int, int]] = {}
        for g, mk in gens:
            if g in self._deg:
                raise SSetError(f"duplicate generator id {g!r}")
            self._deg[g] = tuple(mk)
        self.hfaces = {g: tuple(fs) for g, fs in hfaces.items()}
        self.vfaces = {g: tuple(fs) for g, fs in vfaces.items()}
        self.labels = dict(labels or {})
        self.h_bound = max((mk[0] for mk in self._deg.values()), default=-1)
        self.v_bound = max((mk[1] for mk in self._deg.values()), default=-1)
        self._order = sorted(self._deg, key=lambda g: (self._deg[g], g))
        if validate:
            self._validate()

    def gens(self) -> list[str]:
        return list(self._order)

    def bidegree(self, g: str) -> tuple[int, int]:
        return self._deg[g]

    def bidim(self, e: BiNF) -> tuple[int, int]:
        m, k = self._deg[e.gen]
        return (m + len(e.hword), k + len(e.vword))

    def gens_at(self, m: int, k: int) -> list[str]:
        return [g for g in self._order if self._deg[g] == (m, k)]

    def nd_counts(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for g in self._order:
            out[self._deg[g]] = out.get(self._deg[g], 0) + 1
        return out

    def is_empty(self) -> bool:
        return not self._deg

    # -- operators -----------------------------------------------------------

    def act(self, e: BiNF, mu_h: Optional[Monotone] = None,
            mu_v: Optional[Monotone] = None) -> BiNF:
        m, k = self.bidim(e)
        if mu_h is not None:
            e = self._act_h(e, mu_h)
        if mu_v is not None:
            e = self._act_v(e, mu_v)
        return e

    def _act_h(self, e: BiNF, mu: Monotone) -> BiNF:
        m, _ = self.bidim(e)
        epi = delta.word_to_epi(e.hword, m)
        word, mono = delta.factor(delta.compose(epi, mu))
        cur = BiNF((), e.vword, e.gen)
        missing = sorted(set(range(self._deg[e.gen][0] + 1)) - set(mono), reverse=True)
        for r in missing:
            cur = self._hface_step(cur, r)
        return BiNF(delta.merge_words(word, cur.hword, self.bidim(cur)[0]), cur.vword, cur.gen)

    def _hface_step(self, e: BiNF, r: int) -> BiNF:
        # e has empty outer hword except accumulated from lower steps
        m, _ = self.bidim(e)
        epi = delta.word_to_epi(e.hword, m)
        word, mono = delta.factor(delta.compose(epi, delta.coface(r, m)))
        gm, gk = self._deg[e.gen]
        if len(mono) == gm + 1:
            return BiNF(word, e.vword, e.gen)
        (j,) = sorted(set(range(gm + 1)) - set(mono))
        f = self.hfaces[e.gen][j]
        hw = delta.merge_words(word, f.hword, gm - 1 + len(f.hword))
        vw = delta.merge_words(e.vword, f.vword, self._deg[f.gen][1] + len(f.vword))
        return BiNF(hw, vw, f.gen)

    def _act_v(self, e: BiNF, mu: Monotone) -> BiNF:
        _, k = self.bidim(e)
        epi = delta.word_to_epi(e.vword, k)
        word, mono = delta.factor(delta.compose(epi, mu))
        cur = BiNF(e.hword, (), e.gen)
        missing = sorted(set(range(self._deg[e.gen][1] + 1)) - set(mono), reverse=True)
        for r in missing:
            cur = self._vface_step(cur, r)
        return BiNF(cur.hword, delta.merge_words(word, cur.vword, self.bidim(cur)[1]), cur.gen)

    def _vface_step(self, e: BiNF, r: int) -> BiNF:
        _, k = self.bidim(e)
        epi = delta.word_to_epi(e.vword, k)
        word, mono = delta.factor(delta.compose(epi, delta.coface(r, k)))
        gm, gk = self._deg[e.gen]
        if len(mono) == gk + 1:
            return BiNF(e.hword, word, e.gen)
        (j,) = sorted(set(range(gk + 1)) - set(mono))
        f = self.vfaces[e.gen][j]
        vw = delta.merge_words(word, f.vword, gk - 1 + len(f.vword))
        hw = delta.merge_words(e.hword, f.hword, self._deg[f.gen][0] + len(f.hword))
        return BiNF(hw, vw, f.gen)

    def simplices(self, m: int, k: int) -> list[BiNF]:
        """All (m, k)-bisimplices, canonically ordered."""
        out = []
        for g in self._order:
            gm, gk = self._deg[g]
            if gm > m or gk > k:
                continue
            for hw in delta.all_words(m - gm, m):
                for vw in delta.all_words(k - gk, k):
                    out.append(BiNF(hw, vw, g))
        out.sort()
        return out

    # -- derived structure -----------------------------------------------------

    def level(self, k: int) -> "LevelSSet":
        """The horizontal simplicial set W_{-,k}."""
        return LevelSSet(self, k)

    def row0(self) -> list[str]:
        """Vertex names of row 0 (requires discreteness)."""
        if not self.row0_discrete():
            raise SSetError("row 0 is not discrete")
        return self.gens_at(0, 0)

    def row0_discrete(self) -> bool:
        return all(self._deg[g][1] == 0 for g in self._order if self._deg[g][0] == 0)

    def column0(self) -> SSet:
        """The vertical simplicial set W_0 = W_{0,-} on its own generators."""
        gens = [(g, self._deg[g][1]) for g in self._order if self._deg[g][0] == 0]
        faces = {}
        for g, k in gens:
            if k == 0:
                continue
            fs = []
            for f in self.vfaces[g]:
                if f.hword:
                    raise SSetError("column 0 is not closed under vertical faces")
                fs.append(NF(f.vword, f.gen))
            faces[g] = tuple(fs)
        return SSet(gens, faces, validate=False)

    # -- validation -------------------------------------------------------------

    def _validate(self) -> None:
        for g, (m, k) in self._deg.items():
            if m > 0:
                fs = self.hfaces.get(g)
                if fs is None or len(fs) != m + 1:
                    raise SSetError(f"{g!r} needs {m + 1} horizontal faces")
                for f in fs:
                    if self.bidim(f) != (m - 1, k):
                        raise SSetError(f"horizontal face of {g!r} has wrong bidegree")
            if k > 0:
                fs = self.vfaces.get(g)
                if fs is None or len(fs) != k + 1:
                    raise SSetError(f"{g!r} needs {k + 1} vertical faces")
                for f in fs:
                    if self.bidim(f) != (m, k - 1):
                        raise SSetError(f"vertical face of {g!r} has wrong bidegree")
        for g, (m, k) in self._deg.items():
            e = bnd(g)
            if m >= 2:
                for j in range(m + 1):
                    for i in range(j):
                        a = self.act(self.act(e, mu_h=delta.coface(j, m)),
                                     mu_h=delta.coface(i, m - 1))
                        b = self.act(self.act(e, mu_h=delta.coface(i, m)),
                                     mu_h=delta.coface(j - 1, m - 1))
                        if a != b:
                            raise SSetError(f"horizontal d_{i} d_{j} fails on {g!r}")
            if k >= 2:
                for j in range(k + 1):
                    for i in range(j):
                        a = self.act(self.act(e, mu_v=delta.coface(j, k)),
                                     mu_v=delta.coface(i, k - 1))
                        b = self.act(self.act(e, mu_v=delta.coface(i, k)),
                                     mu_v=delta.coface(j - 1, k - 1))
                        if a != b:
                            raise SSetError(f"vertical d_{i} d_{j} fails on {g!r}")
            if m > 0 and k > 0:
                for i in range(m + 1):
                    for j in range(k + 1):
                        a = self.act(self.act(e, mu_h=delta.coface(i, m)), mu_v=delta.coface(j, k))
                        b = self.act(self.act(e, mu_v=delta.coface(j, k)), mu_h=delta.coface(i, m))
                        if a != b:
                            raise SSetError(f"mixed face identity fails on {g!r}")

    def _key(self):
        return (tuple(sorted(self._deg.items())), tuple(sorted(self.hfaces.items())),
                tuple(sorted(self.vfaces.items())))

    def __eq__(self, other):
        return isinstance(other, BiSSet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"BiSSet(nd_counts={self.nd_counts()})"


BI_EMPTY = BiSSet([], {}, {})


class LevelSSet(SSet):
    """The horizontal simplicial set W_{-,k} of a bisimplicial set.

    Generators are encoded as "g@vword", except that a bidegree-(0, 0)
    generator keeps its own name at every level (its vertical degeneracy word
    is determined by the level); this makes vertex names level-independent
    over a discrete row 0.
    """

    def __init__(self, W: BiSSet, k: int):
        self.W = W
        self.k = k
        gens = []
        faces = {}
        origin = {}
        for g in W.gens():
            gm, gk = W.bidegree(g)
            if gk > k:
                continue
            for vw in delta.all_words(k - gk, k):
                gid = self._id(g, vw)
                origin[gid] = BiNF((), vw, g)
                gens.append((gid, gm))
        self.origin = origin
        for gid, gm in gens:
            if gm == 0:
                continue
            e = origin[gid]
            fs = []
            for i in range(gm + 1):
                f = W.act(e, mu_h=delta.coface(i, gm))
                fs.append(NF(f.hword, self._id(f.gen, f.vword)))
            faces[gid] = tuple(fs)
        super().__init__(gens, faces, validate=False)

    def _id(self, g: str, vword: Word) -> str:
        if self.W.bidegree(g) == (0, 0):
            return g
        return g if not vword else g + "@" + ".".join(map(str, vword))

    def to_binf(self, x: NF) -> BiNF:
        e = self.origin[x.gen]
        return BiNF(x.word, e.vword, e.gen)

    def from_binf(self, e: BiNF) -> NF:
        return NF(e.hword, self._id(e.gen, e.vword))


def transport(W: BiSSet, src: LevelSSet, x: NF, mu_v: Monotone, dst: LevelSSet) -> NF:
    """Move a level-k simplex along a vertical operator into level k'."""
    e = W.act(src.to_binf(x), mu_v=mu_v)
    return dst.from_binf(e)


class BiMap:
    """A bisimplicial map, stored on generators."""

    def __init__(self, src: BiSSet, dst: BiSSet, assign: Mapping[str, BiNF],
                 validate: bool = True):
        self.src = src
        self.dst = dst
        self.assign = dict(assign)
        if validate:
            self._validate()

    def _validate(self) -> None:
        for g in self.src.gens():
            if g not in self.assign:
                raise SSetError(f"no assignment for {g!r}")
            m, k = self.src.bidegree(g)
            if self.dst.bidim(self.assign[g]) != (m, k):
                raise SSetError(f"image of {g!r} has wrong bidegree")
            for i in range(m + 1) if m else ():
                if self.dst.act(self.assign[g], mu_h=delta.coface(i, m)) != self(
                        self.src.act(bnd(g), mu_h=delta.coface(i, m))):
                    raise SSetError(f"not bisimplicial at horizontal d_{i} of {g!r}")
            for i in range(k + 1) if k else ():
                if self.dst.act(self.assign[g], mu_v=delta.coface(i, k)) != self(
                        self.src.act(bnd(g), mu_v=delta.coface(i, k))):
                    raise SSetError(f"not bisimplicial at vertical d_{i} of {g!r}")

    def __call__(self, e: BiNF) -> BiNF:
        img = self.assign[e.gen]
        m, k = self.dst.bidim(img)
        return BiNF(delta.merge_words(e.hword, img.hword, m),
                    delta.merge_words(e.vword, img.vword, k), img.gen)

    def then(self, other: "BiMap") -> "BiMap":
        return BiMap(self.src, other.dst, {g: other(self.assign[g]) for g in self.assign},
                     validate=False)

    def is_mono(self) -> bool:
        seen = set()
        for g in self.src.gens():
            img = self.assign[g]
            if img.hword or img.vword or img in seen:
                return False
            seen.add(img)
        return True

    def is_iso(self) -> bool:
        return self.src.nd_counts() == self.dst.nd_counts() and self.is_mono()

    def __eq__(self, other):
        return (isinstance(other, BiMap) and self.src == other.src and self.dst == other.dst
                and self.assign == other.assign)


def bi_identity(W: BiSSet) -> BiMap:
    return BiMap(W, W, {g: bnd(g) for g in W.gens()}, validate=False)


# -- materialization and colimits ----------------------------------------------


class BiMaterialized(NamedTuple):
    bisset: BiSSet
    to_nf: Callable[[int, int, object], BiNF]
    elem_of: dict[str, object]


def materialize_bi(levels: Callable[[int, int], list],
                   act: Callable[[object, tuple[int, int], Optional[Monotone], Optional[Monotone]], object],
                   h_bound: int, v_bound: int, prefix: str = "x",
                   label: Optional[Callable[[object], str]] = None) -> BiMaterialized:
    """Bi-graded analogue of sset.materialize."""
    to_nf: dict[tuple[int, int, object], BiNF] = {}
    gens: list[tuple[str, tuple[int, int]]] = []
    hfaces: dict[str, tuple[BiNF, ...]] = {}
    vfaces: dict[str, tuple[BiNF, ...]] = {}
    elem_of: dict[str, object] = {}
    labels: dict[str, str] = {}
    for m in range(h_bound + 1):
        for k in range(v_bound + 1):
            fresh = 0
            for e in levels(m, k):
                done = False
                for i in range(m - 1, -1, -1):
                    df = act(e, (m, k), delta.coface(i, m), None)
                    if act(df, (m - 1, k), delta.codegeneracy(i, m - 1), None) == e:
                        base = to_nf[(m - 1, k, df)]
                        to_nf[(m, k, e)] = BiNF(
                            delta.merge_words((i,), base.hword, m - 1), base.vword, base.gen)
                        done = True
                        break
                if not done:
                    for i in range(k - 1, -1, -1):
                        df = act(e, (m, k), None, delta.coface(i, k))
                        if act(df, (m, k - 1), None, delta.codegeneracy(i, k - 1)) == e:
                            base = to_nf[(m, k - 1, df)]
                            to_nf[(m, k, e)] = BiNF(
                                base.hword, delta.merge_words((i,), base.vword, k - 1), base.gen)
                            done = True
                            break
                if not done:
                    gid = f"{prefix}{m}_{k}_{fresh}"
                    fresh += 1
                    gens.append((gid, (m, k)))
                    elem_of[gid] = e
                    to_nf[(m, k, e)] = bnd(gid)
                    if label is not None:
                        labels[gid] = label(e)
    for gid, (m, k) in gens:
        e = elem_of[gid]
        if m > 0:
            hfaces[gid] = tuple(to_nf[(m - 1, k, act(e, (m, k), delta.coface(i, m), None))]
                                for i in range(m + 1))
        if k > 0:
            vfaces[gid] = tuple(to_nf[(m, k - 1, act(e, (m, k), None, delta.coface(i, k)))]
                                for i in range(k + 1))
    out = BiSSet(gens, hfaces, vfaces, labels=labels, validate=False)

    def lookup(m: int, k: int, e) -> BiNF:
        hit = to_nf.get((m, k, e))
        if hit is not None:
            return hit
        for i in range(m - 1, -1, -1):
            df = act(e, (m, k), delta.coface(i, m), None)
            if act(df, (m - 1, k), delta.codegeneracy(i, m - 1), None) == e:
                base = lookup(m - 1, k, df)
                return BiNF(delta.merge_words((i,), base.hword, m - 1), base.vword, base.gen)
        for i in range(k - 1, -1, -1):
            df = act(e, (m, k), None, delta.coface(i, k))
            if act(df, (m, k - 1), None, delta.codegeneracy(i, k - 1)) == e:
                base = lookup(m, k - 1, df)
                return BiNF(base.hword, delta.merge_words((i,), base.vword, k - 1), base.gen)
        raise SSetError(f"element at ({m}, {k}) has no recorded normal form")

    return BiMaterialized(out, lookup, elem_of)


def external(X: SSet, Y: SSet) -> BiSSet:
    """The external product X box Y: generators are pairs, faces act per direction."""
    gens = []
    hfaces = {}
    vfaces = {}
    for gx in X.gens():
        for gy in Y.gens():
            gid = f"{gx}|{gy}"
            m, k = X.gen_dim(gx), Y.gen_dim(gy)
            gens.append((gid, (m, k)))
            if m > 0:
                hfaces[gid] = tuple(BiNF(f.word, (), f"{f.gen}|{gy}") for f in X.faces[gx])
            if k > 0:
                vfaces[gid] = tuple(BiNF((), f.word, f"{gx}|{f.gen}") for f in Y.faces[gy])
    return BiSSet(gens, hfaces, vfaces, validate=False)


def horizontal(X: SSet) -> BiSSet:
    """X placed in the horizontal direction, vertically discrete."""
    gens = [(g, (X.gen_dim(g), 0)) for g in X.gens()]
    hfaces = {g: tuple(BiNF(f.word, (), f.gen) for f in X.faces[g])
              for g in X.gens() if X.gen_dim(g) > 0}
    return BiSSet(gens, hfaces, {}, labels=X.labels, validate=False)


def vertical(Y: SSet) -> BiSSet:
    """Y placed in the vertical direction, horizontally constant."""
    gens = [(g, (0, Y.gen_dim(g))) for g in Y.gens()]
    vfaces = {g: tuple(BiNF((), f.word, f.gen) for f in Y.faces[g])
              for g in Y.gens() if Y.gen_dim(g) > 0}
    return BiSSet(gens, {}, vfaces, labels=Y.labels, validate=False)


def diag(W: BiSSet) -> "Materialized":
    """The diagonal simplicial set, (diag W)_j = W_{j,j}."""
    from .sset import materialize

    bound = W.h_bound + W.v_bound

    def levels(d):
        return W.simplices(d, d)

    def act(e, d, mu):
        return W.act(e, mu_h=mu, mu_v=mu)

    return materialize(levels, act, max_dim=max(bound, -1) if not W.is_empty() else -1,
                       prefix="dg")


@dataclass
class BiDiagram:
    objects: dict[str, BiSSet]
    edges: list[tuple[str, str, str, BiMap]] = field(default_factory=list)

    def add(self, name: str, src: str, dst: str, f: BiMap) -> None:
        self.edges.append((name, src, dst, f))


class BiColimit(NamedTuple):
    bisset: BiSSet
    cocone: dict[str, BiMap]
    cls: Callable[[str, BiNF], BiNF]
    reps: dict[str, tuple[str, BiNF]]


def bi_colimit(diag_: BiDiagram, h_bound: Optional[int] = None,
               v_bound: Optional[int] = None) -> BiColimit:
    from .ops import _UF

    names = sorted(diag_.objects)
    if h_bound is None:
        h_bound = max((diag_.objects[n].h_bound for n in names), default=-1)
    if v_bound is None:
        v_bound = max((diag_.objects[n].v_bound for n in names), default=-1)
    if h_bound < 0 or v_bound < 0:
        return BiColimit(BI_EMPTY, {n: BiMap(diag_.objects[n], BI_EMPTY, {}) for n in names},
                         lambda o, x: (_ for _ in ()).throw(SSetError("empty colimit")), {})
    uf = _UF()
    grid_nodes: dict[tuple[int, int], list] = {}
    for m in range(h_bound + 1):
        for k in range(v_bound + 1):
            nodes = [(n, x) for n in names for x in diag_.objects[n].simplices(m, k)]
            grid_nodes[(m, k)] = nodes
            for node in nodes:
                uf.find(node)
            for _, s, t, f in diag_.edges:
                for x in diag_.objects[s].simplices(m, k):
                    uf.union((s, x), (t, f(x)))
    canon: dict[tuple[int, int], dict] = {}
    for mk, nodes in grid_nodes.items():
        by_root: dict = {}
        for node in nodes:
            by_root.setdefault(uf.find(node), []).append(node)
        canon[mk] = {root: min(ms) for root, ms in by_root.items()}

    def levels(m, k):
        return sorted(canon[(m, k)].values())

    def act(e, mk, mu_h, mu_v):
        n, x = e
        y = diag_.objects[n].act(x, mu_h=mu_h, mu_v=mu_v)
        m2 = len(mu_h) - 1 if mu_h is not None else mk[0]
        k2 = len(mu_v) - 1 if mu_v is not None else mk[1]
        return canon[(m2, k2)][uf.find((n, y))]

    mat = materialize_bi(levels, act, h_bound, v_bound, prefix="q")

    def cls_gen(objname: str, g: str) -> BiNF:
        m, k = diag_.objects[objname].bidegree(g)
        return mat.to_nf(m, k, canon[(m, k)][uf.find((objname, bnd(g)))])

    cocone = {n: BiMap(diag_.objects[n], mat.bisset,
                       {g: cls_gen(n, g) for g in diag_.objects[n].gens()}, validate=False)
              for n in names}

    def cls(objname: str, x: BiNF) -> BiNF:
        return cocone[objname](x)

    reps = {g: mat.elem_of[g] for g in mat.bisset.gens()}
    return BiColimit(mat.bisset, cocone, cls, reps)


def bi_pushout(f: BiMap, g: BiMap, h_bound=None, v_bound=None) -> BiColimit:
    d = BiDiagram({"A": f.src, "X": f.dst, "Y": g.dst})
    d.add("f", "A", "X", f)
    d.add("g", "A", "Y", g)
    return bi_colimit(d, h_bound=h_bound, v_bound=v_bound)


def enumerate_bimaps(A: BiSSet, B: BiSSet, over: Optional[tuple[BiMap, BiMap]] = None):
    """All bisimplicial maps A -> B, optionally over a common base."""
    order = sorted(A.gens(), key=lambda g: (A.bidegree(g), g))
    assign: dict[str, BiNF] = {}

    def images(e: BiNF) -> BiNF:
        img = assign[e.gen]
        m, k = B.bidim(img)
        return BiNF(delta.merge_words(e.hword, img.hword, m),
                    delta.merge_words(e.vword, img.vword, k), img.gen)

    def extend(idx: int):
        if idx == len(order):
            yield dict(assign)
            return
        g = order[idx]
        m, k = A.bidegree(g)
        for cand in B.simplices(m, k):
            if over is not None:
                pA, pB = over
                if pB(cand) != pA(bnd(g)):
                    continue
            ok = True
            for i in range(m + 1) if m else ():
                fa = A.hfaces[g][i]
                if images(fa) != B.act(cand, mu_h=delta.coface(i, m)):
                    ok = False
                    break
            if ok:
                for i in range(k + 1) if k else ():
                    fa = A.vfaces[g][i]
                    if images(fa) != B.act(cand, mu_v=delta.coface(i, k)):
                        ok = False
                        break
            if ok:
                assign[g] = cand
                yield from extend(idx + 1)
                del assign[g]

    for a in extend(0):
        yield BiMap(A, B, a, validate=False)


def find_bi_iso(A: BiSSet, B: BiSSet) -> Optional[BiMap]:
    """Backtracking bisimplicial isomorphism search."""
    if A.nd_counts() != B.nd_counts():
        return None
    order = sorted(A.gens(), key=lambda g: (A.bidegree(g), g))
    by_deg: dict[tuple[int, int], list[str]] = {}
    for h in B.gens():
        by_deg.setdefault(B.bidegree(h), []).append(h)
    assign: dict[str, BiNF] = {}
    used: set[str] = set()

    def faces_ok(g: str, h: str) -> bool:
        m, k = A.bidegree(g)
        for i in range(m + 1) if m else ():
            fa = A.hfaces[g][i]
            if fa.gen not in assign:
                continue
            if BiNF(fa.hword, fa.vword, assign[fa.gen].gen) != B.hfaces[h][i]:
                return False
        for i in range(k + 1) if k else ():
            fa = A.vfaces[g][i]
            if fa.gen not in assign:
                continue
            if BiNF(fa.hword, fa.vword, assign[fa.gen].gen) != B.vfaces[h][i]:
                return False
        return True

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        g = order[idx]
        for h in by_deg.get(A.bidegree(g), ()):
            if h in used or not faces_ok(g, h):
                continue
            assign[g] = bnd(h)
            used.add(h)
            if extend(idx + 1):
                return True
            del assign[g]
            used.discard(h)
        return False

    if not extend(0):
        return None
    f = BiMap(A, B, assign)
    return f if f.is_iso() else None


def rename_gens(W: BiSSet, mapping: Mapping[str, str]) -> BiSSet:
    def r(g: str) -> str:
        return mapping.get(g, g)

    gens = [(r(g), W.bidegree(g)) for g in W.gens()]
    hfaces = {r(g): tuple(BiNF(f.hword, f.vword, r(f.gen)) for f in fs)
              for g, fs in W.hfaces.items()}
    vfaces = {r(g): tuple(BiNF(f.hword, f.vword, r(f.gen)) for f in fs)
              for g, fs in W.vfaces.items()}
    labels = {r(g): lab for g, lab in W.labels.items()}
    return BiSSet(gens, hfaces, vfaces, labels=labels, validate=False)


def external_map(fX: "SSetMap", fY: "SSetMap", src: BiSSet, dst: BiSSet) -> BiMap:
    """The map of external products induced by maps of the two factors."""
    assign = {}
    for gx in fX.src.gens():
        for gy in fY.src.gens():
            ix, iy = fX.assign[gx], fY.assign[gy]
            assign[f"{gx}|{gy}"] = BiNF(ix.word, iy.word, f"{ix.gen}|{iy.gen}")
    return BiMap(src, dst, assign, validate=False)


# -- discretization (the left adjoint L) ---------------------------------------


def discretize(A: BiSSet) -> BiColimit:
    """Collapse column 0 to its path components: the reflection into precategories."""
    col0 = A.column0()
    from .ops import pi0

    comps, index = pi0(col0)
    c1 = external(_PT, col0)  # horizontally constant on W_0
    pi = SSet([(f"c{i}", 0) for i in range(len(comps))], {})
    c0 = external(_PT, pi)
    f = BiMap(c1, A, {f"0|{g}": BiNF((), (), g) for g in col0.gens()}, validate=False)
    g_assign = {}
    for g in col0.gens():
        k = col0.gen_dim(g)
        v = col0.vertices(nd(g))[0]
        word = tuple(range(k - 1, -1, -1))
        g_assign[f"0|{g}"] = BiNF((), word, f"0|c{index[v]}")
    g = BiMap(c1, c0, g_assign, validate=False)
    return bi_pushout(f, g)


class LF(NamedTuple):
    """The discretized product L(Delta[m] box X), with its quotient bookkeeping."""

    m: int
    X: "SSet"
    product: BiSSet
    W: BiSSet
    q: BiMap  # product -> W
    cls: Callable[[BiNF], BiNF]  # product elements -> W elements
    rep: dict[str, BiNF]  # W generators -> product representatives


def lf(m: int, X: "SSet") -> LF:
    """L F[m, X]: row 0 has (m+1) * |pi0 X| vertices named i or i.c."""
    from .ops import pi0
    from .shapes import simplex

    A = external(simplex(m), X)
    col = discretize(A)
    comps, index = pi0(X)
    ren = {}
    for i in range(m + 1):
        for ci, comp in enumerate(comps):
            cl = col.cls("X", bnd(f"{_subset_id([i])}|{comp[0]}"))
            ren[cl.gen] = str(i) if len(comps) == 1 else f"{i}.{ci}"
    W = rename_gens(col.bisset, ren)

    def cls(e: BiNF) -> BiNF:
        out = col.cls("X", e)
        return BiNF(out.hword, out.vword, ren.get(out.gen, out.gen))

    q = BiMap(A, W, {g: cls(bnd(g)) for g in A.gens()}, validate=False)
    rep = {}
    for g in W.gens():
        mk = W.bidegree(g)
        for e in A.simplices(*mk):
            if cls(e) == bnd(g):
                rep[g] = e
                break
        else:
            raise SSetError(f"no product representative for {g!r}")
    return LF(m, X, A, W, q, cls, rep)


def _subset_id(vs) -> str:
    return ".".join(map(str, sorted(vs)))


def lf_map(src: LF, dst: LF, mu, f: "SSetMap") -> BiMap:
    """L[mu, f]: L F[m, X] -> L F[m', Y] for mu: [m] -> [m'] and f: X -> Y."""
    from .shapes import simplex_operator

    op = simplex_operator(mu, dst.m)
    pm = external_map(op, f, src.product, dst.product)
    return BiMap(src.W, dst.W, {g: dst.cls(pm(src.rep[g])) for g in src.W.gens()})


def lf_induced(src: LF, target: BiSSet, pm: BiMap) -> BiMap:
    """The map L F[m, X] -> target induced by a map on the underlying product."""
    return BiMap(src.W, target, {g: pm(src.rep[g]) for g in src.W.gens()})


_PT = None


def _init_pt():
    global _PT
    from .shapes import simplex

    _PT = simplex(0)


_init_pt()
