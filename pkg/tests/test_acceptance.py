"""The acceptance gate: every release criterion, run at its stated budget.

Each test prints one pass/fail line; all comparisons are exact isomorphism
checks with explicit certificates (the witnessing maps).
"""

import time

import pytest

from necklace_calculus import delta, shapes, ops
from necklace_calculus.bisset import (bi_identity, bnd, enumerate_bimaps, find_bi_iso,
                                      horizontal, lf, lf_map, bi_pushout, vertical)
from necklace_calculus.categorify import categorify, cfunctor
from necklace_calculus.cubes import (weight_F, weight_G0, weighted_colim,
                                     weighted_colim_map, weight_inclusion_G0_F0)
from necklace_calculus.groth import groth, rightfib_check, vtensor
from necklace_calculus.kan import enriched_lan
from necklace_calculus.necklace import pair_poset_iso
from necklace_calculus.nerves import strict_nerve
from necklace_calculus.scat import (enumerate_nat_trans, representable, suspension,
                                    terminal_presheaf)
from necklace_calculus.sset import SSetMap, identity_map, nd
from necklace_calculus.straighten import (Cell, Straightener, cone, cone_hom,
                                          delta_precat, projection_pi,
                                          st_mono_formula, straighten_boundary_pp,
                                          unstraighten, w_sigma)
from necklace_calculus.verify import (_mono_catalog, _injections, check_Fcoeq,
                                      check_pushout_law)

d = shapes.simplex


def report(num, name, ok, elapsed=None):
    suffix = f"  [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"ACCEPTANCE {num:>2} {name}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"criterion {num} ({name}) failed"


def test_criterion_01_dual_path_oracle():
    t0 = time.monotonic()
    certificates = 0
    for fname, f in _mono_catalog():
        for m in range(3):
            for mu in _injections(m):
                cones = {}
                for i in range(m + 1):
                    lhs = st_mono_formula(mu, m, f, i)
                    rhs = cone_hom(mu, m, f, i, cache=cones)
                    cert = ops.find_iso(lhs, rhs)
                    assert cert is not None, (fname, m, mu, i)
                    certificates += 1
    elapsed = time.monotonic() - t0
    report(1, f"dual-path straightening oracle ({certificates} certificates)",
           elapsed < 60.0, elapsed)


def test_criterion_02_st_over_point():
    t0 = time.monotonic()
    W = delta_precat(0).W
    st = Straightener(W)
    for X in [d(0), d(1), d(2), shapes.spine(3)]:
        P = vertical(X)
        assign = {g: W.act(bnd("0"), mu_h=(0,) * (P.bidegree(g)[0] + 1),
                           mu_v=(0,) * (P.bidegree(g)[1] + 1)) for g in P.gens()}
        from necklace_calculus.bisset import BiMap

        ob = st.st_object(P, BiMap(P, W, assign, validate=False))
        assert ops.find_iso(ob.value("0"), X) is not None
    report(2, "St over the point recovers the fiber", True, time.monotonic() - t0)


def test_criterion_03_suspension_homs():
    t0 = time.monotonic()
    for X in [d(0), d(1), d(2), shapes.spine(3)]:
        C = categorify(lf(1, X).W)
        assert ops.find_iso(C.hom_sset("0", "1"), X) is not None
    report(3, "Hom of the one-step extension is the fiber", True, time.monotonic() - t0)


def test_criterion_04_pair_poset_iso():
    t0 = time.monotonic()
    for m in range(5):
        for i in range(m + 1):
            iso = pair_poset_iso(i, m)
            assert len(iso.pairs.objects) == 3 ** (m - i)
            tm = {(iso.fwd[u], iso.fwd[t]) for u, t in iso.tnd.morphisms()}
            assert tm == set(iso.pairs.morphisms())
    elapsed = time.monotonic() - t0
    report(4, "pair posets match necklace posets arrow-by-arrow", elapsed < 5.0, elapsed)


def test_criterion_05_coequalizer_and_pushout_laws():
    t0 = time.monotonic()
    check_Fcoeq(None)
    check_pushout_law(None)
    # the pushout law again at m = 3 for the catalog map
    from necklace_calculus.verify import _f_boundary_weight, _im_induced_map
    from necklace_calculus.cubes import last_factor_postcompose
    from necklace_calculus.ops import Diagram, colimit, component_maps, find_iso

    f = shapes.sub_inclusion(shapes.boundary(1), d(1))
    m = 3
    g0 = weight_G0(m, f)
    wtop = _f_boundary_weight(m, identity_map(d(1)))
    for T in g0.poset.objects:
        t = len(T.J) - 1
        diag_ = Diagram({"y": wtop.value[T]})
        for jx, fj in enumerate(component_maps(f)):
            wdel = _f_boundary_weight(m, fj)
            wid = weight_F(delta.identity(m), fj, 0, m)
            diag_.objects[f"a{jx}"] = wdel.value[T]
            diag_.objects[f"x{jx}"] = wid.value[T]
            if wdel.value[T].is_empty():
                to_y = SSetMap(wdel.value[T], wtop.value[T], {}, validate=False)
                to_x = SSetMap(wdel.value[T], wid.value[T], {}, validate=False)
            else:
                to_y = last_factor_postcompose(t, fj)
                to_x = identity_map(wdel.value[T])
            diag_.add(f"fa{jx}", f"a{jx}", "y", to_y)
            diag_.add(f"ga{jx}", f"a{jx}", f"x{jx}", to_x)
        assert find_iso(colimit(diag_).sset, g0.value[T]) is not None, (m, T)
    report(5, "coequalizer and pushout weight laws", True, time.monotonic() - t0)


def test_criterion_06_boundary_pushout_product():
    t0 = time.monotonic()
    f = shapes.sub_inclusion(shapes.boundary(1), d(1))
    for m in (1, 2):
        ob_pp, full, compare = straighten_boundary_pp(m, f)
        for a in sorted(compare):
            if a != "0":
                assert compare[a].is_iso(), (m, a)
        g0w, f0w, incl = weight_inclusion_G0_F0(m, f)
        wc_map = weighted_colim_map(g0w, f0w, incl)
        pair = ops.find_arrow_iso(compare["0"], wc_map)
        assert pair is not None, m
    report(6, "pushout-product comparison is the weight inclusion", True,
           time.monotonic() - t0)


def test_criterion_07_cone_decomposition_and_vertices():
    t0 = time.monotonic()
    for m in range(3):
        for X in [d(0), d(1)]:
            cn = cone((m,), m, identity_map(X))
            pt = delta_precat(0).W
            from necklace_calculus.verify import _vertex_map

            po = bi_pushout(_vertex_map(pt, lf(m, X).W, str(m)),
                            _vertex_map(pt, lf(1, X).W, "0"))
            assert find_bi_iso(cn.ext, po.bisset) is not None
    for fname, f in _mono_catalog():
        if not ops.is_connected(f.src):
            continue
        for m in range(3):
            for mu in _injections(m):
                cn = cone(mu, m, f)
                assert sorted(cn.ext.gens_at(0, 0), key=int) == [
                    str(i) for i in range(m + 2)]
    report(7, "cone decompositions and vertex counts", True, time.monotonic() - t0)


def test_criterion_08_pi_after_face_is_inclusion():
    t0 = time.monotonic()
    for m in range(3):
        for Y in [d(0), d(1)]:
            pi = projection_pi(m, Y)
            iota = cfunctor(lf_map(lf(m, Y), lf(m + 1, Y),
                                   delta.coface(m + 1, m + 1), identity_map(Y)),
                            pi.C, pi.C1)
            for i in range(m + 1):
                for j in range(i, m + 1):
                    H = pi.C.hom_sset(str(i), str(j))
                    for g in H.gens():
                        img = pi.on_hom(str(i), str(j),
                                        iota.on_hom(str(i), str(j), nd(g)))
                        assert img == nd(g), (m, i, j, g)
    report(8, "projection after the face inclusion is the identity inclusion",
           True, time.monotonic() - t0)


def test_criterion_09_grothendieck_structure():
    t0 = time.monotonic()
    cats = [suspension(d(0)), suspension(d(1))]
    for C in cats:
        N = strict_nerve(C)
        for F in [terminal_presheaf(C), representable(C, "1")]:
            G = groth(N, F)
            assert rightfib_check(G.bisset, N.bisset, G.projection).passed
            from necklace_calculus.bisset import BiSSet

            BiSSet([(g, G.bisset.bidegree(g)) for g in G.bisset.gens()],
                   G.bisset.hfaces, G.bisset.vfaces)  # simplicial identities
    arrow = suspension(d(0))
    N = strict_nerve(arrow)
    F = representable(arrow, "1")
    G = groth(N, F)
    for X in [d(1), shapes.boundary(2)]:
        GFX = groth(N, F.tensor(X))
        TX, _, _ = vtensor(G.bisset, X)
        assert find_bi_iso(GFX.bisset, TX) is not None
    # the coherent variant: pullback levels and the fibration check again
    from necklace_calculus.nerves import hc_nerve

    HN = hc_nerve(suspension(d(1)), 2, 1)
    GH = groth(HN, representable(suspension(d(1)), "1"))
    assert rightfib_check(GH.bisset, HN.bisset, GH.projection).passed
    elapsed = time.monotonic() - t0
    report(9, "grothendieck levels, identities, fibration checks, tensors",
           elapsed < 30.0, elapsed)


def test_criterion_10_adjunction():
    t0 = time.monotonic()
    cases = 0
    for Wlf, Fs in [(delta_precat(0), ["pt", "D1", "D2"]),
                    (delta_precat(1), ["terminal", "rep0", "rep1"])]:
        W = Wlf.W
        st = Straightener(W)
        for fname in Fs:
            from necklace_calculus.verify import _catalog_presheaf, \
                _check_adjunction_naturality

            F = _catalog_presheaf(st, fname)
            un = unstraighten(st, F, W.h_bound, max(W.v_bound, 1))
            for g in W.gens():
                m, k = W.bidegree(g)
                nats = list(enumerate_nat_trans(st.st_rep(Cell(m, k, bnd(g))), F))
                over = [e for e in un.bisset.simplices(m, k)
                        if un.projection(e) == bnd(g)]
                assert len(nats) == len(over), (fname, g)
            _check_adjunction_naturality(st, F, un)
            cases += 1
    report(10, f"straightening adjunction on {cases} cases, natural in the cell",
           cases == 6, time.monotonic() - t0)


def test_criterion_11_kan_route_matches_extension_route():
    t0 = time.monotonic()
    W = horizontal(d(2))
    st = Straightener(W)
    for g in W.gens():
        m, k = W.bidegree(g)
        cell = Cell(m, k, bnd(g))
        ws = w_sigma(W, cell)
        Cs = categorify(ws.ext)
        for a in st.CW.objects:
            ia = ws.iota(bnd(a)).gen
            lhs = Cs.hom_sset(ia, ws.top)
            assert ops.find_iso(lhs, st.value(cell, a)) is not None, (g, a)
    report(11, "left Kan route equals the one-point extension route on the triangle",
           True, time.monotonic() - t0)


def test_criterion_12_infrastructure():
    t0 = time.monotonic()
    from necklace_calculus.verify import (check_boundary_coequalizer,
                                          check_colimit_universal, check_ez_roundtrip,
                                          check_product_counts)
    import random

    rng = random.Random(0)
    check_ez_roundtrip(rng)
    check_product_counts(rng)
    check_colimit_universal(rng)
    check_boundary_coequalizer(rng)
    report(12, "infrastructure round trips and counts", True, time.monotonic() - t0)


def test_criterion_12b_verify_all_under_budget():
    t0 = time.monotonic()
    from necklace_calculus.verify import run_suite

    checks = run_suite("all", seed=0)
    elapsed = time.monotonic() - t0
    bad = [c for c in checks if c["status"] != "pass"]
    report(12, f"verify --suite all ({len(checks)} checks, {len(bad)} failing)",
           not bad and elapsed < 600.0, elapsed)
