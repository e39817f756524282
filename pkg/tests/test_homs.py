import itertools

import pytest

from strawcat import Frame, terminal, unit_object, validate
from strawcat.corpus import corpus
from strawcat.homs import (
    check_functor,
    check_horizontal,
    check_modification,
    check_vertical,
    compose_functors,
    enumerate_functors,
    enumerate_horizontal,
    enumerate_modifications,
    enumerate_vertical,
    hcomp_horizontal,
    hom_double,
    identity_functor,
    identity_horizontal,
    identity_vertical,
    interchanger,
    interchanger_inv,
    is_strict_functor,
    iter_functor_candidates,
    ps_sub,
    whisker_post_functor,
    whisker_pre_functor,
)


def naive_enumerate_functors(A, B):
    """Independent brute-force enumeration against the raw definition; no
    sharing with the pruned enumerator beyond the data layout."""
    out = []
    vmaps = []
    for picks in itertools.product(B.vmors, repeat=len(A.vmors)):
        m = dict(zip(A.vmors, picks))
        if all(B.vmor_src[m[u]] is not None for u in A.vmors):
            vmaps.append(m)
    for opicks in itertools.product(B.objects, repeat=len(A.objects)):
        om = dict(zip(A.objects, opicks))
        for vm in vmaps:
            if any(B.vmor_src[vm[u]] != om[A.vmor_src[u]]
                   or B.vmor_tgt[vm[u]] != om[A.vmor_tgt[u]] for u in A.vmors):
                continue
            if any(vm[A.v_identity[a]] != B.v_identity[om[a]] for a in A.objects):
                continue
            if any(vm[c] != B.vcomp_vmor_table[(vm[w], vm[u])]
                   for (w, u), c in A.vcomp_vmor_table.items()):
                continue
            for hpicks in itertools.product(B.hmors, repeat=len(A.hmors)):
                hm = dict(zip(A.hmors, hpicks))
                if any(B.hmor_src[hm[f]] != om[A.hmor_src[f]]
                       or B.hmor_tgt[hm[f]] != om[A.hmor_tgt[f]] for f in A.hmors):
                    continue
                for cpicks in itertools.product(B.cells, repeat=len(A.cells)):
                    cm = dict(zip(A.cells, cpicks))
                    ok = True
                    for c in A.cells:
                        fr = A.cell_frames[c]
                        want = Frame(hm[fr.top], hm[fr.bottom], vm[fr.left], vm[fr.right])
                        if B.cell_frames[cm[c]] != want:
                            ok = False
                            break
                    if not ok:
                        continue
                    p0_pool = [[c for c in B.cells
                                if B.cell_frames[c] == Frame(B.h_identity[om[a]],
                                                             hm[A.h_identity[a]],
                                                             B.v_identity[om[a]],
                                                             B.v_identity[om[a]])]
                               for a in A.objects]
                    p2keys = [(f, g) for (g, f) in A.hcomp_hmor_table]
                    p2_pool = []
                    for (f, g) in p2keys:
                        src_h = B.hcomp_hmor_table[(hm[g], hm[f])]
                        tgt_h = hm[A.hcomp_hmor_table[(g, f)]]
                        a0 = B.hmor_src[src_h]
                        b0 = B.hmor_tgt[src_h]
                        p2_pool.append([c for c in B.cells
                                        if B.cell_frames[c] == Frame(src_h, tgt_h,
                                                                     B.v_identity[a0],
                                                                     B.v_identity[b0])])
                    for p0s in itertools.product(*p0_pool):
                        for p2s in itertools.product(*p2_pool):
                            from strawcat.homs import PseudoDoubleFunctor
                            F = PseudoDoubleFunctor(A, B, om, vm, hm, cm,
                                                    dict(zip(A.objects, p0s)),
                                                    dict(zip(p2keys, p2s)))
                            if check_functor(F).ok:
                                out.append(F.key())
    return out


def test_enumerator_matches_naive_oracle(tables):
    # second-implementation oracle on small pairs
    for a, b in [("terminal", "sigmaM"), ("unit", "nonstrict"),
                 ("nonstrict", "sigmaM"), ("terminal", "vertfree")]:
        fast = {F.key() for F in enumerate_functors(tables[a], tables[b])}
        slow = set(naive_enumerate_functors(tables[a], tables[b]))
        assert fast == slow, (a, b, len(fast), len(slow))


def test_functor_counts(tables):
    # frozen counts, derived once from the oracle above
    assert len(enumerate_functors(tables["nonstrict"], tables["sigmaM"])) == 2
    assert len(enumerate_functors(terminal(), tables["quintet"])) == 2
    assert len(enumerate_functors(unit_object(), tables["sigmaM"])) == 1


def test_identity_and_eta_pass_checkers(tables):
    from strawcat.strictify import eta, st
    for name, A in tables.items():
        assert check_functor(identity_functor(A)).ok
        assert check_functor(eta(A, st(A))).ok


def test_mutated_phi2_breaks_naturality(tables):
    N, M = tables["nonstrict"], tables["sigmaM"]
    for F in enumerate_functors(N, M):
        variants = [c for c in M.cells if c != F.phi2[("e", "e")]
                    and M.cell_frames[c] == M.cell_frames[F.phi2[("e", "e")]]]
        for c in variants:
            F.phi2[("e", "e")] = c
            assert not check_functor(F).ok


def test_compose_functors(tables):
    Q = tables["quintet"]
    fs = enumerate_functors(Q, Q)
    for F in fs:
        for G in fs:
            assert check_functor(compose_functors(G, F)).ok


def test_identity_transformations_pass(tables):
    Q = tables["quintet"]
    for F in enumerate_functors(Q, Q):
        assert check_vertical(identity_vertical(F)).ok
        assert check_horizontal(identity_horizontal(F)).ok


def test_hom_double_validates(tables):
    for a, b in [("terminal", "sigmaM"), ("quintet", "quintet"),
                 ("nonstrict", "sigma2")]:
        H = hom_double(tables[a], tables[b])
        rep = validate(H.table)
        assert rep.ok, f"Hom({a},{b}): {rep.render()}"


def test_hom_of_terminal_recovers_target(tables):
    # Hom(terminal, B) is isomorphic to B via evaluation at the point
    B = tables["sigmaM"]
    H = hom_double(terminal(), B)
    assert len(H.table.objects) == len(B.objects)
    assert len(H.table.hmors) == len(B.hmors)
    assert len(H.table.cells) == len(B.cells)
    # evaluation: component maps are bijections
    pts = {h: t.at_obj["pt"] for h, t in H.horizontals.items()}
    assert sorted(pts.values()) == sorted(B.hmors)


def test_hom_unit_object_evaluation(tables):
    B = tables["nonstrict"]
    H = hom_double(unit_object(), B)
    assert len(H.table.objects) == len(B.objects)
    assert len(H.table.hmors) == len(B.hmors)
    assert len(H.table.cells) == len(B.cells)


def test_hom_of_bicategories_has_icon_verticals(tables):
    # vertical morphisms of Hom(N, N) are icons: identity components on
    # objects, cells at the horizontal morphisms
    N = tables["nonstrict"]
    H = hom_double(N, N)
    for t in H.verticals.values():
        for a in N.objects:
            assert t.at_obj[a] == N.v_identity[a]


def test_ps_sub_is_full_on_strict_functors(tables):
    Q = tables["quintet"]
    H = hom_double(Q, Q)
    P = ps_sub(Q, Q, H)
    assert all(is_strict_functor(F) for F in P.functors.values())
    assert validate(P.table).ok
    keep = set(P.table.objects)
    for h, t in H.horizontals.items():
        if H.ids[t.src.key()] in keep and H.ids[t.tgt.key()] in keep:
            assert h in P.horizontals


def test_underlying_bicategory_of_hom_is_hom_bicategory(tables):
    from strawcat import underlying_bicategory
    N = tables["nonstrict"]
    H = hom_double(N, N)
    HB = underlying_bicategory(H.table)
    assert validate(HB).ok
    # globular cells = modifications over identity icons
    for c in HB.cells:
        m = H.modifications[c]
        assert m.left.key() == identity_vertical(m.top.src).key()


def test_whiskering_strictness(tables):
    # pre-whiskering is strict on the nose; post-whiskering corrects by phi
    N = tables["nonstrict"]
    H = hom_double(N, N)
    for t in H.horizontals.values():
        for F in H.functors.values():
            pre = whisker_pre_functor(t, F)
            assert check_horizontal(pre).ok
            post = whisker_post_functor(F, t)
            assert check_horizontal(post).ok


def test_interchanger_component_and_axioms(tables):
    N = tables["nonstrict"]
    H = hom_double(N, N)
    hs = list(H.horizontals.values())
    n_checked = 0
    for al in hs:
        for be in hs:
            m = interchanger(al, be)
            assert check_modification(m).ok
            mi = interchanger_inv(al, be)
            assert check_modification(mi).ok
            for a in N.objects:
                assert m.at_obj[a] == be.at_hmor[al.at_obj[a]][0]
            n_checked += 1
    assert n_checked == len(hs) ** 2


def test_interchanger_identity_degenerates(tables):
    N = tables["nonstrict"]
    F = identity_functor(N)
    one = identity_horizontal(F)
    m = interchanger(one, one)
    assert check_modification(m).ok


def test_enumerate_transformations_complete(tables):
    Q = tables["quintet"]
    fs = enumerate_functors(Q, Q)
    for F in fs:
        for G in fs:
            for t in enumerate_vertical(F, G):
                assert check_vertical(t).ok
            for t in enumerate_horizontal(F, G):
                assert check_horizontal(t).ok
