import pytest

from strawcat import product, terminal, unit_object, validate
from strawcat.homs import (check_functor, check_vertical, enumerate_functors,
                           enumerate_vertical, hom_double, identity_functor,
                           is_strict_functor)
from strawcat.report import StructuralError
from strawcat.twovar import (
    check_twovar_functor,
    check_twovar_horizontal,
    check_twovar_modification,
    check_twovar_vertical,
    cubical_K,
    cubical_K_list,
    curry_functor,
    curry_horizontal,
    curry_modification,
    curry_vertical,
    enumerate_twovar_functors,
    multihom,
    restrict_along_K,
    skew_L,
    skew_i,
    skew_j,
    skew_s,
    transport_faithful,
    transport_product,
    transport_sigma,
    tree_norm_iso,
    uncurry_functor,
    uncurry_horizontal,
    uncurry_modification,
    uncurry_vertical,
    verify_equivalence,
    _enumerate_twovar_verticals,
    _restrict_vertical_along_K,
)


@pytest.fixture(scope="module")
def QQM(tables):
    Q, M = tables["quintet"], tables["sigmaM"]
    hom = hom_double(Q, M)
    return Q, M, hom


def test_twovar_enumeration_and_checks(QQM, tables):
    Q, M, hom = QQM
    two = enumerate_twovar_functors(Q, Q, M, hom)
    assert len(two) == 1
    for F in two:
        assert check_twovar_functor(F).ok


def test_twovar_nonstrict_instances(tables):
    N, M = tables["nonstrict"], tables["sigmaM"]
    hom = hom_double(N, M)
    two = enumerate_twovar_functors(N, N, M, hom)
    assert len(two) == 4
    for F in two:
        assert check_twovar_functor(F).ok


def test_curry_roundtrip_functors(QQM):
    Q, M, hom = QQM
    for F in enumerate_twovar_functors(Q, Q, M, hom):
        P = curry_functor(F, hom)
        assert check_functor(P).ok
        back = uncurry_functor(P, hom, Q, M)
        assert back.key() == F.key()


def test_curry_roundtrip_all_levels(tables):
    # (N, N; M): four functors, transformations between them
    N, M = tables["nonstrict"], tables["sigmaM"]
    hom = hom_double(N, M)
    two = enumerate_twovar_functors(N, N, M, hom)
    curried = {F.key(): curry_functor(F, hom) for F in two}
    homNH = None
    for F in two:
        for G in two:
            Pf, Pg = curried[F.key()], curried[G.key()]
            for t in enumerate_vertical(Pf, Pg):
                s2 = uncurry_vertical(t, hom, F, G)
                assert check_twovar_vertical(s2).ok
                t2 = curry_vertical(s2, hom, Pf, Pg)
                assert t2.key() == t.key()


def test_curry_roundtrip_modifications(tables):
    from strawcat.homs import (enumerate_horizontal, enumerate_modifications,
                               identity_vertical)
    N, M = tables["nonstrict"], tables["sigmaM"]
    hom = hom_double(N, M)
    two = enumerate_twovar_functors(N, N, M, hom)
    curried = {F.key(): curry_functor(F, hom) for F in two}
    n = 0
    for F in two:
        for G in two:
            Pf, Pg = curried[F.key()], curried[G.key()]
            hs = enumerate_horizontal(Pf, Pg)
            for t in hs:
                for b in hs:
                    for m in enumerate_modifications(
                            t, b, identity_vertical(Pf), identity_vertical(Pg)):
                        h_t = uncurry_horizontal(t, hom, F, G)
                        h_b = uncurry_horizontal(b, hom, F, G)
                        s_id = uncurry_vertical(identity_vertical(Pf), hom, F, F)
                        r_id = uncurry_vertical(identity_vertical(Pg), hom, G, G)
                        m2 = uncurry_modification(m, hom, h_t, h_b, s_id, r_id)
                        assert check_twovar_modification(m2).ok
                        back = curry_modification(m2, hom, t, b,
                                                  identity_vertical(Pf),
                                                  identity_vertical(Pg))
                        assert back.key() == m.key()
                        n += 1
    assert n > 0


def test_skew_s_involution(QQM, tables):
    Q, M, hom = QQM
    for F in enumerate_twovar_functors(Q, Q, M, hom):
        s = skew_s(F)
        assert check_twovar_functor(s).ok
        assert skew_s(s).key() == F.key()
    N = tables["nonstrict"]
    homN = hom_double(N, M)
    for F in enumerate_twovar_functors(N, N, M, homN):
        assert skew_s(skew_s(F)).key() == F.key()


def test_skew_i_and_j(tables):
    I = unit_object()
    B = tables["nonstrict"]
    hom_IA = hom_double(I, B)
    i = skew_i(B, hom_IA, I)
    assert check_functor(i).ok
    assert is_strict_functor(i)
    hom_AA = hom_double(B, B)
    j = skew_j(B, hom_AA, I)
    assert check_functor(j).ok
    # j picks the identity functor; evaluating at the point recovers it
    picked = hom_AA.functors[j.obj("i")]
    assert picked.key() == identity_functor(B).key()


def test_skew_L_structure(tables):
    T = terminal()
    M = tables["sigmaM"]
    hom_TT = hom_double(T, T)
    hom_TM = hom_double(T, M)
    L = skew_L(T, T, M, hom_BC=hom_TM, hom_AB=hom_TT, hom_AC=hom_TM)
    assert check_twovar_functor(L).ok
    # strict in the first variable
    for p in L.partial_left.values():
        assert is_strict_functor(p)


def test_skew_L_interchange_cells_are_pseudonaturality_components(tables):
    T = terminal()
    N = tables["nonstrict"]
    hom_TN = hom_double(T, N)
    hom_TT = hom_double(T, T)
    L = skew_L(T, T, N, hom_BC=hom_TN, hom_AB=hom_TT, hom_AC=hom_TN)
    assert check_twovar_functor(L).ok
    for (bh, th), (cid, _) in L.cell_hh.items():
        bt = hom_TN.horizontals[bh]
        t = hom_TT.horizontals[th]
        m = hom_TN.modifications[cid]
        for a in T.objects:
            assert m.at_obj[a] == bt.at_hmor[t.at_obj[a]][0]


def test_multihom_arity(tables):
    M = tables["sigmaM"]
    Q = tables["quintet"]
    assert multihom([], M) == list(M.objects)
    H1 = multihom([Q], M)
    assert len(H1.functors) == len(enumerate_functors(Q, M))
    H2 = multihom([Q, Q], M)
    assert len(H2.table.objects) == len(enumerate_twovar_functors(Q, Q, M))
    with pytest.raises(StructuralError):
        multihom([Q, Q, Q, Q], M, arity_cap=3)


def test_cubical_K_arities(tables):
    assert cubical_K_list([]) == "pt"
    Q = tables["quintet"]
    assert cubical_K_list([Q]).key() == identity_functor(Q).key()
    K = cubical_K_list([Q, Q])
    assert check_twovar_functor(K).ok
    with pytest.raises(StructuralError):
        cubical_K_list([Q, Q, Q])


def test_K_valid_on_nonstrict_pairs(tables):
    for a, b in [("nonstrict", "sigmaM"), ("nonstrict", "nonstrict")]:
        K = cubical_K(tables[a], tables[b])
        assert check_twovar_functor(K).ok, (a, b)


def test_transport_product_and_sigma(tables):
    N, M = tables["nonstrict"], tables["sigmaM"]
    hom = hom_double(N, M)
    for F in enumerate_twovar_functors(N, N, M, hom):
        Fbar = transport_product(F)
        assert check_functor(Fbar).ok
        sg = transport_sigma(F, Fbar)
        assert check_twovar_vertical(sg).ok
        C = F.cod
        assert all(C.inverse_of(c) is not None for c in sg.cell_right.values())
        assert all(C.inverse_of(c) is not None for c in sg.cell_left.values())


def test_transport_faithful_roundtrip(tables):
    Q, M = tables["quintet"], tables["sigmaM"]
    P = product(Q, Q)
    ones = enumerate_functors(P, M)
    for H in ones:
        for H2 in ones:
            HK = restrict_along_K(H, Q, Q)
            H2K = restrict_along_K(H2, Q, Q)
            for t in enumerate_vertical(H, H2):
                tK = _restrict_vertical_along_K(t, HK, H2K, Q, Q)
                assert check_twovar_vertical(tK).ok
                back = transport_faithful(tK, H, H2)
                assert back.key() == t.key()


def test_verify_equivalence(tables):
    rep = verify_equivalence(tables["quintet"], tables["quintet"], tables["sigmaM"])
    assert rep.ok, rep.render()
    rep = verify_equivalence(tables["nonstrict"], tables["nonstrict"],
                             tables["sigmaM"])
    assert rep.ok, rep.render()
    assert rep.params["twovar_functors"] == rep.params["product_functors"] == 4


def test_verify_equivalence_degenerate_terminal(tables):
    rep = verify_equivalence(terminal(), terminal(), tables["sigma2"])
    assert rep.ok, rep.render()


def test_tree_norm_iso_roundtrip(tables):
    N = tables["nonstrict"]
    tree = (("e", "j"), ("e", "e"))
    fwd, bwd = tree_norm_iso(N, tree)
    assert N.vcomp_cell(bwd, fwd) == N.vid_of(N.frame(fwd).top)
    assert N.vcomp_cell(fwd, bwd) == N.vid_of(N.frame(fwd).bottom)


def _trees(leaves):
    if len(leaves) == 1:
        return [leaves[0]]
    out = []
    for k in range(1, len(leaves)):
        for l in _trees(leaves[:k]):
            for r in _trees(leaves[k:]):
                out.append((l, r))
    return out


def test_rebracketing_isos_compose_coherently(tables):
    # any two canonical isos between bracketings compose to the canonical
    # one; with four leaves this exercises every pentagon route
    from strawcat.twovar import rebracket_iso
    N = tables["nonstrict"]
    for leaves in [("e", "j", "e"), ("e", "e", "j", "e")]:
        trees = _trees(leaves)
        for t0 in trees:
            for t1 in trees:
                for t2 in trees:
                    a = rebracket_iso(N, t0, t1)[0]
                    b = rebracket_iso(N, t1, t2)[0]
                    c = rebracket_iso(N, t0, t2)[0]
                    assert N.vcomp_cell(b, a) == c
