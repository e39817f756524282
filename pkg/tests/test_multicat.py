import pytest

from strawcat.multicat import (
    AdjunctionData,
    MultiFunctorData,
    MultiNatData,
    adjunction_check,
    all_perms,
    check_multifunctor,
    conjugation_multifunctor,
    endo_multicat,
    envelope,
    from_monoidal,
    hypothesis_check,
    identity_adjunction,
    perm_block,
    perm_compose,
    perm_sum,
    pronormal_check,
    strictification_adjunction_report,
    terminal_multicat,
    validate_envelope,
    validate_multicat,
)


def addz2(x, y):
    return str((int(x) + int(y)) % 2)


@pytest.fixture(scope="module")
def endo2():
    return endo_multicat("endo2", ("0", "1"), 2)


@pytest.fixture(scope="module")
def z2mon():
    return from_monoidal("z2mon", ("0", "1"), addz2, "0", 3)


def test_perm_utilities():
    p, q = (1, 0, 2), (2, 0, 1)
    assert perm_compose(p, q) == tuple(p[q[i]] for i in range(3))
    assert perm_block((1, 0), [2, 1]) == (2, 0, 1)
    assert perm_sum([(1, 0), (0,)]) == (1, 0, 2)


def test_terminal_multicat_valid():
    assert validate_multicat(terminal_multicat(3)).ok


def test_endo_multicat_valid(endo2):
    rep = validate_multicat(endo2)
    assert rep.ok, rep.render()
    # binary morphisms are the functions on pairs
    assert len(endo2.hom(("x", "x"), "x")) == 16


def test_from_monoidal_valid(z2mon):
    rep = validate_multicat(z2mon)
    assert rep.ok, rep.render()
    # multihoms are singletons exactly when the product matches
    assert z2mon.hom(("0", "1", "1"), "0")
    assert not z2mon.hom(("0", "1", "1"), "1")


def test_from_monoidal_rejects_noncommutative():
    elems = ("i", "a", "b")
    table = {("i", x): x for x in elems} | {(x, "i"): x for x in elems}
    table |= {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
    with pytest.raises(Exception):
        from_monoidal("lz", elems, lambda x, y: table[(x, y)], "i", 2)


def test_envelope_of_terminal_small():
    E = envelope(terminal_multicat(3), 3)
    rep = validate_envelope(E, assoc_full_len=3)
    assert rep.ok, rep.render()
    # objects are the finite ordinals up to the cap
    assert len(E.objects) == 4


def test_envelope_morphism_composition_uses_actions(z2mon):
    E = envelope(z2mon, 3)
    # find a composite whose reindexing permutation is nontrivial: feed two
    # inputs to swapped output slots and collapse
    rep = validate_envelope(E, assoc_full_len=2)
    assert rep.ok, rep.render()


def test_envelope_symmetry_involution(z2mon):
    E = envelope(z2mon, 3)
    s = E.symmetry(("0",), ("1",))
    s2 = E.symmetry(("1",), ("0",))
    assert E.compose(s2, s) == E.identity(("0", "1"))


def test_pronormal_identity(endo2):
    I = MultiFunctorData("1", endo2, endo2, {"x": "x"}, {m: m for m in endo2.sig})
    assert pronormal_check(I).ok


def test_pronormal_counterexample():
    # collapsing the two nullary morphisms of endo({0,1}) into endo({0})
    V = endo_multicat("endo2", ("0", "1"), 1)
    W = endo_multicat("endo1", ("0",), 1)

    def collapse(m):
        n = m[1]
        return ("f", n, tuple(["0"] * (1 ** n)))

    T = MultiFunctorData("collapse", V, W, {"x": "x"},
                         {m: collapse(m) for m in V.sig})
    assert check_multifunctor(T).ok
    rep = pronormal_check(T)
    assert not rep.ok
    assert any(f.check == "pronormal.injective" for f in rep.failures())


def test_identity_adjunction(endo2):
    assert adjunction_check(identity_adjunction(endo2)).ok


def test_conjugation_is_multifunctor(endo2):
    tau = {"0": "1", "1": "0"}
    C = conjugation_multifunctor(endo2, ("0", "1"), tau)
    assert check_multifunctor(C).ok
    assert pronormal_check(C).ok


def test_hypothesis_check_synthesises_adjunction(endo2):
    tau = {"0": "1", "1": "0"}
    T = conjugation_multifunctor(endo2, ("0", "1"), tau)
    rep, data = hypothesis_check(T, {"x": "x"}, {"x": endo2.ident("x")})
    assert rep.ok, rep.render()
    rep2 = adjunction_check(data)
    assert rep2.ok, rep2.render()


def test_hypothesis_check_rejects_bad_unit(endo2):
    # a non-invertible unit candidate breaks the bijection
    T = MultiFunctorData("1", endo2, endo2, {"x": "x"}, {m: m for m in endo2.sig})
    const0 = ("f", 1, ("0", "0"))
    rep, data = hypothesis_check(T, {"x": "x"}, {"x": const0})
    assert not rep.ok


def test_counit_characterisation(endo2):
    # the counit is the unique morphism with T(eps) . eta_T = 1
    data = identity_adjunction(endo2)
    V = endo2
    for X in V.objects:
        eps = data.counit.components[X]
        assert V.gamma(data.T.mm(eps), (data.unit.components[data.T.obj(X)],)) \
            == V.ident(data.T.obj(X))


def test_strictification_adjunction_small(tables):
    sub = {k: tables[k] for k in ("nonstrict", "sigma2")}
    rep = strictification_adjunction_report(sub, bound=2)
    assert rep.ok, rep.render()
    assert rep.params["unit_naturality_instances"] > 0
    assert rep.params["S_functoriality_instances"] > 0
