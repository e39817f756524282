import pytest

from strawcat import terminal
from strawcat.gray import (GridContext, biequivalence_check, eta_star,
                           gray_axiom_check, interchange_grid, st_hom)
from strawcat.report import StructuralError
from strawcat.strictify import Path


@pytest.fixture(scope="module")
def shNN(tables):
    return st_hom(tables["nonstrict"], tables["nonstrict"])


@pytest.fixture(scope="module")
def ctxNN(shNN):
    return GridContext(shNN, shNN.hom, shNN.hom)


def test_eta_star_is_unary(shNN):
    h = shNN.hom.table.hmors[0]
    p = eta_star(shNN, h)
    assert len(p) == 1 and p.hmors == (h,)


def test_empty_grids_are_identities(shNN, ctxNN):
    S = shNN.S
    some_obj = shNN.hom.table.objects[0]
    empty = Path(some_obj, ())
    g = interchange_grid(ctxNN, empty, empty)
    assert g == S.vid_of(g.dom)
    for h in shNN.hom.table.hmors[:4]:
        one = S.unary(h)
        g = interchange_grid(ctxNN, one, empty)
        assert g == S.vid_of(g.dom)
        g = interchange_grid(ctxNN, empty, one)
        assert g == S.vid_of(g.dom)


def test_single_grid_is_the_interchanger(shNN, ctxNN):
    T = shNN.hom.table
    for a in T.hmors[:6]:
        for b in T.hmors[:6]:
            al = S_unary = shNN.S.unary(a)
            be = shNN.S.unary(b)
            g = interchange_grid(ctxNN, al, be)
            assert g.payload == ctxNN.interchanger_payload(a, b)
            gi = shNN.S.inverse_of(g)
            assert gi is not None
            assert shNN.S.vcomp_cell(gi, g) == shNN.S.vid_of(g.dom)


def test_grid_order_independence_2x2(shNN, ctxNN):
    T = shNN.hom.table
    count = 0
    for alphas in shNN.S.paths(2):
        if len(alphas) != 2:
            continue
        for betas in shNN.S.paths(2):
            if len(betas) != 2:
                continue
            row = interchange_grid(ctxNN, alphas, betas, "row")
            col = interchange_grid(ctxNN, alphas, betas, "col")
            assert row == col
            count += 1
            if count >= 25:
                return
    assert count


def test_gray_axiom_check_terminal_triple(tables):
    rep = gray_axiom_check(terminal(), terminal(), terminal(), bound=2)
    assert rep.ok, rep.render()


def test_gray_axiom_check_mixed_triple(tables):
    rep = gray_axiom_check(tables["sigma2"], tables["sigma2"], tables["sigma2"],
                           bound=2)
    assert rep.ok, rep.render()
    assert rep.params["grid_instances"] > 0


def test_biequivalence_checks(tables):
    rep = biequivalence_check(tables["nonstrict"], tables["sigmaM"], bound=3)
    assert rep.ok, rep.render()
    rep = biequivalence_check(tables["terminal"], tables["sigma2"], bound=3)
    assert rep.ok, rep.render()


def test_biequivalence_rejects_bad_inputs(tables):
    with pytest.raises(StructuralError):
        biequivalence_check(tables["quintet"], tables["sigmaM"])
    with pytest.raises(StructuralError):
        biequivalence_check(tables["nonstrict"], tables["nonstrict"])
