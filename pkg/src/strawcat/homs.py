"""Morphism-level calculus: pseudo double functors, vertical and horizontal
pseudo transformations, modifications, their exact axiom checkers, exhaustive
enumerators, and the hom pseudo double category.

Orientation conventions (matching core):

* the unit constraint of a functor points 1 -> F1 and the composition
  constraint points Fg.Ff -> F(g.f);
* the component of a horizontal pseudo transformation t: F -> G at a
  horizontal f: a -> b points  t_b . Ff  ->  Gf . t_a  (so the component of
  the interchanger at an object is literally the stored pseudonaturality
  cell, with no repackaging).

Functor domains are always finite tables; codomains may be any structure
exposing the table interface (in particular a lazy strictification).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Frame, TableDouble
from .report import Report


# ---------------------------------------------------------------------------
# data
# ---------------------------------------------------------------------------

@dataclass
class PseudoDoubleFunctor:
    dom: TableDouble
    cod: object
    obj_map: dict
    vmor_map: dict
    hmor_map: dict
    cell_map: dict
    phi0: dict                  # object a -> cell 1_{Fa} -> F(1_a)
    phi2: dict                  # (f, g), f first -> cell Fg.Ff -> F(g.f)
    name: str = ""

    def obj(self, a):
        return self.obj_map[a]

    def vmor(self, u):
        return self.vmor_map[u]

    def hmor(self, f):
        return self.hmor_map[f]

    def cell(self, c):
        return self.cell_map[c]

    def key(self):
        return ("fun",
                tuple(sorted(self.obj_map.items())),
                tuple(sorted(self.vmor_map.items())),
                tuple(sorted(self.hmor_map.items())),
                tuple(sorted(self.cell_map.items())),
                tuple(sorted(self.phi0.items())),
                tuple(sorted(self.phi2.items())))


@dataclass
class VerticalTransformation:
    src: PseudoDoubleFunctor
    tgt: PseudoDoubleFunctor
    at_obj: dict                # a -> vertical morphism Fa -> Ga
    at_hmor: dict               # f -> cell Ff => Gf
    name: str = ""

    def key(self):
        return ("vt", tuple(sorted(self.at_obj.items())),
                tuple(sorted(self.at_hmor.items())))


@dataclass
class HorizontalPseudoTransformation:
    src: PseudoDoubleFunctor
    tgt: PseudoDoubleFunctor
    at_obj: dict                # a -> horizontal morphism Fa -> Ga
    at_vmor: dict               # u -> cell t_a => t_b
    at_hmor: dict               # f -> (cell t_b.Ff -> Gf.t_a, inverse)
    name: str = ""

    def key(self):
        return ("ht", tuple(sorted(self.at_obj.items())),
                tuple(sorted(self.at_vmor.items())),
                tuple(sorted(self.at_hmor.items())))


@dataclass
class Modification:
    top: HorizontalPseudoTransformation
    bottom: HorizontalPseudoTransformation
    left: VerticalTransformation
    right: VerticalTransformation
    at_obj: dict                # a -> cell top_a => bottom_a
    name: str = ""

    def key(self):
        return ("mod", tuple(sorted(self.at_obj.items())))


# ---------------------------------------------------------------------------
# identities, composition, whiskering
# ---------------------------------------------------------------------------

def identity_functor(A: TableDouble) -> PseudoDoubleFunctor:
    return PseudoDoubleFunctor(
        dom=A, cod=A,
        obj_map={a: a for a in A.objects},
        vmor_map={u: u for u in A.vmors},
        hmor_map={f: f for f in A.hmors},
        cell_map={c: c for c in A.cells},
        phi0={a: A.vid_of(A.h_id(a)) for a in A.objects},
        phi2={(f, g): A.vid_of(gf) for (g, f), gf in A.hcomp_hmor_table.items()},
        name=f"1_{A.name}",
    )


def is_strict_functor(F: PseudoDoubleFunctor) -> bool:
    B = F.cod
    for a in F.dom.objects:
        if F.hmor(F.dom.h_id(a)) != B.h_id(F.obj(a)):
            return False
        if F.phi0[a] != B.vid_of(B.h_id(F.obj(a))):
            return False
    for (g, f), gf in F.dom.hcomp_hmor_table.items():
        composite = B.hcomp_hmor(F.hmor(g), F.hmor(f))
        if F.hmor(gf) != composite or F.phi2[(f, g)] != B.vid_of(composite):
            return False
    return True


def compose_functors(G: PseudoDoubleFunctor, F: PseudoDoubleFunctor) -> PseudoDoubleFunctor:
    """G after F; F's codomain must be G's (finite) domain."""
    B = G.cod
    phi0 = {a: B.vcomp_cells(G.phi0[F.obj(a)], G.cell(F.phi0[a])) for a in F.dom.objects}
    phi2 = {}
    for (g2, f2) in F.dom.hcomp_hmor_table:
        phi2[(f2, g2)] = B.vcomp_cells(G.phi2[(F.hmor(f2), F.hmor(g2))],
                                       G.cell(F.phi2[(f2, g2)]))
    return PseudoDoubleFunctor(
        dom=F.dom, cod=G.cod,
        obj_map={a: G.obj(F.obj(a)) for a in F.dom.objects},
        vmor_map={u: G.vmor(F.vmor(u)) for u in F.dom.vmors},
        hmor_map={f: G.hmor(F.hmor(f)) for f in F.dom.hmors},
        cell_map={c: G.cell(F.cell(c)) for c in F.dom.cells},
        phi0=phi0, phi2=phi2,
        name=f"{G.name}.{F.name}",
    )


def identity_vertical(F: PseudoDoubleFunctor) -> VerticalTransformation:
    B = F.cod
    return VerticalTransformation(
        src=F, tgt=F,
        at_obj={a: B.v_id(F.obj(a)) for a in F.dom.objects},
        at_hmor={f: B.vid_of(F.hmor(f)) for f in F.dom.hmors},
    )


def compose_vertical(t: VerticalTransformation, s: VerticalTransformation) -> VerticalTransformation:
    """t after s (s: F -> G, t: G -> H)."""
    B = s.src.cod
    return VerticalTransformation(
        src=s.src, tgt=t.tgt,
        at_obj={a: B.vcomp_vmor(t.at_obj[a], s.at_obj[a]) for a in s.at_obj},
        at_hmor={f: B.vcomp_cells(s.at_hmor[f], t.at_hmor[f]) for f in s.at_hmor},
    )


def identity_horizontal(F: PseudoDoubleFunctor) -> HorizontalPseudoTransformation:
    B = F.cod
    at_hmor = {}
    for f in F.dom.hmors:
        Ff = F.hmor(f)
        cell = B.vcomp_cells(B.lunit_of(Ff)[0], B.runit_of(Ff)[1])
        inv = B.vcomp_cells(B.runit_of(Ff)[0], B.lunit_of(Ff)[1])
        at_hmor[f] = (cell, inv)
    return HorizontalPseudoTransformation(
        src=F, tgt=F,
        at_obj={a: B.h_id(F.obj(a)) for a in F.dom.objects},
        at_vmor={u: B.hid_of(F.vmor(u)) for u in F.dom.vmors},
        at_hmor=at_hmor,
    )


def hcomp_horizontal(t2: HorizontalPseudoTransformation,
                     t1: HorizontalPseudoTransformation) -> HorizontalPseudoTransformation:
    """t2 after t1 (t1: F -> G, t2: G -> H)."""
    F, G, H = t1.src, t1.tgt, t2.tgt
    B = F.cod
    at_obj = {a: B.hcomp_hmor(t2.at_obj[a], t1.at_obj[a]) for a in t1.at_obj}
    at_vmor = {u: B.hcomp_cell(t2.at_vmor[u], t1.at_vmor[u]) for u in t1.at_vmor}
    at_hmor = {}
    for f in F.dom.hmors:
        a, b = F.dom.hsrc(f), F.dom.htgt(f)
        Ff, Gf, Hf = F.hmor(f), G.hmor(f), H.hmor(f)
        fwd = B.vcomp_cells(
            B.assoc_of(Ff, t1.at_obj[b], t2.at_obj[b])[0],
            B.hcomp_cell(B.vid_of(t2.at_obj[b]), t1.at_hmor[f][0]),
            B.assoc_of(t1.at_obj[a], Gf, t2.at_obj[b])[1],
            B.hcomp_cell(t2.at_hmor[f][0], B.vid_of(t1.at_obj[a])),
            B.assoc_of(t1.at_obj[a], t2.at_obj[a], Hf)[0],
        )
        bwd = B.vcomp_cells(
            B.assoc_of(t1.at_obj[a], t2.at_obj[a], Hf)[1],
            B.hcomp_cell(t2.at_hmor[f][1], B.vid_of(t1.at_obj[a])),
            B.assoc_of(t1.at_obj[a], Gf, t2.at_obj[b])[0],
            B.hcomp_cell(B.vid_of(t2.at_obj[b]), t1.at_hmor[f][1]),
            B.assoc_of(Ff, t1.at_obj[b], t2.at_obj[b])[1],
        )
        at_hmor[f] = (fwd, bwd)
    return HorizontalPseudoTransformation(src=F, tgt=H, at_obj=at_obj,
                                          at_vmor=at_vmor, at_hmor=at_hmor)


def identity_modification(t: HorizontalPseudoTransformation) -> Modification:
    B = t.src.cod
    return Modification(
        top=t, bottom=t,
        left=identity_vertical(t.src), right=identity_vertical(t.tgt),
        at_obj={a: B.vid_of(t.at_obj[a]) for a in t.at_obj},
    )


def hid_modification(s: VerticalTransformation) -> Modification:
    B = s.src.cod
    return Modification(
        top=identity_horizontal(s.src), bottom=identity_horizontal(s.tgt),
        left=s, right=s,
        at_obj={a: B.hid_of(s.at_obj[a]) for a in s.at_obj},
    )


def vcomp_modifications(m2: Modification, m1: Modification) -> Modification:
    B = m1.top.src.cod
    return Modification(
        top=m1.top, bottom=m2.bottom,
        left=compose_vertical(m2.left, m1.left),
        right=compose_vertical(m2.right, m1.right),
        at_obj={a: B.vcomp_cells(m1.at_obj[a], m2.at_obj[a]) for a in m1.at_obj},
    )


def hcomp_modifications(m2: Modification, m1: Modification) -> Modification:
    B = m1.top.src.cod
    return Modification(
        top=hcomp_horizontal(m2.top, m1.top),
        bottom=hcomp_horizontal(m2.bottom, m1.bottom),
        left=m1.left, right=m2.right,
        at_obj={a: B.hcomp_cell(m2.at_obj[a], m1.at_obj[a]) for a in m1.at_obj},
    )


def whisker_post_functor(h: PseudoDoubleFunctor, t):
    """Post-compose a transformation or modification with a functor h."""
    B = h.cod
    if isinstance(t, VerticalTransformation):
        return VerticalTransformation(
            src=compose_functors(h, t.src), tgt=compose_functors(h, t.tgt),
            at_obj={a: h.vmor(t.at_obj[a]) for a in t.at_obj},
            at_hmor={f: h.cell(t.at_hmor[f]) for f in t.at_hmor},
        )
    if isinstance(t, HorizontalPseudoTransformation):
        F, G = t.src, t.tgt
        at_hmor = {}
        for f in F.dom.hmors:
            a, b = F.dom.hsrc(f), F.dom.htgt(f)
            fwd = B.vcomp_cells(
                h.phi2[(F.hmor(f), t.at_obj[b])],
                h.cell(t.at_hmor[f][0]),
                B.inv(h.phi2[(t.at_obj[a], G.hmor(f))]),
            )
            bwd = B.vcomp_cells(
                h.phi2[(t.at_obj[a], G.hmor(f))],
                h.cell(t.at_hmor[f][1]),
                B.inv(h.phi2[(F.hmor(f), t.at_obj[b])]),
            )
            at_hmor[f] = (fwd, bwd)
        return HorizontalPseudoTransformation(
            src=compose_functors(h, F), tgt=compose_functors(h, G),
            at_obj={a: h.hmor(t.at_obj[a]) for a in t.at_obj},
            at_vmor={u: h.cell(t.at_vmor[u]) for u in t.at_vmor},
            at_hmor=at_hmor,
        )
    if isinstance(t, Modification):
        return Modification(
            top=whisker_post_functor(h, t.top), bottom=whisker_post_functor(h, t.bottom),
            left=whisker_post_functor(h, t.left), right=whisker_post_functor(h, t.right),
            at_obj={a: h.cell(t.at_obj[a]) for a in t.at_obj},
        )
    raise TypeError(type(t))


def whisker_pre_functor(t, h: PseudoDoubleFunctor):
    """Pre-compose with h; strict on the nose (no constraint corrections)."""
    if isinstance(t, VerticalTransformation):
        return VerticalTransformation(
            src=compose_functors(t.src, h), tgt=compose_functors(t.tgt, h),
            at_obj={a: t.at_obj[h.obj(a)] for a in h.dom.objects},
            at_hmor={f: t.at_hmor[h.hmor(f)] for f in h.dom.hmors},
        )
    if isinstance(t, HorizontalPseudoTransformation):
        return HorizontalPseudoTransformation(
            src=compose_functors(t.src, h), tgt=compose_functors(t.tgt, h),
            at_obj={a: t.at_obj[h.obj(a)] for a in h.dom.objects},
            at_vmor={u: t.at_vmor[h.vmor(u)] for u in h.dom.vmors},
            at_hmor={f: t.at_hmor[h.hmor(f)] for f in h.dom.hmors},
        )
    if isinstance(t, Modification):
        return Modification(
            top=whisker_pre_functor(t.top, h), bottom=whisker_pre_functor(t.bottom, h),
            left=whisker_pre_functor(t.left, h), right=whisker_pre_functor(t.right, h),
            at_obj={a: t.at_obj[h.obj(a)] for a in h.dom.objects},
        )
    raise TypeError(type(t))


def interchanger(alpha: HorizontalPseudoTransformation,
                 beta: HorizontalPseudoTransformation) -> Modification:
    """The canonical invertible modification  (beta g).(h alpha) -> (k alpha).(beta f)
    for alpha: f -> g over A -> B and beta: h -> k over B -> C, with component
    at a the stored pseudonaturality cell of beta at the morphism alpha_a."""
    f, g = alpha.src, alpha.tgt
    h, k = beta.src, beta.tgt
    top = hcomp_horizontal(whisker_pre_functor(beta, g), whisker_post_functor(h, alpha))
    bottom = hcomp_horizontal(whisker_post_functor(k, alpha), whisker_pre_functor(beta, f))
    return Modification(
        top=top, bottom=bottom,
        left=identity_vertical(compose_functors(h, f)),
        right=identity_vertical(compose_functors(k, g)),
        at_obj={a: beta.at_hmor[alpha.at_obj[a]][0] for a in alpha.at_obj},
    )


def interchanger_inv(alpha, beta) -> Modification:
    m = interchanger(alpha, beta)
    return Modification(top=m.bottom, bottom=m.top, left=m.right, right=m.left,
                        at_obj={a: beta.at_hmor[alpha.at_obj[a]][1] for a in alpha.at_obj})


# ---------------------------------------------------------------------------
# checkers: exact decision procedures over finite domains
# ---------------------------------------------------------------------------

def check_functor(F: PseudoDoubleFunctor) -> Report:
    A, B = F.dom, F.cod
    rep = Report(f"check_functor({F.name or '?'})")

    for a in A.objects:
        rep.require("fun.vid", F.vmor(A.v_id(a)) == B.v_id(F.obj(a)), (a,))
    for (w, u), wu in A.vcomp_vmor_table.items():
        rep.require("fun.vcomp", F.vmor(wu) == B.vcomp_vmor(F.vmor(w), F.vmor(u)), (u, w))
    for u in A.vmors:
        rep.require("fun.vmor.typed",
                    B.vsrc(F.vmor(u)) == F.obj(A.vsrc(u)) and B.vtgt(F.vmor(u)) == F.obj(A.vtgt(u)),
                    (u,))
    for f in A.hmors:
        rep.require("fun.hmor.typed",
                    B.hsrc(F.hmor(f)) == F.obj(A.hsrc(f)) and B.htgt(F.hmor(f)) == F.obj(A.htgt(f)),
                    (f,))
    for c in A.cells:
        fr = A.frame(c)
        want = Frame(F.hmor(fr.top), F.hmor(fr.bottom), F.vmor(fr.left), F.vmor(fr.right))
        rep.require("fun.cell.frame", B.frame(F.cell(c)) == want, (c,))
    for f in A.hmors:
        rep.require("fun.cell.vid", F.cell(A.vid_of(f)) == B.vid_of(F.hmor(f)), (f,))
    for (lo, up), out in A.vcomp_cell_table.items():
        rep.require("fun.cell.vcomp",
                    F.cell(out) == B.vcomp_cell(F.cell(lo), F.cell(up)), (up, lo))

    # constraints: globular and invertible
    for a in A.objects:
        c = F.phi0[a]
        fr = B.frame(c)
        ok = (fr.top == B.h_id(F.obj(a)) and fr.bottom == F.hmor(A.h_id(a))
              and B.is_globular(c))
        rep.require("fun.phi0.frame", ok, (a,))
        if ok:
            rep.require("fun.phi0.invertible", B.inverse_of(c) is not None, (a,))
    for (g, f), gf in A.hcomp_hmor_table.items():
        c = F.phi2[(f, g)]
        fr = B.frame(c)
        ok = (fr.top == B.hcomp_hmor(F.hmor(g), F.hmor(f)) and fr.bottom == F.hmor(gf)
              and B.is_globular(c))
        rep.require("fun.phi2.frame", ok, (f, g))
        if ok:
            rep.require("fun.phi2.invertible", B.inverse_of(c) is not None, (f, g))
    if rep.failures():
        return rep

    # naturality of phi0 with respect to vertical morphisms
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        lhs = B.vcomp_cells(F.phi0[a], F.cell(A.hid_of(u)))
        rhs = B.vcomp_cells(B.hid_of(F.vmor(u)), F.phi0[b])
        rep.require("fun.phi0.natural", lhs == rhs, (u,))

    # naturality of phi2 with respect to horizontally composable cell pairs
    for (r, l), out in A.hcomp_cell_table.items():
        fl, fr_ = A.frame(l), A.frame(r)
        lhs = B.vcomp_cells(B.hcomp_cell(F.cell(r), F.cell(l)),
                            F.phi2[(fl.bottom, fr_.bottom)])
        rhs = B.vcomp_cells(F.phi2[(fl.top, fr_.top)], F.cell(out))
        rep.require("fun.phi2.natural", lhs == rhs, (l, r))

    # associativity coherence
    for (f, g, h), (ac, _) in A.assoc.items():
        gf = A.hcomp_hmor(g, f)
        hg = A.hcomp_hmor(h, g)
        lhs = B.vcomp_cells(
            B.assoc_of(F.hmor(f), F.hmor(g), F.hmor(h))[0],
            B.hcomp_cell(B.vid_of(F.hmor(h)), F.phi2[(f, g)]),
            F.phi2[(gf, h)],
        )
        rhs = B.vcomp_cells(
            B.hcomp_cell(F.phi2[(g, h)], B.vid_of(F.hmor(f))),
            F.phi2[(f, hg)],
            F.cell(ac),
        )
        rep.require("fun.hexagon", lhs == rhs, (f, g, h))

    # unit coherence
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        lhs = B.vcomp_cells(
            B.hcomp_cell(F.phi0[b], B.vid_of(F.hmor(f))),
            F.phi2[(f, A.h_id(b))],
            F.cell(A.lunit_of(f)[0]),
        )
        rep.require("fun.lunit", lhs == B.lunit_of(F.hmor(f))[0], (f,))
        lhs = B.vcomp_cells(
            B.hcomp_cell(B.vid_of(F.hmor(f)), F.phi0[a]),
            F.phi2[(A.h_id(a), f)],
            F.cell(A.runit_of(f)[0]),
        )
        rep.require("fun.runit", lhs == B.runit_of(F.hmor(f))[0], (f,))
    return rep


def check_vertical(t: VerticalTransformation) -> Report:
    F, G = t.src, t.tgt
    A, B = F.dom, F.cod
    rep = Report("check_vertical")
    for a in A.objects:
        v = t.at_obj[a]
        rep.require("vt.typed", B.vsrc(v) == F.obj(a) and B.vtgt(v) == G.obj(a), (a,))
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        rep.require("vt.natural.vmor",
                    B.vcomp_vmor(t.at_obj[b], F.vmor(u)) ==
                    B.vcomp_vmor(G.vmor(u), t.at_obj[a]), (u,))
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        want = Frame(F.hmor(f), G.hmor(f), t.at_obj[a], t.at_obj[b])
        rep.require("vt.frame", B.frame(t.at_hmor[f]) == want, (f,))
    if rep.failures():
        return rep
    for (g, f), gf in A.hcomp_hmor_table.items():
        lhs = B.vcomp_cells(F.phi2[(f, g)], t.at_hmor[gf])
        rhs = B.vcomp_cells(B.hcomp_cell(t.at_hmor[g], t.at_hmor[f]), G.phi2[(f, g)])
        rep.require("vt.hfunctorial", lhs == rhs, (f, g))
    for a in A.objects:
        lhs = B.vcomp_cells(F.phi0[a], t.at_hmor[A.h_id(a)])
        rhs = B.vcomp_cells(B.hid_of(t.at_obj[a]), G.phi0[a])
        rep.require("vt.hunit", lhs == rhs, (a,))
    for c in A.cells:
        fr = A.frame(c)
        lhs = B.vcomp_cells(F.cell(c), t.at_hmor[fr.bottom])
        rhs = B.vcomp_cells(t.at_hmor[fr.top], G.cell(c))
        rep.require("vt.natural.cell", lhs == rhs, (c,))
    return rep


def check_horizontal(t: HorizontalPseudoTransformation) -> Report:
    F, G = t.src, t.tgt
    A, B = F.dom, F.cod
    rep = Report("check_horizontal")
    for a in A.objects:
        x = t.at_obj[a]
        rep.require("ht.typed", B.hsrc(x) == F.obj(a) and B.htgt(x) == G.obj(a), (a,))
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        want = Frame(t.at_obj[a], t.at_obj[b], F.vmor(u), G.vmor(u))
        rep.require("ht.vframe", B.frame(t.at_vmor[u]) == want, (u,))
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        cell, inv = t.at_hmor[f]
        src_h = B.hcomp_hmor(t.at_obj[b], F.hmor(f))
        tgt_h = B.hcomp_hmor(G.hmor(f), t.at_obj[a])
        fr = B.frame(cell)
        ok = fr.top == src_h and fr.bottom == tgt_h and B.is_globular(cell)
        rep.require("ht.hframe", ok, (f,))
        if ok:
            rep.require("ht.invertible",
                        B.vcomp_cell(inv, cell) == B.vid_of(src_h)
                        and B.vcomp_cell(cell, inv) == B.vid_of(tgt_h), (f,))
    if rep.failures():
        return rep
    for a in A.objects:
        rep.require("ht.vid", t.at_vmor[A.v_id(a)] == B.vid_of(t.at_obj[a]), (a,))
    for (w, u), wu in A.vcomp_vmor_table.items():
        rep.require("ht.vfunctorial",
                    t.at_vmor[wu] == B.vcomp_cells(t.at_vmor[u], t.at_vmor[w]), (u, w))
    # unit coherence
    for a in A.objects:
        x = t.at_obj[a]
        want = B.vcomp_cells(
            B.hcomp_cell(B.vid_of(x), B.inv(F.phi0[a])),
            B.runit_of(x)[0],
            B.lunit_of(x)[1],
            B.hcomp_cell(G.phi0[a], B.vid_of(x)),
        )
        rep.require("ht.unitcoh", t.at_hmor[A.h_id(a)][0] == want, (a,))
    # composition coherence
    for (g, f), gf in A.hcomp_hmor_table.items():
        a = A.hsrc(f)
        b = A.htgt(f)
        c = A.htgt(g)
        tc, tb, ta = t.at_obj[c], t.at_obj[b], t.at_obj[a]
        want = B.vcomp_cells(
            B.hcomp_cell(B.vid_of(tc), B.inv(F.phi2[(f, g)])),
            B.assoc_of(F.hmor(f), F.hmor(g), tc)[1],
            B.hcomp_cell(t.at_hmor[g][0], B.vid_of(F.hmor(f))),
            B.assoc_of(F.hmor(f), tb, G.hmor(g))[0],
            B.hcomp_cell(B.vid_of(G.hmor(g)), t.at_hmor[f][0]),
            B.assoc_of(ta, G.hmor(f), G.hmor(g))[1],
            B.hcomp_cell(G.phi2[(f, g)], B.vid_of(ta)),
        )
        rep.require("ht.compcoh", t.at_hmor[gf][0] == want, (f, g))
    # naturality with respect to cells
    for cc in A.cells:
        fr = A.frame(cc)
        u, v = fr.left, fr.right
        lhs = B.vcomp_cells(B.hcomp_cell(t.at_vmor[v], F.cell(cc)), t.at_hmor[fr.bottom][0])
        rhs = B.vcomp_cells(t.at_hmor[fr.top][0], B.hcomp_cell(G.cell(cc), t.at_vmor[u]))
        rep.require("ht.natural.cell", lhs == rhs, (cc,))
    return rep


def check_modification(m: Modification) -> Report:
    t, b_, s, r = m.top, m.bottom, m.left, m.right
    A, B = t.src.dom, t.src.cod
    rep = Report("check_modification")
    for a in A.objects:
        want = Frame(t.at_obj[a], b_.at_obj[a], s.at_obj[a], r.at_obj[a])
        rep.require("mod.frame", B.frame(m.at_obj[a]) == want, (a,))
    if rep.failures():
        return rep
    for u in A.vmors:
        x, y = A.vsrc(u), A.vtgt(u)
        lhs = B.vcomp_cells(t.at_vmor[u], m.at_obj[y])
        rhs = B.vcomp_cells(m.at_obj[x], b_.at_vmor[u])
        rep.require("mod.vnatural", lhs == rhs, (u,))
    for f in A.hmors:
        x, y = A.hsrc(f), A.htgt(f)
        lhs = B.vcomp_cells(B.hcomp_cell(m.at_obj[y], s.at_hmor[f]), b_.at_hmor[f][0])
        rhs = B.vcomp_cells(t.at_hmor[f][0], B.hcomp_cell(r.at_hmor[f], m.at_obj[x]))
        rep.require("mod.hnatural", lhs == rhs, (f,))
    return rep


# ---------------------------------------------------------------------------
# enumerators
# ---------------------------------------------------------------------------

DEFAULT_MAX_CANDIDATES = 10 ** 6


class Truncated(Exception):
    pass


def _check_budget(n, max_candidates):
    if n > max_candidates:
        raise Truncated()


def enumerate_underlying_functors(A: TableDouble, B, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Functors A0 -> B0 as (obj_map, vmor_map) pairs, deterministic order."""
    out = []
    count = 0
    nonid_v = [u for u in A.vmors if u not in set(A.v_identity.values())]
    for objs in itertools.product(B.objects, repeat=len(A.objects)):
        obj_map = dict(zip(A.objects, objs))
        cands = []
        for u in nonid_v:
            cs = [v for v in B.vmors
                  if B.vsrc(v) == obj_map[A.vsrc(u)] and B.vtgt(v) == obj_map[A.vtgt(u)]]
            cands.append(cs)
        for pick in itertools.product(*cands):
            count += 1
            _check_budget(count, max_candidates)
            vmor_map = dict(zip(nonid_v, pick))
            for a in A.objects:
                vmor_map[A.v_id(a)] = B.v_id(obj_map[a])
            if all(vmor_map[wu] == B.vcomp_vmor(vmor_map[w], vmor_map[u])
                   for (w, u), wu in A.vcomp_vmor_table.items()):
                out.append((obj_map, vmor_map))
    return out


def iter_functor_candidates(A: TableDouble, B, require_invertible=True,
                            max_candidates=DEFAULT_MAX_CANDIDATES):
    """Frame-typed functor data A -> B, not yet filtered by the axioms.

    Identity cells of horizontal morphisms are forced by functoriality and
    the horizontal identity cells of vertical morphisms by naturality of the
    unit constraint; everything else ranges over all frame-compatible
    choices (constraints restricted to invertible cells unless asked not to).
    """
    invertible = {c for c in B.cells if B.inverse_of(c) is not None}
    vid_vals = set(A.vid_cell.values())
    hid_vals = set(A.hid_cell.values())
    if require_invertible:
        # hid images are forced by naturality of the unit constraint
        free_cells = [c for c in A.cells if c not in vid_vals and c not in hid_vals]
    else:
        free_cells = [c for c in A.cells if c not in vid_vals]
    count = 0
    for obj_map, vmor_map in enumerate_underlying_functors(A, B, max_candidates):
        hcands = []
        for f in A.hmors:
            cs = [x for x in B.hmors
                  if B.hsrc(x) == obj_map[A.hsrc(f)] and B.htgt(x) == obj_map[A.htgt(f)]]
            hcands.append(cs)
        for hpick in itertools.product(*hcands):
            hmor_map = dict(zip(A.hmors, hpick))
            p0cands = []
            for a in A.objects:
                cs = [c for c in B.globular_cells(B.h_id(obj_map[a]), hmor_map[A.h_id(a)])
                      if not require_invertible or c in invertible]
                p0cands.append(cs)
            p2keys = [(f, g) for (g, f) in A.hcomp_hmor_table]
            p2cands = []
            for (f, g) in p2keys:
                src_h = B.hcomp_hmor(hmor_map[g], hmor_map[f])
                cs = [c for c in B.globular_cells(src_h, hmor_map[A.hcomp_hmor(g, f)])
                      if not require_invertible or c in invertible]
                p2cands.append(cs)
            ccands = []
            for c in free_cells:
                fr = A.frame(c)
                want = Frame(hmor_map[fr.top], hmor_map[fr.bottom],
                             vmor_map[fr.left], vmor_map[fr.right])
                ccands.append(B.cells_with_frame(want))
            for p0pick in itertools.product(*p0cands):
                phi0 = dict(zip(A.objects, p0pick))
                for p2pick in itertools.product(*p2cands):
                    phi2 = dict(zip(p2keys, p2pick))
                    for cpick in itertools.product(*ccands):
                        count += 1
                        _check_budget(count, max_candidates)
                        cell_map = dict(zip(free_cells, cpick))
                        for f in A.hmors:
                            cell_map[A.vid_of(f)] = B.vid_of(hmor_map[f])
                        for u in A.vmors:
                            c = A.hid_of(u)
                            if c not in cell_map:
                                cell_map[c] = B.vcomp_cells(
                                    B.inv(phi0[A.vsrc(u)]),
                                    B.hid_of(vmor_map[u]),
                                    phi0[A.vtgt(u)])
                        yield PseudoDoubleFunctor(A, B, obj_map, vmor_map, hmor_map,
                                                  cell_map, phi0, phi2)


def enumerate_functors(A: TableDouble, B, max_candidates=DEFAULT_MAX_CANDIDATES):
    """All pseudo double functors A -> B, complete and duplicate-free.

    The naive oracle in the tests re-derives the same set from raw tuples.
    """
    out = []
    for F in iter_functor_candidates(A, B, True, max_candidates):
        if check_functor(F).ok:
            F.name = f"F{len(out)}"
            out.append(F)
    return out


def enumerate_vertical(F: PseudoDoubleFunctor, G: PseudoDoubleFunctor,
                       max_candidates=DEFAULT_MAX_CANDIDATES):
    A, B = F.dom, F.cod
    obj_cands = [[v for v in B.vmors if B.vsrc(v) == F.obj(a) and B.vtgt(v) == G.obj(a)]
                 for a in A.objects]
    out = []
    count = 0
    for opick in itertools.product(*obj_cands):
        at_obj = dict(zip(A.objects, opick))
        hcands = []
        for f in A.hmors:
            a, b = A.hsrc(f), A.htgt(f)
            want = Frame(F.hmor(f), G.hmor(f), at_obj[a], at_obj[b])
            hcands.append(B.cells_with_frame(want))
        for hpick in itertools.product(*hcands):
            count += 1
            _check_budget(count, max_candidates)
            t = VerticalTransformation(F, G, at_obj, dict(zip(A.hmors, hpick)))
            if check_vertical(t).ok:
                t.name = f"v{len(out)}"
                out.append(t)
    return out


def enumerate_horizontal(F: PseudoDoubleFunctor, G: PseudoDoubleFunctor,
                         max_candidates=DEFAULT_MAX_CANDIDATES):
    A, B = F.dom, F.cod
    obj_cands = [[x for x in B.hmors if B.hsrc(x) == F.obj(a) and B.htgt(x) == G.obj(a)]
                 for a in A.objects]
    out = []
    count = 0
    for opick in itertools.product(*obj_cands):
        at_obj = dict(zip(A.objects, opick))
        vcands = []
        for u in A.vmors:
            a, b = A.vsrc(u), A.vtgt(u)
            want = Frame(at_obj[a], at_obj[b], F.vmor(u), G.vmor(u))
            vcands.append(B.cells_with_frame(want))
        hcands = []
        for f in A.hmors:
            a, b = A.hsrc(f), A.htgt(f)
            src_h = B.hcomp_hmor(at_obj[b], F.hmor(f))
            tgt_h = B.hcomp_hmor(G.hmor(f), at_obj[a])
            cs = [(c, B.inverse_of(c)) for c in B.globular_cells(src_h, tgt_h)
                  if B.inverse_of(c) is not None]
            hcands.append(cs)
        for vpick in itertools.product(*vcands):
            for hpick in itertools.product(*hcands):
                count += 1
                _check_budget(count, max_candidates)
                t = HorizontalPseudoTransformation(F, G, at_obj,
                                                   dict(zip(A.vmors, vpick)),
                                                   dict(zip(A.hmors, hpick)))
                if check_horizontal(t).ok:
                    t.name = f"h{len(out)}"
                    out.append(t)
    return out


def enumerate_modifications(top, bottom, left, right, max_candidates=DEFAULT_MAX_CANDIDATES):
    A, B = top.src.dom, top.src.cod
    cands = []
    for a in A.objects:
        want = Frame(top.at_obj[a], bottom.at_obj[a], left.at_obj[a], right.at_obj[a])
        cands.append(B.cells_with_frame(want))
    out = []
    count = 0
    for pick in itertools.product(*cands):
        count += 1
        _check_budget(count, max_candidates)
        m = Modification(top, bottom, left, right, dict(zip(A.objects, pick)))
        if check_modification(m).ok:
            m.name = f"m{len(out)}"
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# the hom pseudo double category
# ---------------------------------------------------------------------------

@dataclass
class HomDouble:
    """Materialised Hom(A, B) together with the dictionaries back to data."""
    table: TableDouble
    functors: dict              # id -> PseudoDoubleFunctor
    verticals: dict             # id -> VerticalTransformation
    horizontals: dict           # id -> HorizontalPseudoTransformation
    modifications: dict         # id -> Modification
    ids: dict                   # datum key -> id


def hom_double(A: TableDouble, B: TableDouble,
               max_candidates=DEFAULT_MAX_CANDIDATES) -> HomDouble:
    """The pseudo double category of functors A -> B, vertical transformations,
    horizontal pseudo transformations, and modifications."""
    functors = enumerate_functors(A, B, max_candidates)
    fid = {F.key(): f"F{i}" for i, F in enumerate(functors)}
    fobj = {f"F{i}": F for i, F in enumerate(functors)}

    verticals, vid_by_key = {}, {}
    v_identity = {}
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            for t in enumerate_vertical(F, G, max_candidates):
                vid_ = f"v{len(verticals)}"
                verticals[vid_] = t
                vid_by_key[(f"F{i}", f"F{j}", t.key())] = vid_
                if i == j and t.key() == identity_vertical(F).key():
                    v_identity[f"F{i}"] = vid_

    horizontals, hid_by_key = {}, {}
    h_identity = {}
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            for t in enumerate_horizontal(F, G, max_candidates):
                hid_ = f"h{len(horizontals)}"
                horizontals[hid_] = t
                hid_by_key[(f"F{i}", f"F{j}", t.key())] = hid_
                if i == j and t.key() == identity_horizontal(F).key():
                    h_identity[f"F{i}"] = hid_

    def vlook(t):
        return vid_by_key[(fid[t.src.key()], fid[t.tgt.key()], t.key())]

    def hlook(t):
        return hid_by_key[(fid[t.src.key()], fid[t.tgt.key()], t.key())]

    modifications, mid_by_key = {}, {}
    frames = {}
    for ht_id, t in horizontals.items():
        for hb_id, b_ in horizontals.items():
            for vl_id, s in verticals.items():
                if not (s.src.key() == t.src.key() and s.tgt.key() == b_.src.key()):
                    continue
                for vr_id, r in verticals.items():
                    if not (r.src.key() == t.tgt.key() and r.tgt.key() == b_.tgt.key()):
                        continue
                    for m in enumerate_modifications(t, b_, s, r, max_candidates):
                        mid_ = f"m{len(modifications)}"
                        modifications[mid_] = m
                        mid_by_key[(ht_id, hb_id, vl_id, vr_id, m.key())] = mid_
                        frames[mid_] = Frame(ht_id, hb_id, vl_id, vr_id)

    def mlook(m):
        return mid_by_key[(hlook(m.top), hlook(m.bottom), vlook(m.left), vlook(m.right),
                           m.key())]

    vcomp_v = {}
    for id2, t2 in verticals.items():
        for id1, t1 in verticals.items():
            if t1.tgt.key() == t2.src.key():
                vcomp_v[(id2, id1)] = vlook(compose_vertical(t2, t1))
    hcomp_h = {}
    for id2, t2 in horizontals.items():
        for id1, t1 in horizontals.items():
            if t1.tgt.key() == t2.src.key():
                hcomp_h[(id2, id1)] = hlook(hcomp_horizontal(t2, t1))

    vcomp_c = {}
    for lo, mlo in modifications.items():
        for up, mup in modifications.items():
            if frames[up].bottom == frames[lo].top:
                vcomp_c[(lo, up)] = mlook(vcomp_modifications(mlo, mup))
    hcomp_c = {}
    for r_, mr in modifications.items():
        for l_, ml in modifications.items():
            if frames[l_].right == frames[r_].left:
                hcomp_c[(r_, l_)] = mlook(hcomp_modifications(mr, ml))

    vid_cell = {h: mlook(identity_modification(t)) for h, t in horizontals.items()}
    hid_cell = {v: mlook(hid_modification(s)) for v, s in verticals.items()}

    def globular_mod(top_id, bot_id, comps):
        t, b_ = horizontals[top_id], horizontals[bot_id]
        return mlook(Modification(t, b_, identity_vertical(t.src),
                                  identity_vertical(t.tgt), comps))

    assoc = {}
    for h1, t1 in horizontals.items():
        for h2, t2 in horizontals.items():
            if t1.tgt.key() != t2.src.key():
                continue
            for h3, t3 in horizontals.items():
                if t2.tgt.key() != t3.src.key():
                    continue
                lhs = hcomp_h[(hcomp_h[(h3, h2)], h1)]
                rhs = hcomp_h[(h3, hcomp_h[(h2, h1)])]
                comps = {a: B.assoc_of(t1.at_obj[a], t2.at_obj[a], t3.at_obj[a])[0]
                         for a in A.objects}
                inv = {a: B.assoc_of(t1.at_obj[a], t2.at_obj[a], t3.at_obj[a])[1]
                       for a in A.objects}
                assoc[(h1, h2, h3)] = (globular_mod(lhs, rhs, comps),
                                       globular_mod(rhs, lhs, inv))
    lunit, runit = {}, {}
    for h, t in horizontals.items():
        gid = fid[t.tgt.key()]
        lcomp = hcomp_h[(h_identity[gid], h)]
        lunit[h] = (globular_mod(lcomp, h, {a: B.lunit_of(t.at_obj[a])[0] for a in A.objects}),
                    globular_mod(h, lcomp, {a: B.lunit_of(t.at_obj[a])[1] for a in A.objects}))
        fid_ = fid[t.src.key()]
        rcomp = hcomp_h[(h, h_identity[fid_])]
        runit[h] = (globular_mod(rcomp, h, {a: B.runit_of(t.at_obj[a])[0] for a in A.objects}),
                    globular_mod(h, rcomp, {a: B.runit_of(t.at_obj[a])[1] for a in A.objects}))

    table = TableDouble(
        name=f"Hom({A.name},{B.name})",
        objects=tuple(fobj),
        vmors=tuple(verticals),
        vmor_src={v: fid[t.src.key()] for v, t in verticals.items()},
        vmor_tgt={v: fid[t.tgt.key()] for v, t in verticals.items()},
        v_identity=v_identity,
        vcomp_vmor_table=vcomp_v,
        hmors=tuple(horizontals),
        hmor_src={h: fid[t.src.key()] for h, t in horizontals.items()},
        hmor_tgt={h: fid[t.tgt.key()] for h, t in horizontals.items()},
        h_identity=h_identity,
        hcomp_hmor_table=hcomp_h,
        cells=tuple(modifications),
        cell_frames=frames,
        vcomp_cell_table=vcomp_c,
        vid_cell=vid_cell,
        hcomp_cell_table=hcomp_c,
        hid_cell=hid_cell,
        assoc=assoc,
        lunit=lunit,
        runit=runit,
    )
    return HomDouble(table, fobj, verticals, horizontals, modifications,
                     {**fid, **vid_by_key, **hid_by_key, **mid_by_key})


def ps_sub(A: TableDouble, B: TableDouble, hom: HomDouble | None = None,
           max_candidates=DEFAULT_MAX_CANDIDATES) -> HomDouble:
    """Full sub double category of Hom(A, B) on the strict double functors."""
    hom = hom or hom_double(A, B, max_candidates)
    T = hom.table
    keep_objs = tuple(o for o in T.objects if is_strict_functor(hom.functors[o]))
    keep_o = set(keep_objs)
    keep_v = {v for v in T.vmors if T.vmor_src[v] in keep_o and T.vmor_tgt[v] in keep_o}
    keep_h = {h for h in T.hmors if T.hmor_src[h] in keep_o and T.hmor_tgt[h] in keep_o}
    keep_c = {c for c in T.cells
              if T.cell_frames[c].top in keep_h and T.cell_frames[c].bottom in keep_h}
    sub = TableDouble(
        name=f"Ps({A.name},{B.name})",
        objects=keep_objs,
        vmors=tuple(v for v in T.vmors if v in keep_v),
        vmor_src={v: T.vmor_src[v] for v in keep_v},
        vmor_tgt={v: T.vmor_tgt[v] for v in keep_v},
        v_identity={o: T.v_identity[o] for o in keep_objs},
        vcomp_vmor_table={k: x for k, x in T.vcomp_vmor_table.items()
                          if k[0] in keep_v and k[1] in keep_v},
        hmors=tuple(h for h in T.hmors if h in keep_h),
        hmor_src={h: T.hmor_src[h] for h in keep_h},
        hmor_tgt={h: T.hmor_tgt[h] for h in keep_h},
        h_identity={o: T.h_identity[o] for o in keep_objs},
        hcomp_hmor_table={k: x for k, x in T.hcomp_hmor_table.items()
                          if k[0] in keep_h and k[1] in keep_h},
        cells=tuple(c for c in T.cells if c in keep_c),
        cell_frames={c: T.cell_frames[c] for c in keep_c},
        vcomp_cell_table={k: x for k, x in T.vcomp_cell_table.items()
                          if k[0] in keep_c and k[1] in keep_c},
        vid_cell={h: T.vid_cell[h] for h in keep_h},
        hcomp_cell_table={k: x for k, x in T.hcomp_cell_table.items()
                          if k[0] in keep_c and k[1] in keep_c},
        hid_cell={v: T.hid_cell[v] for v in keep_v},
        assoc={k: x for k, x in T.assoc.items() if all(f in keep_h for f in k)},
        lunit={h: T.lunit[h] for h in keep_h},
        runit={h: T.runit[h] for h in keep_h},
    )
    return HomDouble(sub, {o: hom.functors[o] for o in keep_objs},
                     {v: hom.verticals[v] for v in keep_v},
                     {h: hom.horizontals[h] for h in keep_h},
                     {c: hom.modifications[c] for c in keep_c}, hom.ids)
