"""Multivariable calculus: two-variable functors and their transformation
kinds, currying against the hom double category, the skew-closed structure
maps, the comparison functor K into the cartesian product, and the transport
constructions realising the equivalence between one-variable functors off a
product and two-variable functors.

A two-variable functor is stored "flat" (partial functors plus the three
cell families); the curried form is an object of Hom(A, Hom(B, C)) and the
two encodings are mutually inverse on the nose, which the tests confirm by
exhaustive round trips.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Frame, TableDouble, product, terminal
from .homs import (
    HomDouble,
    HorizontalPseudoTransformation,
    Modification,
    PseudoDoubleFunctor,
    VerticalTransformation,
    check_functor,
    check_horizontal,
    check_modification,
    check_vertical,
    compose_functors,
    enumerate_functors,
    enumerate_vertical,
    hcomp_horizontal,
    hom_double,
    identity_functor,
    identity_horizontal,
    identity_vertical,
    whisker_post_functor,
)
from .report import Report, StructuralError


# ---------------------------------------------------------------------------
# coherence helpers over an arbitrary table interface
# ---------------------------------------------------------------------------

def eps_fold(C, hmors):
    """Left-nested composite of a nonempty composable sequence."""
    out = hmors[0]
    for f in hmors[1:]:
        out = C.hcomp_hmor(f, out)
    return out


def shift_iso(C, seq1, seq2):
    """(cell, inverse): eps(seq1 ++ seq2) -> eps(seq2) . eps(seq1),
    both sequences nonempty."""
    if len(seq2) == 1:
        e = eps_fold(C, seq1 + seq2)
        return (C.vid_of(e), C.vid_of(e))
    sub, sub_inv = shift_iso(C, seq1, seq2[:-1])
    f = seq2[-1]
    step = C.assoc_of(eps_fold(C, seq1), eps_fold(C, seq2[:-1]), f)
    fwd = C.vcomp_cells(C.hcomp_cell(C.vid_of(f), sub), step[1])
    bwd = C.vcomp_cells(step[0], C.hcomp_cell(C.vid_of(f), sub_inv))
    return (fwd, bwd)


def tree_flatten(tree):
    if isinstance(tree, tuple):
        return tree_flatten(tree[0]) + tree_flatten(tree[1])
    return [tree]


def tree_eval(C, tree):
    if isinstance(tree, tuple):
        return C.hcomp_hmor(tree_eval(C, tree[1]), tree_eval(C, tree[0]))
    return tree


def tree_norm_iso(C, tree):
    """(cell, inverse): eval(tree) -> left-nested composite of its leaves.
    A tree is a horizontal morphism (leaf) or a pair (first, second)."""
    if not isinstance(tree, tuple):
        e = tree
        return (C.vid_of(e), C.vid_of(e))
    t1, t2 = tree
    n1, n1i = tree_norm_iso(C, t1)
    n2, n2i = tree_norm_iso(C, t2)
    e1, e2 = tree_eval(C, t1), tree_eval(C, t2)
    s1, s2 = tree_flatten(t1), tree_flatten(t2)
    l1 = eps_fold(C, s1)
    sh, shi = shift_iso(C, s1, s2)
    fwd = C.vcomp_cells(C.hcomp_cell(n2, n1), shi)
    bwd = C.vcomp_cells(sh, C.hcomp_cell(n2i, n1i))
    return (fwd, bwd)


def rebracket_iso(C, tree_from, tree_to):
    """Canonical iso between two bracketings of the same leaf sequence."""
    if tree_flatten(tree_from) != tree_flatten(tree_to):
        raise StructuralError("rebracket: different leaf sequences")
    a, ai = tree_norm_iso(C, tree_from)
    b, bi = tree_norm_iso(C, tree_to)
    return (C.vcomp_cells(a, bi), C.vcomp_cells(b, ai))


# ---------------------------------------------------------------------------
# data
# ---------------------------------------------------------------------------

@dataclass
class TwoVarFunctor:
    """Pseudo double functor of two variables (A, B) -> C, stored flat."""
    domA: TableDouble
    domB: TableDouble
    cod: object
    partial_right: dict         # a -> functor F(a,-): B -> C
    partial_left: dict          # c -> functor F(-,c): A -> C
    cell_vh: dict               # (u, g) -> cell F(u,g)
    cell_hv: dict               # (f, v) -> cell F(f,v)
    cell_hh: dict               # (f, g) -> (cell, inverse) F(f,g)
    name: str = ""

    def obj(self, a, c):
        return self.partial_right[a].obj(c)

    def key(self):
        return ("2fun",
                tuple(sorted((a, F.key()) for a, F in self.partial_right.items())),
                tuple(sorted((c, F.key()) for c, F in self.partial_left.items())),
                tuple(sorted(self.cell_vh.items())),
                tuple(sorted(self.cell_hv.items())),
                tuple(sorted(self.cell_hh.items())))

    def vertical_at(self, u) -> VerticalTransformation:
        A, B = self.domA, self.domB
        a, b = A.vsrc(u), A.vtgt(u)
        return VerticalTransformation(
            src=self.partial_right[a], tgt=self.partial_right[b],
            at_obj={c: self.partial_left[c].vmor(u) for c in B.objects},
            at_hmor={g: self.cell_vh[(u, g)] for g in B.hmors},
        )

    def vertical_at2(self, v) -> VerticalTransformation:
        A, B = self.domA, self.domB
        c, d = B.vsrc(v), B.vtgt(v)
        return VerticalTransformation(
            src=self.partial_left[c], tgt=self.partial_left[d],
            at_obj={a: self.partial_right[a].vmor(v) for a in A.objects},
            at_hmor={f: self.cell_hv[(f, v)] for f in A.hmors},
        )

    def horizontal_at(self, f) -> HorizontalPseudoTransformation:
        A, B = self.domA, self.domB
        a, b = A.hsrc(f), A.htgt(f)
        return HorizontalPseudoTransformation(
            src=self.partial_right[a], tgt=self.partial_right[b],
            at_obj={c: self.partial_left[c].hmor(f) for c in B.objects},
            at_vmor={v: self.cell_hv[(f, v)] for v in B.vmors},
            at_hmor={g: self.cell_hh[(f, g)] for g in B.hmors},
        )

    def horizontal_at2(self, g) -> HorizontalPseudoTransformation:
        A, B = self.domA, self.domB
        c, d = B.hsrc(g), B.htgt(g)
        return HorizontalPseudoTransformation(
            src=self.partial_left[c], tgt=self.partial_left[d],
            at_obj={a: self.partial_right[a].hmor(g) for a in A.objects},
            at_vmor={u: self.cell_vh[(u, g)] for u in A.vmors},
            at_hmor={f: (self.cell_hh[(f, g)][1], self.cell_hh[(f, g)][0])
                     for f in A.hmors},
        )


@dataclass
class TwoVarVertical:
    src: TwoVarFunctor
    tgt: TwoVarFunctor
    at_pair: dict               # (a, c) -> vertical morphism
    cell_right: dict            # (a, g) -> cell: component of s(a,-) at g
    cell_left: dict             # (f, c) -> cell: component of s(-,c) at f
    name: str = ""

    def key(self):
        return ("2vt", tuple(sorted(self.at_pair.items())),
                tuple(sorted(self.cell_right.items())),
                tuple(sorted(self.cell_left.items())))

    def right_at(self, a) -> VerticalTransformation:
        B = self.src.domB
        return VerticalTransformation(
            src=self.src.partial_right[a], tgt=self.tgt.partial_right[a],
            at_obj={c: self.at_pair[(a, c)] for c in B.objects},
            at_hmor={g: self.cell_right[(a, g)] for g in B.hmors},
        )

    def left_at(self, c) -> VerticalTransformation:
        A = self.src.domA
        return VerticalTransformation(
            src=self.src.partial_left[c], tgt=self.tgt.partial_left[c],
            at_obj={a: self.at_pair[(a, c)] for a in A.objects},
            at_hmor={f: self.cell_left[(f, c)] for f in A.hmors},
        )


@dataclass
class TwoVarHorizontal:
    src: TwoVarFunctor
    tgt: TwoVarFunctor
    at_pair: dict               # (a, c) -> horizontal morphism
    cell_av: dict               # (a, v) -> cell
    cell_ag: dict               # (a, g) -> (cell, inverse)
    cell_uc: dict               # (u, c) -> cell
    cell_fc: dict               # (f, c) -> (cell, inverse)
    name: str = ""

    def key(self):
        return ("2ht", tuple(sorted(self.at_pair.items())),
                tuple(sorted(self.cell_av.items())),
                tuple(sorted(self.cell_ag.items())),
                tuple(sorted(self.cell_uc.items())),
                tuple(sorted(self.cell_fc.items())))

    def right_at(self, a) -> HorizontalPseudoTransformation:
        B = self.src.domB
        return HorizontalPseudoTransformation(
            src=self.src.partial_right[a], tgt=self.tgt.partial_right[a],
            at_obj={c: self.at_pair[(a, c)] for c in B.objects},
            at_vmor={v: self.cell_av[(a, v)] for v in B.vmors},
            at_hmor={g: self.cell_ag[(a, g)] for g in B.hmors},
        )

    def left_at(self, c) -> HorizontalPseudoTransformation:
        A = self.src.domA
        return HorizontalPseudoTransformation(
            src=self.src.partial_left[c], tgt=self.tgt.partial_left[c],
            at_obj={a: self.at_pair[(a, c)] for a in A.objects},
            at_vmor={u: self.cell_uc[(u, c)] for u in A.vmors},
            at_hmor={f: self.cell_fc[(f, c)] for f in A.hmors},
        )


@dataclass
class TwoVarModification:
    top: TwoVarHorizontal
    bottom: TwoVarHorizontal
    left: TwoVarVertical
    right: TwoVarVertical
    at_pair: dict               # (a, c) -> cell
    name: str = ""

    def key(self):
        return ("2mod", tuple(sorted(self.at_pair.items())))


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def check_twovar_functor(F: TwoVarFunctor) -> Report:
    A, B, C = F.domA, F.domB, F.cod
    rep = Report("check_twovar_functor")
    for a in A.objects:
        rep.merge(check_functor(F.partial_right[a]))
    for c in B.objects:
        rep.merge(check_functor(F.partial_left[c]))
    for a in A.objects:
        for c in B.objects:
            rep.require("2fun.obj.agree",
                        F.partial_right[a].obj(c) == F.partial_left[c].obj(a), (a, c))
    # the underlying data form a functor on the product of the verticals
    for u in A.vmors:
        for v in B.vmors:
            a, b = A.vsrc(u), A.vtgt(u)
            c, d = B.vsrc(v), B.vtgt(v)
            lhs = C.vcomp_vmor(F.partial_left[d].vmor(u), F.partial_right[a].vmor(v))
            rhs = C.vcomp_vmor(F.partial_right[b].vmor(v), F.partial_left[c].vmor(u))
            rep.require("2fun.square", lhs == rhs, (u, v))
    if rep.failures():
        return rep
    for u in A.vmors:
        r = check_vertical(F.vertical_at(u))
        rep.require("2fun.vert.first", r.ok, (u,), detail=r.summary())
    for v in B.vmors:
        r = check_vertical(F.vertical_at2(v))
        rep.require("2fun.vert.second", r.ok, (v,), detail=r.summary())
    for f in A.hmors:
        r = check_horizontal(F.horizontal_at(f))
        rep.require("2fun.horiz.first", r.ok, (f,), detail=r.summary())
    for g in B.hmors:
        r = check_horizontal(F.horizontal_at2(g))
        rep.require("2fun.horiz.second", r.ok, (g,), detail=r.summary())
    return rep


def check_twovar_vertical(s: TwoVarVertical) -> Report:
    F, G = s.src, s.tgt
    A, B = F.domA, F.domB
    rep = Report("check_twovar_vertical")
    for a in A.objects:
        r = check_vertical(s.right_at(a))
        rep.require("2vt.right", r.ok, (a,), detail=r.summary())
    for c in B.objects:
        r = check_vertical(s.left_at(c))
        rep.require("2vt.left", r.ok, (c,), detail=r.summary())
    if rep.failures():
        return rep
    # modification axioms in the other variable
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        m = Modification(top=F.horizontal_at(f), bottom=G.horizontal_at(f),
                         left=s.right_at(a), right=s.right_at(b),
                         at_obj={c: s.cell_left[(f, c)] for c in B.objects})
        r = check_modification(m)
        rep.require("2vt.mod.first", r.ok, (f,), detail=r.summary())
    for g in B.hmors:
        c, d = B.hsrc(g), B.htgt(g)
        m = Modification(top=F.horizontal_at2(g), bottom=G.horizontal_at2(g),
                         left=s.left_at(c), right=s.left_at(d),
                         at_obj={a: s.cell_right[(a, g)] for a in A.objects})
        r = check_modification(m)
        rep.require("2vt.mod.second", r.ok, (g,), detail=r.summary())
    return rep


def check_twovar_horizontal(t: TwoVarHorizontal) -> Report:
    F, G = t.src, t.tgt
    A, B = F.domA, F.domB
    rep = Report("check_twovar_horizontal")
    for a in A.objects:
        r = check_horizontal(t.right_at(a))
        rep.require("2ht.right", r.ok, (a,), detail=r.summary())
    for c in B.objects:
        r = check_horizontal(t.left_at(c))
        rep.require("2ht.left", r.ok, (c,), detail=r.summary())
    if rep.failures():
        return rep
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        m = Modification(top=t.right_at(a), bottom=t.right_at(b),
                         left=F.vertical_at(u), right=G.vertical_at(u),
                         at_obj={c: t.cell_uc[(u, c)] for c in B.objects})
        r = check_modification(m)
        rep.require("2ht.mod.u", r.ok, (u,), detail=r.summary())
    for v in B.vmors:
        c, d = B.vsrc(v), B.vtgt(v)
        m = Modification(top=t.left_at(c), bottom=t.left_at(d),
                         left=F.vertical_at2(v), right=G.vertical_at2(v),
                         at_obj={a: t.cell_av[(a, v)] for a in A.objects})
        r = check_modification(m)
        rep.require("2ht.mod.v", r.ok, (v,), detail=r.summary())
    # invertible modifications between composites in the remaining variable
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        top = hcomp_horizontal(t.right_at(b), F.horizontal_at(f))
        bot = hcomp_horizontal(G.horizontal_at(f), t.right_at(a))
        m = Modification(top=top, bottom=bot,
                         left=identity_vertical(F.partial_right[a]),
                         right=identity_vertical(G.partial_right[b]),
                         at_obj={c: t.cell_fc[(f, c)][0] for c in B.objects})
        r = check_modification(m)
        rep.require("2ht.mod.f", r.ok, (f,), detail=r.summary())
        minv = Modification(top=bot, bottom=top,
                            left=m.left, right=m.right,
                            at_obj={c: t.cell_fc[(f, c)][1] for c in B.objects})
        r = check_modification(minv)
        rep.require("2ht.mod.f.inv", r.ok, (f,), detail=r.summary())
    for g in B.hmors:
        c, d = B.hsrc(g), B.htgt(g)
        top = hcomp_horizontal(t.left_at(d), F.horizontal_at2(g))
        bot = hcomp_horizontal(G.horizontal_at2(g), t.left_at(c))
        m = Modification(top=top, bottom=bot,
                         left=identity_vertical(F.partial_left[c]),
                         right=identity_vertical(G.partial_left[d]),
                         at_obj={a: t.cell_ag[(a, g)][0] for a in A.objects})
        r = check_modification(m)
        rep.require("2ht.mod.g", r.ok, (g,), detail=r.summary())
    return rep


def check_twovar_modification(m: TwoVarModification) -> Report:
    F = m.top.src
    A, B = F.domA, F.domB
    rep = Report("check_twovar_modification")
    for a in A.objects:
        mm = Modification(top=m.top.right_at(a), bottom=m.bottom.right_at(a),
                          left=m.left.right_at(a), right=m.right.right_at(a),
                          at_obj={c: m.at_pair[(a, c)] for c in B.objects})
        r = check_modification(mm)
        rep.require("2mod.right", r.ok, (a,), detail=r.summary())
    for c in B.objects:
        mm = Modification(top=m.top.left_at(c), bottom=m.bottom.left_at(c),
                          left=m.left.left_at(c), right=m.right.left_at(c),
                          at_obj={a: m.at_pair[(a, c)] for a in A.objects})
        r = check_modification(mm)
        rep.require("2mod.left", r.ok, (c,), detail=r.summary())
    return rep


# ---------------------------------------------------------------------------
# curry / uncurry against a materialised hom
# ---------------------------------------------------------------------------

def curry_functor(F: TwoVarFunctor, hom: HomDouble) -> PseudoDoubleFunctor:
    """F: (A,B) -> C as a pseudo functor A -> Hom(B, C)."""
    A, B = F.domA, F.domB
    ids = hom.ids

    def fid(G):
        return ids[G.key()]

    def vid_(t):
        return ids[(fid(t.src), fid(t.tgt), t.key())]

    def hid_(t):
        return ids[(fid(t.src), fid(t.tgt), t.key())]

    def mid_(m):
        return ids[(hid_(m.top), hid_(m.bottom), vid_(m.left), vid_(m.right), m.key())]

    obj_map = {a: fid(F.partial_right[a]) for a in A.objects}
    vmor_map = {u: vid_(F.vertical_at(u)) for u in A.vmors}
    hmor_map = {f: hid_(F.horizontal_at(f)) for f in A.hmors}
    cell_map = {}
    for cc in A.cells:
        fr = A.frame(cc)
        m = Modification(top=F.horizontal_at(fr.top), bottom=F.horizontal_at(fr.bottom),
                         left=F.vertical_at(fr.left), right=F.vertical_at(fr.right),
                         at_obj={c: F.partial_left[c].cell(cc) for c in B.objects})
        cell_map[cc] = mid_(m)
    phi0 = {}
    for a in A.objects:
        m = Modification(top=identity_horizontal(F.partial_right[a]),
                         bottom=F.horizontal_at(A.h_id(a)),
                         left=identity_vertical(F.partial_right[a]),
                         right=identity_vertical(F.partial_right[a]),
                         at_obj={c: F.partial_left[c].phi0[a] for c in B.objects})
        phi0[a] = mid_(m)
    phi2 = {}
    for (g, f) in A.hcomp_hmor_table:
        m = Modification(top=hcomp_horizontal(F.horizontal_at(g), F.horizontal_at(f)),
                         bottom=F.horizontal_at(A.hcomp_hmor(g, f)),
                         left=identity_vertical(F.partial_right[A.hsrc(f)]),
                         right=identity_vertical(F.partial_right[A.htgt(g)]),
                         at_obj={c: F.partial_left[c].phi2[(f, g)] for c in B.objects})
        phi2[(f, g)] = mid_(m)
    return PseudoDoubleFunctor(A, hom.table, obj_map, vmor_map, hmor_map,
                               cell_map, phi0, phi2, name=f"curry({F.name})")


def uncurry_functor(P: PseudoDoubleFunctor, hom: HomDouble, B: TableDouble,
                    C: TableDouble) -> TwoVarFunctor:
    """Inverse of curry_functor: read the flat two-variable data back."""
    A = P.dom
    partial_right = {a: hom.functors[P.obj(a)] for a in A.objects}
    verts = {u: hom.verticals[P.vmor(u)] for u in A.vmors}
    horiz = {f: hom.horizontals[P.hmor(f)] for f in A.hmors}
    mods = {cc: hom.modifications[P.cell(cc)] for cc in A.cells}
    partial_left = {}
    for c in B.objects:
        phi0 = {a: hom.modifications[P.phi0[a]].at_obj[c] for a in A.objects}
        phi2 = {k: hom.modifications[P.phi2[k]].at_obj[c] for k in P.phi2}
        partial_left[c] = PseudoDoubleFunctor(
            dom=A, cod=C,
            obj_map={a: partial_right[a].obj(c) for a in A.objects},
            vmor_map={u: verts[u].at_obj[c] for u in A.vmors},
            hmor_map={f: horiz[f].at_obj[c] for f in A.hmors},
            cell_map={cc: mods[cc].at_obj[c] for cc in A.cells},
            phi0=phi0, phi2=phi2,
        )
    return TwoVarFunctor(
        domA=A, domB=B, cod=C,
        partial_right=partial_right,
        partial_left=partial_left,
        cell_vh={(u, g): verts[u].at_hmor[g] for u in A.vmors for g in B.hmors},
        cell_hv={(f, v): horiz[f].at_vmor[v] for f in A.hmors for v in B.vmors},
        cell_hh={(f, g): horiz[f].at_hmor[g] for f in A.hmors for g in B.hmors},
        name=f"uncurry({P.name})",
    )


def curry_vertical(s: TwoVarVertical, hom: HomDouble,
                   Pf: PseudoDoubleFunctor, Pg: PseudoDoubleFunctor) -> VerticalTransformation:
    A, B = s.src.domA, s.src.domB
    ids = hom.ids

    def fid(G):
        return ids[G.key()]

    def tid(t):
        return ids[(fid(t.src), fid(t.tgt), t.key())]

    def mid_(m):
        return ids[(tid(m.top), tid(m.bottom), tid(m.left), tid(m.right), m.key())]

    at_hmor = {}
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        m = Modification(top=s.src.horizontal_at(f), bottom=s.tgt.horizontal_at(f),
                         left=s.right_at(a), right=s.right_at(b),
                         at_obj={c: s.cell_left[(f, c)] for c in B.objects})
        at_hmor[f] = mid_(m)
    return VerticalTransformation(
        src=Pf, tgt=Pg,
        at_obj={a: tid(s.right_at(a)) for a in A.objects},
        at_hmor=at_hmor,
    )


def uncurry_vertical(t: VerticalTransformation, hom: HomDouble,
                     F2: TwoVarFunctor, G2: TwoVarFunctor) -> TwoVarVertical:
    A, B = F2.domA, F2.domB
    comps = {a: hom.verticals[t.at_obj[a]] for a in A.objects}
    mods = {f: hom.modifications[t.at_hmor[f]] for f in A.hmors}
    return TwoVarVertical(
        src=F2, tgt=G2,
        at_pair={(a, c): comps[a].at_obj[c] for a in A.objects for c in B.objects},
        cell_right={(a, g): comps[a].at_hmor[g] for a in A.objects for g in B.hmors},
        cell_left={(f, c): mods[f].at_obj[c] for f in A.hmors for c in B.objects},
    )


def curry_horizontal(t: TwoVarHorizontal, hom: HomDouble, Pf, Pg) -> HorizontalPseudoTransformation:
    A, B = t.src.domA, t.src.domB
    ids = hom.ids

    def fid(G):
        return ids[G.key()]

    def tid(x):
        return ids[(fid(x.src), fid(x.tgt), x.key())]

    def mid_(m):
        return ids[(tid(m.top), tid(m.bottom), tid(m.left), tid(m.right), m.key())]

    at_vmor = {}
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        m = Modification(top=t.right_at(a), bottom=t.right_at(b),
                         left=t.src.vertical_at(u), right=t.tgt.vertical_at(u),
                         at_obj={c: t.cell_uc[(u, c)] for c in B.objects})
        at_vmor[u] = mid_(m)
    at_hmor = {}
    for f in A.hmors:
        a, b = A.hsrc(f), A.htgt(f)
        top = hcomp_horizontal(t.right_at(b), t.src.horizontal_at(f))
        bot = hcomp_horizontal(t.tgt.horizontal_at(f), t.right_at(a))
        m = Modification(top=top, bottom=bot,
                         left=identity_vertical(t.src.partial_right[a]),
                         right=identity_vertical(t.tgt.partial_right[b]),
                         at_obj={c: t.cell_fc[(f, c)][0] for c in B.objects})
        minv = Modification(top=bot, bottom=top, left=m.left, right=m.right,
                            at_obj={c: t.cell_fc[(f, c)][1] for c in B.objects})
        at_hmor[f] = (mid_(m), mid_(minv))
    return HorizontalPseudoTransformation(
        src=Pf, tgt=Pg,
        at_obj={a: tid(t.right_at(a)) for a in A.objects},
        at_vmor=at_vmor, at_hmor=at_hmor,
    )


def uncurry_horizontal(t: HorizontalPseudoTransformation, hom: HomDouble,
                       F2: TwoVarFunctor, G2: TwoVarFunctor) -> TwoVarHorizontal:
    A, B = F2.domA, F2.domB
    comps = {a: hom.horizontals[t.at_obj[a]] for a in A.objects}
    umods = {u: hom.modifications[t.at_vmor[u]] for u in A.vmors}
    fmods = {f: (hom.modifications[t.at_hmor[f][0]], hom.modifications[t.at_hmor[f][1]])
             for f in A.hmors}
    return TwoVarHorizontal(
        src=F2, tgt=G2,
        at_pair={(a, c): comps[a].at_obj[c] for a in A.objects for c in B.objects},
        cell_av={(a, v): comps[a].at_vmor[v] for a in A.objects for v in B.vmors},
        cell_ag={(a, g): comps[a].at_hmor[g] for a in A.objects for g in B.hmors},
        cell_uc={(u, c): umods[u].at_obj[c] for u in A.vmors for c in B.objects},
        cell_fc={(f, c): (fmods[f][0].at_obj[c], fmods[f][1].at_obj[c])
                 for f in A.hmors for c in B.objects},
    )


def curry_modification(m: TwoVarModification, hom: HomDouble, top, bottom,
                       left, right) -> Modification:
    A, B = m.top.src.domA, m.top.src.domB
    ids = hom.ids

    def fid(G):
        return ids[G.key()]

    def tid(x):
        return ids[(fid(x.src), fid(x.tgt), x.key())]

    def mid_(mm):
        return ids[(tid(mm.top), tid(mm.bottom), tid(mm.left), tid(mm.right), mm.key())]

    at_obj = {}
    for a in A.objects:
        mm = Modification(top=m.top.right_at(a), bottom=m.bottom.right_at(a),
                          left=m.left.right_at(a), right=m.right.right_at(a),
                          at_obj={c: m.at_pair[(a, c)] for c in B.objects})
        at_obj[a] = mid_(mm)
    return Modification(top=top, bottom=bottom, left=left, right=right, at_obj=at_obj)


def uncurry_modification(mm: Modification, hom: HomDouble, top2, bottom2,
                         left2, right2) -> TwoVarModification:
    A, B = top2.src.domA, top2.src.domB
    comps = {a: hom.modifications[mm.at_obj[a]] for a in A.objects}
    return TwoVarModification(
        top=top2, bottom=bottom2, left=left2, right=right2,
        at_pair={(a, c): comps[a].at_obj[c] for a in A.objects for c in B.objects},
    )


def enumerate_twovar_functors(A: TableDouble, B: TableDouble, C: TableDouble,
                              hom: HomDouble | None = None,
                              max_candidates: int | None = None):
    """All two-variable functors (A, B) -> C, via the curried encoding."""
    kw = {} if max_candidates is None else {"max_candidates": max_candidates}
    hom = hom or hom_double(B, C, **kw)
    out = []
    for P in enumerate_functors(A, hom.table, **kw):
        F = uncurry_functor(P, hom, B, C)
        F.name = f"F2_{len(out)}"
        out.append(F)
    return out


# ---------------------------------------------------------------------------
# multihom
# ---------------------------------------------------------------------------

def multihom(doms: list, B: TableDouble, arity_cap: int = 3):
    """Iterated hom: n=0 yields the objects of the codomain, n=1 the hom
    double category, n>=2 peels the last variable recursively."""
    if len(doms) > arity_cap:
        raise StructuralError(f"multihom arity {len(doms)} exceeds cap {arity_cap}")
    if not doms:
        return list(B.objects)
    if len(doms) == 1:
        return hom_double(doms[0], B)
    inner = hom_double(doms[-1], B)
    return multihom(doms[:-1], inner.table, arity_cap)


# ---------------------------------------------------------------------------
# skew structure
# ---------------------------------------------------------------------------

def skew_i(A: TableDouble, hom_IA: HomDouble, I: TableDouble) -> PseudoDoubleFunctor:
    """Evaluation Hom(I, A) -> A at the unique object of I; strict."""
    pt = I.objects[0]
    T = hom_IA.table
    return PseudoDoubleFunctor(
        dom=T, cod=A,
        obj_map={o: hom_IA.functors[o].obj(pt) for o in T.objects},
        vmor_map={v: hom_IA.verticals[v].at_obj[pt] for v in T.vmors},
        hmor_map={h: hom_IA.horizontals[h].at_obj[pt] for h in T.hmors},
        cell_map={m: hom_IA.modifications[m].at_obj[pt] for m in T.cells},
        phi0={o: A.vid_of(A.h_id(hom_IA.functors[o].obj(pt))) for o in T.objects},
        phi2={(f, g): A.vid_of(A.hcomp_hmor(hom_IA.horizontals[g].at_obj[pt],
                                            hom_IA.horizontals[f].at_obj[pt]))
              for (g, f) in T.hcomp_hmor_table},
        name=f"i_{A.name}",
    )


def skew_j(A: TableDouble, hom_AA: HomDouble, I: TableDouble) -> PseudoDoubleFunctor:
    """I -> Hom(A, A) picking out the identity pseudo double functor; strict."""
    pt = I.objects[0]
    T = hom_AA.table
    target = hom_AA.ids[identity_functor(A).key()]
    idv = T.v_identity[target]
    idh = T.h_identity[target]
    return PseudoDoubleFunctor(
        dom=I, cod=T,
        obj_map={pt: target},
        vmor_map={I.v_identity[pt]: idv},
        hmor_map={I.h_identity[pt]: idh},
        cell_map={I.cells[0]: T.vid_of(idh)},
        phi0={pt: T.vid_of(idh)},
        phi2={(I.h_identity[pt], I.h_identity[pt]): T.vid_of(idh)},
        name=f"j_{A.name}",
    )


def skew_L(A: TableDouble, B: TableDouble, C: TableDouble,
           hom_BC: HomDouble | None = None, hom_AB: HomDouble | None = None,
           hom_AC: HomDouble | None = None) -> TwoVarFunctor:
    """Horizontal composition (Hom(B,C), Hom(A,B)) -> Hom(A,C), strict in
    the first variable."""
    hom_BC = hom_BC or hom_double(B, C)
    hom_AB = hom_AB or hom_double(A, B)
    hom_AC = hom_AC or hom_double(A, C)
    TBC, TAB, TAC = hom_BC.table, hom_AB.table, hom_AC.table
    ids = hom_AC.ids

    def fid(G):
        return ids[G.key()]

    def tid(x):
        return ids[(fid(x.src), fid(x.tgt), x.key())]

    def mid_(mm):
        return ids[(tid(mm.top), tid(mm.bottom), tid(mm.left), tid(mm.right), mm.key())]

    # second-variable partials: post-composition with a fixed G (pseudo)
    partial_right = {}
    for o in TBC.objects:
        G = hom_BC.functors[o]
        phi0 = {}
        phi2 = {}
        for p in TAB.objects:
            F = hom_AB.functors[p]
            m = Modification(top=identity_horizontal(compose_functors(G, F)),
                             bottom=whisker_post_functor(G, identity_horizontal(F)),
                             left=identity_vertical(compose_functors(G, F)),
                             right=identity_vertical(compose_functors(G, F)),
                             at_obj={a: G.phi0[F.obj(a)] for a in A.objects})
            phi0[p] = mid_(m)
        for (h2, h1) in TAB.hcomp_hmor_table:
            t1 = hom_AB.horizontals[h1]
            t2 = hom_AB.horizontals[h2]
            wt1 = whisker_post_functor(G, t1)
            wt2 = whisker_post_functor(G, t2)
            m = Modification(
                top=hcomp_horizontal(wt2, wt1),
                bottom=whisker_post_functor(G, hcomp_horizontal(t2, t1)),
                left=identity_vertical(wt1.src),
                right=identity_vertical(wt2.tgt),
                at_obj={a: G.phi2[(t1.at_obj[a], t2.at_obj[a])] for a in A.objects})
            phi2[(h1, h2)] = mid_(m)
        partial_right[o] = PseudoDoubleFunctor(
            dom=TAB, cod=TAC,
            obj_map={p: fid(compose_functors(G, hom_AB.functors[p])) for p in TAB.objects},
            vmor_map={v: tid(whisker_post_functor(G, hom_AB.verticals[v])) for v in TAB.vmors},
            hmor_map={h: tid(whisker_post_functor(G, hom_AB.horizontals[h])) for h in TAB.hmors},
            cell_map={mmm: mid_(whisker_post_functor(G, hom_AB.modifications[mmm]))
                      for mmm in TAB.cells},
            phi0=phi0, phi2=phi2, name=f"L({o},-)")

    # first-variable partials: pre-composition with a fixed F (strict)
    from .homs import whisker_pre_functor
    partial_left = {}
    for p in TAB.objects:
        F = hom_AB.functors[p]
        obj_map = {o: fid(compose_functors(hom_BC.functors[o], F)) for o in TBC.objects}
        partial_left[p] = PseudoDoubleFunctor(
            dom=TBC, cod=TAC,
            obj_map=obj_map,
            vmor_map={v: tid(whisker_pre_functor(hom_BC.verticals[v], F)) for v in TBC.vmors},
            hmor_map={h: tid(whisker_pre_functor(hom_BC.horizontals[h], F)) for h in TBC.hmors},
            cell_map={mmm: mid_(whisker_pre_functor(hom_BC.modifications[mmm], F))
                      for mmm in TBC.cells},
            phi0={o: TAC.vid_of(TAC.h_id(obj_map[o])) for o in TBC.objects},
            phi2={(h1, h2): TAC.vid_of(TAC.hcomp_hmor(
                tid(whisker_pre_functor(hom_BC.horizontals[h2], F)),
                tid(whisker_pre_functor(hom_BC.horizontals[h1], F))))
                for (h2, h1) in TBC.hcomp_hmor_table},
            name=f"L(-,{p})")

    # cell families
    from .homs import interchanger
    cell_vh = {}
    for tau in TBC.vmors:
        tv = hom_BC.verticals[tau]
        for th in TAB.hmors:
            t = hom_AB.horizontals[th]
            m = Modification(
                top=whisker_post_functor(tv.src, t),
                bottom=whisker_post_functor(tv.tgt, t),
                left=whisker_pre_functor(tv, t.src),
                right=whisker_pre_functor(tv, t.tgt),
                at_obj={a: tv.at_hmor[t.at_obj[a]] for a in A.objects})
            cell_vh[(tau, th)] = mid_(m)
    cell_hv = {}
    for bh in TBC.hmors:
        bt = hom_BC.horizontals[bh]
        for sv in TAB.vmors:
            s = hom_AB.verticals[sv]
            m = Modification(
                top=whisker_pre_functor(bt, s.src),
                bottom=whisker_pre_functor(bt, s.tgt),
                left=whisker_post_functor(bt.src, s),
                right=whisker_post_functor(bt.tgt, s),
                at_obj={a: bt.at_vmor[s.at_obj[a]] for a in A.objects})
            cell_hv[(bh, sv)] = mid_(m)
    cell_hh = {}
    for bh in TBC.hmors:
        bt = hom_BC.horizontals[bh]
        for th in TAB.hmors:
            t = hom_AB.horizontals[th]
            m = interchanger(t, bt)
            minv = Modification(top=m.bottom, bottom=m.top, left=m.right, right=m.left,
                                at_obj={a: bt.at_hmor[t.at_obj[a]][1] for a in A.objects})
            cell_hh[(bh, th)] = (mid_(m), mid_(minv))
    return TwoVarFunctor(
        domA=TBC, domB=TAB, cod=TAC,
        partial_right=partial_right, partial_left=partial_left,
        cell_vh=cell_vh, cell_hv=cell_hv, cell_hh=cell_hh,
        name=f"L({A.name},{B.name},{C.name})",
    )


def skew_s(F: TwoVarFunctor) -> TwoVarFunctor:
    """Swap the two variables; the (vi)-cells are replaced by their inverses."""
    return TwoVarFunctor(
        domA=F.domB, domB=F.domA, cod=F.cod,
        partial_right={c: F.partial_left[c] for c in F.domB.objects},
        partial_left={a: F.partial_right[a] for a in F.domA.objects},
        cell_vh={(v, f): F.cell_hv[(f, v)] for f in F.domA.hmors for v in F.domB.vmors},
        cell_hv={(g, u): F.cell_vh[(u, g)] for u in F.domA.vmors for g in F.domB.hmors},
        cell_hh={(g, f): (F.cell_hh[(f, g)][1], F.cell_hh[(f, g)][0])
                 for f in F.domA.hmors for g in F.domB.hmors},
        name=f"s({F.name})",
    )


# ---------------------------------------------------------------------------
# the comparison functor K and the transports
# ---------------------------------------------------------------------------

def _pair(x, y):
    return (x, y)


def cubical_K(A: TableDouble, B: TableDouble) -> TwoVarFunctor:
    """K: (A, B) -> A x B with identity underlying functor; the cell data
    are identities padded by unitors."""
    P = product(A, B)

    def right_partial(a):
        phi0 = {b: P.vid_of(P.h_id((a, b))) for b in B.objects}
        phi2 = {}
        for (g2, g1) in B.hcomp_hmor_table:
            comp = B.hcomp_hmor(g2, g1)
            phi2[(g1, g2)] = (A.lunit_of(A.h_id(a))[0], B.vid_of(comp))
        return PseudoDoubleFunctor(
            dom=B, cod=P,
            obj_map={b: (a, b) for b in B.objects},
            vmor_map={v: (A.v_id(a), v) for v in B.vmors},
            hmor_map={g: (A.h_id(a), g) for g in B.hmors},
            cell_map={cc: (A.vid_of(A.h_id(a)), cc) for cc in B.cells},
            phi0=phi0, phi2=phi2, name=f"K({a},-)")

    def left_partial(b):
        phi0 = {a: P.vid_of(P.h_id((a, b))) for a in A.objects}
        phi2 = {}
        for (f2, f1) in A.hcomp_hmor_table:
            comp = A.hcomp_hmor(f2, f1)
            phi2[(f1, f2)] = (A.vid_of(comp), B.lunit_of(B.h_id(b))[0])
        return PseudoDoubleFunctor(
            dom=A, cod=P,
            obj_map={a: (a, b) for a in A.objects},
            vmor_map={u: (u, B.v_id(b)) for u in A.vmors},
            hmor_map={f: (f, B.h_id(b)) for f in A.hmors},
            cell_map={cc: (cc, B.vid_of(B.h_id(b))) for cc in A.cells},
            phi0=phi0, phi2=phi2, name=f"K(-,{b})")

    cell_vh = {(u, g): (A.hid_of(u), B.vid_of(g)) for u in A.vmors for g in B.hmors}
    cell_hv = {(f, v): (A.vid_of(f), B.hid_of(v)) for f in A.hmors for v in B.vmors}
    cell_hh = {}
    for f in A.hmors:
        fwd1 = A.vcomp_cells(A.runit_of(f)[0], A.lunit_of(f)[1])
        bwd1 = A.vcomp_cells(A.lunit_of(f)[0], A.runit_of(f)[1])
        for g in B.hmors:
            fwd2 = B.vcomp_cells(B.lunit_of(g)[0], B.runit_of(g)[1])
            bwd2 = B.vcomp_cells(B.runit_of(g)[0], B.lunit_of(g)[1])
            cell_hh[(f, g)] = ((fwd1, fwd2), (bwd1, bwd2))
    return TwoVarFunctor(
        domA=A, domB=B, cod=P,
        partial_right={a: right_partial(a) for a in A.objects},
        partial_left={b: left_partial(b) for b in B.objects},
        cell_vh=cell_vh, cell_hv=cell_hv, cell_hh=cell_hh,
        name=f"K({A.name},{B.name})",
    )


def cubical_K_list(tables: list):
    """n = 0: the unique object of the terminal; n = 1: the identity; n = 2:
    the explicit comparison functor.  Larger n is reachable only through the
    recursive multihom encoding."""
    if not tables:
        return terminal().objects[0]
    if len(tables) == 1:
        return identity_functor(tables[0])
    if len(tables) == 2:
        return cubical_K(tables[0], tables[1])
    raise StructuralError("cubical K is materialised for n <= 2; higher arities "
                          "live in the recursive multihom encoding")


def restrict_along_K(H: PseudoDoubleFunctor, A: TableDouble, B: TableDouble,
                     K: TwoVarFunctor | None = None) -> TwoVarFunctor:
    """H . K as a two-variable functor, for H: A x B -> C."""
    K = K or cubical_K(A, B)
    partial_right = {a: compose_functors(H, K.partial_right[a]) for a in A.objects}
    partial_left = {b: compose_functors(H, K.partial_left[b]) for b in B.objects}
    cell_vh = {}
    for u in A.vmors:
        wt = whisker_post_functor(H, K.vertical_at(u))
        for g in B.hmors:
            cell_vh[(u, g)] = wt.at_hmor[g]
    cell_hv = {}
    cell_hh = {}
    for f in A.hmors:
        wt = whisker_post_functor(H, K.horizontal_at(f))
        for v in B.vmors:
            cell_hv[(f, v)] = wt.at_vmor[v]
        for g in B.hmors:
            cell_hh[(f, g)] = wt.at_hmor[g]
    return TwoVarFunctor(
        domA=A, domB=B, cod=H.cod,
        partial_right=partial_right, partial_left=partial_left,
        cell_vh=cell_vh, cell_hv=cell_hv, cell_hh=cell_hh,
        name=f"{H.name}.K",
    )


def transport_product(F: TwoVarFunctor) -> PseudoDoubleFunctor:
    """The one-variable functor on the product through which F factors up to
    an invertible two-variable vertical transformation."""
    A, B, C = F.domA, F.domB, F.cod
    P = product(A, B)

    def fobj(ac):
        return F.obj(*ac)

    def fvmor(uv):
        u, v = uv
        return C.vcomp_vmor(F.partial_left[B.vtgt(v)].vmor(u),
                            F.partial_right[A.vsrc(u)].vmor(v))

    def fhmor(fg):
        f, g = fg
        return C.hcomp_hmor(F.partial_right[A.htgt(f)].hmor(g),
                            F.partial_left[B.hsrc(g)].hmor(f))

    cell_map = {}
    for (al, be) in P.cells:
        fra, frb = A.frame(al), B.frame(be)
        c = B.hsrc(frb.top)
        row1 = C.hcomp_cell(F.cell_vh[(fra.right, frb.top)],
                            F.partial_left[c].cell(al))
        row2 = C.hcomp_cell(F.partial_right[A.htgt(fra.bottom)].cell(be),
                            F.cell_hv[(fra.bottom, frb.left)])
        cell_map[(al, be)] = C.vcomp_cell(row2, row1)

    phi0 = {}
    for (a, c) in P.objects:
        one = C.h_id(F.obj(a, c))
        phi0[(a, c)] = C.vcomp_cells(
            C.lunit_of(one)[1],
            C.hcomp_cell(F.partial_right[a].phi0[c], F.partial_left[c].phi0[a]),
        )
    phi2 = {}
    for ((h, k), (f, g)) in P.hcomp_hmor_table:
        a, c = A.hsrc(f), B.hsrc(g)
        b, d = A.htgt(f), B.htgt(g)
        x = A.htgt(h)
        Ffc = F.partial_left[c].hmor(f)
        Fbg = F.partial_right[b].hmor(g)
        Fhd = F.partial_left[d].hmor(h)
        Fxk = F.partial_right[x].hmor(k)
        Fxg = F.partial_right[x].hmor(g)
        Fhc = F.partial_left[c].hmor(h)
        hf = A.hcomp_hmor(h, f)
        Fhfc = F.partial_left[c].hmor(hf)
        # ((Fxk . Fhd) . (Fbg . Ffc))  ~>  Fxk . ((Fhd . Fbg) . Ffc)
        r1 = rebracket_iso(C, ((Ffc, Fbg), (Fhd, Fxk)),
                           ((Ffc, (Fbg, Fhd)), Fxk))[0]
        # interchange F(h,g) in the middle, whiskered on both sides
        swap = C.hcomp_cell(C.vid_of(Fxk),
                            C.hcomp_cell(F.cell_hh[(h, g)][0], C.vid_of(Ffc)))
        # Fxk . ((Fxg . Fhc) . Ffc)  ~>  Fxk . (Fxg . (Fhc . Ffc))
        r2 = rebracket_iso(C, ((Ffc, (Fhc, Fxg)), Fxk),
                           (((Ffc, Fhc), Fxg), Fxk))[0]
        paste_l = C.hcomp_cell(C.vid_of(Fxk),
                               C.hcomp_cell(C.vid_of(Fxg),
                                            F.partial_left[c].phi2[(f, h)]))
        # Fxk . (Fxg . Fhfc)  ~>  (Fxk . Fxg) . Fhfc
        r3 = rebracket_iso(C, ((Fhfc, Fxg), Fxk), (Fhfc, (Fxg, Fxk)))[0]
        paste_r = C.hcomp_cell(F.partial_right[x].phi2[(g, k)], C.vid_of(Fhfc))
        phi2[((f, g), (h, k))] = C.vcomp_cells(r1, swap, r2, paste_l, r3, paste_r)

    return PseudoDoubleFunctor(
        dom=P, cod=C,
        obj_map={ac: fobj(ac) for ac in P.objects},
        vmor_map={uv: fvmor(uv) for uv in P.vmors},
        hmor_map={fg: fhmor(fg) for fg in P.hmors},
        cell_map=cell_map, phi0=phi0, phi2=phi2,
        name=f"prod({F.name})",
    )


def transport_sigma(F: TwoVarFunctor, Fbar: PseudoDoubleFunctor | None = None) -> TwoVarVertical:
    """The invertible two-variable vertical transformation F -> Fbar . K
    whose underlying natural transformation is the identity."""
    A, B, C = F.domA, F.domB, F.cod
    Fbar = Fbar or transport_product(F)
    FK = restrict_along_K(Fbar, A, B)
    at_pair = {(a, c): C.v_id(F.obj(a, c)) for a in A.objects for c in B.objects}
    cell_right = {}
    for a in A.objects:
        for g in B.hmors:
            c = B.hsrc(g)
            Fag = F.partial_right[a].hmor(g)
            cell_right[(a, g)] = C.vcomp_cells(
                C.runit_of(Fag)[1],
                C.hcomp_cell(C.vid_of(Fag), F.partial_left[c].phi0[a]),
            )
    cell_left = {}
    for f in A.hmors:
        b = A.htgt(f)
        for c in B.objects:
            Ffc = F.partial_left[c].hmor(f)
            cell_left[(f, c)] = C.vcomp_cells(
                C.lunit_of(Ffc)[1],
                C.hcomp_cell(F.partial_right[b].phi0[c], C.vid_of(Ffc)),
            )
    return TwoVarVertical(src=F, tgt=FK, at_pair=at_pair,
                          cell_right=cell_right, cell_left=cell_left,
                          name=f"sigma({F.name})")


def transport_faithful(s: TwoVarVertical, H: PseudoDoubleFunctor,
                       H2: PseudoDoubleFunctor) -> VerticalTransformation:
    """The unique vertical transformation H -> H2 restricting along K to s,
    for s: HK -> H2K."""
    A, B = s.src.domA, s.src.domB
    C = H.cod
    P = H.dom

    def j_cells(G, f, g):
        a, b = A.hsrc(f), A.htgt(f)
        c, d = B.hsrc(g), B.htgt(g)
        pair_cell = (A.lunit_of(f)[0], B.runit_of(g)[0])
        fwd = C.vcomp_cells(C.inv(G.cell(pair_cell)),
                            C.inv(G.phi2[((f, B.h_id(c)), (A.h_id(b), g))]))
        bwd = C.vcomp_cells(G.phi2[((f, B.h_id(c)), (A.h_id(b), g))],
                            G.cell(pair_cell))
        return fwd, bwd

    at_hmor = {}
    for (f, g) in P.hmors:
        b = A.htgt(f)
        c = B.hsrc(g)
        jf, _ = j_cells(H, f, g)
        _, jg = j_cells(H2, f, g)
        mid = C.hcomp_cell(s.cell_right[(b, g)], s.cell_left[(f, c)])
        at_hmor[(f, g)] = C.vcomp_cells(jf, mid, jg)
    return VerticalTransformation(
        src=H, tgt=H2,
        at_obj={(a, c): s.at_pair[(a, c)] for (a, c) in P.objects},
        at_hmor=at_hmor,
        name="faithful",
    )


def verify_equivalence(A: TableDouble, B: TableDouble, C: TableDouble,
                       hom_BC: HomDouble | None = None,
                       max_candidates: int | None = None) -> Report:
    """Restriction along K from Hom(A x B, C) to the two-variable functors is
    essentially surjective (via transport_product and transport_sigma) and
    fully faithful on vertical transformations (via transport_faithful)."""
    kw = {} if max_candidates is None else {"max_candidates": max_candidates}
    rep = Report(f"equivalence({A.name},{B.name};{C.name})")
    P = product(A, B)
    two = enumerate_twovar_functors(A, B, C, hom_BC, **kw)
    rep.params["twovar_functors"] = len(two)

    # essential surjectivity
    for F in two:
        r = check_twovar_functor(F)
        rep.require("eq.twovar.valid", r.ok, (F.name,), detail=r.summary())
        Fbar = transport_product(F)
        r = check_functor(Fbar)
        rep.require("eq.transport.functor", r.ok, (F.name,), detail=r.summary())
        sg = transport_sigma(F, Fbar)
        r = check_twovar_vertical(sg)
        rep.require("eq.transport.sigma", r.ok, (F.name,), detail=r.summary())
        inv_ok = all(C.inverse_of(c) is not None for c in sg.cell_right.values()) and \
            all(C.inverse_of(c) is not None for c in sg.cell_left.values())
        rep.require("eq.transport.sigma.invertible", inv_ok, (F.name,))

    # full faithfulness on vertical transformations
    ones = enumerate_functors(P, C, **kw)
    rep.params["product_functors"] = len(ones)
    for H in ones:
        for H2 in ones:
            HK = restrict_along_K(H, A, B)
            H2K = restrict_along_K(H2, A, B)
            verts = enumerate_vertical(H, H2)
            twoverts = _enumerate_twovar_verticals(HK, H2K)
            rep.add("eq.ff.count", len(verts) == len(twoverts),
                    (H.name, H2.name), detail=f"{len(verts)} vs {len(twoverts)}")
            restricted = []
            for t in verts:
                tK = _restrict_vertical_along_K(t, HK, H2K, A, B)
                r = check_twovar_vertical(tK)
                rep.require("eq.restrict.valid", r.ok, (H.name, H2.name))
                back = transport_faithful(tK, H, H2)
                rep.require("eq.ff.roundtrip", back.key() == t.key(), (H.name, H2.name))
                restricted.append(tK.key())
            rep.require("eq.ff.injective", len(set(restricted)) == len(restricted),
                        (H.name, H2.name))
            for s in twoverts:
                t = transport_faithful(s, H, H2)
                r = check_vertical(t)
                rep.require("eq.full.valid", r.ok, (H.name, H2.name), detail=r.summary())
                again = _restrict_vertical_along_K(t, HK, H2K, A, B)
                rep.require("eq.full.roundtrip", again.key() == s.key(),
                            (H.name, H2.name))
    return rep


def _restrict_vertical_along_K(t: VerticalTransformation, FK: TwoVarFunctor,
                               GK: TwoVarFunctor, A, B) -> TwoVarVertical:
    return TwoVarVertical(
        src=FK, tgt=GK,
        at_pair={(a, c): t.at_obj[(a, c)] for a in A.objects for c in B.objects},
        cell_right={(a, g): t.at_hmor[(A.h_id(a), g)] for a in A.objects for g in B.hmors},
        cell_left={(f, c): t.at_hmor[(f, B.h_id(c))] for f in A.hmors for c in B.objects},
    )


def _enumerate_twovar_verticals(F: TwoVarFunctor, G: TwoVarFunctor):
    A, B, C = F.domA, F.domB, F.cod
    pair_cands = []
    pairs = [(a, c) for a in A.objects for c in B.objects]
    for (a, c) in pairs:
        pair_cands.append([v for v in C.vmors
                           if C.vsrc(v) == F.obj(a, c) and C.vtgt(v) == G.obj(a, c)])
    out = []
    for pick in itertools.product(*pair_cands):
        at_pair = dict(zip(pairs, pick))
        rkeys = [(a, g) for a in A.objects for g in B.hmors]
        rcands = []
        for (a, g) in rkeys:
            c, d = B.hsrc(g), B.htgt(g)
            want = Frame(F.partial_right[a].hmor(g), G.partial_right[a].hmor(g),
                         at_pair[(a, c)], at_pair[(a, d)])
            rcands.append(C.cells_with_frame(want))
        lkeys = [(f, c) for f in A.hmors for c in B.objects]
        lcands = []
        for (f, c) in lkeys:
            a, b = A.hsrc(f), A.htgt(f)
            want = Frame(F.partial_left[c].hmor(f), G.partial_left[c].hmor(f),
                         at_pair[(a, c)], at_pair[(b, c)])
            lcands.append(C.cells_with_frame(want))
        for rpick in itertools.product(*rcands):
            for lpick in itertools.product(*lcands):
                s = TwoVarVertical(F, G, at_pair, dict(zip(rkeys, rpick)),
                                   dict(zip(lkeys, lpick)))
                if check_twovar_vertical(s).ok:
                    out.append(s)
    return out
