"""Strictification of a pseudo double category.

st A is never materialised as a table: horizontal morphisms are paths over
A's horizontal morphisms under concatenation, and cells store their payload
(a cell of A between the left-nested evaluations of the boundary paths).
Horizontal composition of st-cells conjugates by the canonical coherence
isomorphism between the evaluation of a concatenation and the composite of
the evaluations; the bracketing is fixed left-nested throughout and order
independence is a tested property.

All st-level checks take a path-length bound; every axiom family states in
the report exactly which composable tuples it quantified over.
"""

from __future__ import annotations

import itertools
from .core import Frame, TableDouble, is_strict
from .homs import (
    HorizontalPseudoTransformation,
    Modification,
    PseudoDoubleFunctor,
    VerticalTransformation,
    check_functor,
    check_horizontal,
    check_modification,
    check_vertical,
    identity_functor,
)
from .report import Report, StructuralError


class Path:
    """Composable sequence of horizontal morphisms; hash cached (hot key)."""

    __slots__ = ("src", "hmors", "_hash")

    def __init__(self, src, hmors: tuple):
        self.src = src
        self.hmors = hmors
        self._hash = hash((src, hmors))

    def __len__(self):
        return len(self.hmors)

    def __add__(self, other: "Path") -> "Path":
        return Path(self.src, self.hmors + other.hmors)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other or (isinstance(other, Path)
                                 and self._hash == other._hash
                                 and self.src == other.src
                                 and self.hmors == other.hmors)

    def __repr__(self):
        return f"Path({self.src}, {self.hmors})"


class StCell:
    """Cell of st A: boundary paths plus the payload cell of the base."""

    __slots__ = ("dom", "cod", "payload", "_hash")

    def __init__(self, dom: Path, cod: Path, payload):
        self.dom = dom
        self.cod = cod
        self.payload = payload
        self._hash = hash((dom._hash, cod._hash, payload))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other or (isinstance(other, StCell)
                                 and self._hash == other._hash
                                 and self.payload == other.payload
                                 and self.dom == other.dom
                                 and self.cod == other.cod)

    def __repr__(self):
        return f"StCell({self.dom}, {self.cod}, {self.payload})"


class StrictifiedDouble:
    """Lazy strict double category of paths over a validated table."""

    def __init__(self, A: TableDouble):
        self.base = A
        self.name = f"st({A.name})"
        self.objects = A.objects
        self.vmors = A.vmors
        self._eps = {}
        self._xi = {}
        self._cat = {}

    # -- vertical layer: identical to the base ------------------------------

    def vsrc(self, u):
        return self.base.vsrc(u)

    def vtgt(self, u):
        return self.base.vtgt(u)

    def v_id(self, a):
        return self.base.v_id(a)

    def vcomp_vmor(self, w, u):
        return self.base.vcomp_vmor(w, u)

    # -- paths ---------------------------------------------------------------

    def h_id(self, a):
        return Path(a, ())

    def unary(self, f):
        return Path(self.base.hsrc(f), (f,))

    def hsrc(self, p: Path):
        return p.src

    def htgt(self, p: Path):
        return p.src if not p.hmors else self.base.htgt(p.hmors[-1])

    def hcomp_hmor(self, q: Path, p: Path) -> Path:
        if self.htgt(p) != self.hsrc(q):
            raise StructuralError(f"{self.name}: paths not composable")
        return p + q

    def eps(self, p: Path):
        """Left-nested evaluation of a path in the base tables."""
        if p in self._eps:
            return self._eps[p]
        if not p.hmors:
            out = self.base.h_id(p.src)
        elif len(p.hmors) == 1:
            out = p.hmors[0]
        else:
            out = self.base.hcomp_hmor(p.hmors[-1], self.eps(Path(p.src, p.hmors[:-1])))
        self._eps[p] = out
        return out

    def paths(self, bound: int, src=None, tgt=None):
        """All composable paths of length <= bound, deterministic order."""
        A = self.base
        out = []
        frontier = [Path(a, ()) for a in A.objects]
        out.extend(frontier)
        for _ in range(bound):
            nxt = []
            for p in frontier:
                end = self.htgt(p)
                for f in A.hmors:
                    if A.hsrc(f) == end:
                        nxt.append(p + Path(end, (f,)))
            out.extend(nxt)
            frontier = nxt
        if src is not None:
            out = [p for p in out if p.src == src]
        if tgt is not None:
            out = [p for p in out if self.htgt(p) == tgt]
        return out

    # -- coherence isomorphism -----------------------------------------------

    def xi(self, p: Path, q: Path):
        """(cell, inverse): eps(p + q) -> eps(q).eps(p), fixed left-nesting."""
        key = (p, q)
        if key in self._xi:
            return self._xi[key]
        A = self.base
        if not p.hmors:
            out = (A.runit_of(self.eps(q))[1], A.runit_of(self.eps(q))[0])
        elif not q.hmors:
            out = (A.lunit_of(self.eps(p))[1], A.lunit_of(self.eps(p))[0])
        elif len(q.hmors) == 1:
            e = self.eps(p + q)
            out = (A.vid_of(e), A.vid_of(e))
        else:
            q1 = Path(q.src, q.hmors[:-1])
            f = q.hmors[-1]
            sub, sub_inv = self.xi(p, q1)
            step = A.assoc_of(self.eps(p), self.eps(q1), f)
            fwd = A.vcomp_cells(A.hcomp_cell(A.vid_of(f), sub), step[1])
            bwd = A.vcomp_cells(step[0], A.hcomp_cell(A.vid_of(f), sub_inv))
            out = (fwd, bwd)
        self._xi[key] = out
        return out

    # -- cells ---------------------------------------------------------------

    def frame(self, c: StCell) -> Frame:
        fr = self.base.frame(c.payload)
        return Frame(c.dom, c.cod, fr.left, fr.right)

    def check_cell(self, c: StCell) -> bool:
        fr = self.base.frame(c.payload)
        return fr.top == self.eps(c.dom) and fr.bottom == self.eps(c.cod)

    def mk_cell(self, dom: Path, cod: Path, payload) -> StCell:
        c = StCell(dom, cod, payload)
        if not self.check_cell(c):
            raise StructuralError(f"{self.name}: payload frame does not match eps boundaries")
        return c

    def vid_of(self, p: Path) -> StCell:
        return StCell(p, p, self.base.vid_of(self.eps(p)))

    def hid_of(self, u) -> StCell:
        return StCell(self.h_id(self.base.vsrc(u)), self.h_id(self.base.vtgt(u)),
                      self.base.hid_of(u))

    def vcomp_cell(self, lo: StCell, up: StCell) -> StCell:
        if up.cod != lo.dom:
            raise StructuralError(f"{self.name}: st-cells not v-composable")
        return StCell(up.dom, lo.cod, self.base.vcomp_cell(lo.payload, up.payload))

    def vcomp_cells(self, *chain):
        out = chain[0]
        for c in chain[1:]:
            out = self.vcomp_cell(c, out)
        return out

    def concat(self, p: Path, q: Path) -> Path:
        key = (p, q)
        out = self._cat.get(key)
        if out is None:
            out = p + q
            self._cat[key] = out
        return out

    def hcomp_payload(self, dl: Path, cl: Path, pl, dr: Path, cr: Path, pr):
        """Payload of the horizontal composite, without allocating the cell."""
        A = self.base
        vt = A.vcomp_cell_table
        mid = A.hcomp_cell_table[(pr, pl)]
        return vt[(self.xi(cl, cr)[1], vt[(mid, self.xi(dl, dr)[0])])]

    def hcomp_cell(self, r: StCell, l: StCell) -> StCell:
        A = self.base
        if A.frame(l.payload).right != A.frame(r.payload).left:
            raise StructuralError(f"{self.name}: st-cells not h-composable")
        payload = self.hcomp_payload(l.dom, l.cod, l.payload, r.dom, r.cod, r.payload)
        return StCell(self.concat(l.dom, r.dom), self.concat(l.cod, r.cod), payload)

    def assoc_of(self, p, q, r):
        c = self.vid_of(p + q + r)
        return (c, c)

    def lunit_of(self, p):
        c = self.vid_of(p)
        return (c, c)

    def runit_of(self, p):
        c = self.vid_of(p)
        return (c, c)

    def is_globular(self, c: StCell) -> bool:
        fr = self.base.frame(c.payload)
        ids = set(self.base.v_identity.values())
        return fr.left in ids and fr.right in ids

    def inverse_of(self, c: StCell):
        d = self.base.inverse_of(c.payload)
        if d is None:
            return None
        return StCell(c.cod, c.dom, d)

    def inv(self, c: StCell) -> StCell:
        d = self.inverse_of(c)
        if d is None:
            raise StructuralError(f"{self.name}: st-cell not invertible")
        return d

    def cells_with_frame(self, fr: Frame):
        want = Frame(self.eps(fr.top), self.eps(fr.bottom), fr.left, fr.right)
        return [StCell(fr.top, fr.bottom, c) for c in self.base.cells_with_frame(want)]

    def globular_cells(self, p: Path, q: Path):
        out = []
        for c in self.base.globular_cells(self.eps(p), self.eps(q)):
            out.append(StCell(p, q, c))
        return out

    def cells(self, bound: int):
        """All st-cells whose boundary paths have length <= bound.  The
        payload frame fixes the vertical boundaries, so the paths need not
        share endpoints."""
        ps = self.paths(bound)
        by_top = {}
        for c in self.base.cells:
            by_top.setdefault(self.base.frame(c).top, []).append(c)
        out = []
        for p in ps:
            pool = by_top.get(self.eps(p), ())
            if not pool:
                continue
            for q in ps:
                eq = self.eps(q)
                for c in pool:
                    if self.base.frame(c).bottom == eq:
                        out.append(StCell(p, q, c))
        return out


def st(A: TableDouble) -> StrictifiedDouble:
    return StrictifiedDouble(A)


# ---------------------------------------------------------------------------
# kappa and the unit
# ---------------------------------------------------------------------------

def kappa(S: StrictifiedDouble, p: Path) -> StCell:
    """The invertible globular cell p -> (eps p), given by the identity cell
    on the evaluation."""
    e = S.eps(p)
    return StCell(p, S.unary(e), S.base.vid_of(e))


def kappa_inv(S: StrictifiedDouble, p: Path) -> StCell:
    e = S.eps(p)
    return StCell(S.unary(e), p, S.base.vid_of(e))


def decompose_kappa(S: StrictifiedDouble, p: Path):
    """The two-factor recipe for kappa on paths of length >= 2:
    first (1 . kappa) on the split p = p' + (f), then the binary kappa."""
    if len(p) < 2:
        return [kappa(S, p)]
    p1 = Path(p.src, p.hmors[:-1])
    f = p.hmors[-1]
    last = S.unary(f)
    step1 = S.hcomp_cell(S.vid_of(last), kappa(S, p1))
    e1 = S.eps(p1)
    binary = Path(p.src, (e1, f))
    step2 = kappa(S, binary)
    return [step1, step2]


def eta(A: TableDouble, S: StrictifiedDouble | None = None) -> PseudoDoubleFunctor:
    """The unit A -> st A: identity on the underlying category, unary paths
    on horizontal morphisms; constraints are kappa cells."""
    S = S or st(A)
    phi2 = {}
    for (g, f) in A.hcomp_hmor_table:
        phi2[(f, g)] = kappa(S, Path(A.hsrc(f), (f, g)))
    return PseudoDoubleFunctor(
        dom=A, cod=S,
        obj_map={a: a for a in A.objects},
        vmor_map={u: u for u in A.vmors},
        hmor_map={f: S.unary(f) for f in A.hmors},
        cell_map={c: StCell(S.unary(A.frame(c).top), S.unary(A.frame(c).bottom), c)
                  for c in A.cells},
        phi0={a: kappa(S, S.h_id(a)) for a in A.objects},
        phi2=phi2,
        name=f"eta_{A.name}",
    )


def normalize_cell(S: StrictifiedDouble, c: StCell):
    """The unique base cell through which c factors across kappa."""
    return c.payload


def renormalize(S: StrictifiedDouble, dom: Path, cod: Path, payload) -> StCell:
    """Recompose kappa^-1 . unary(payload) . kappa; inverse to normalize_cell."""
    mid = StCell(S.unary(S.eps(dom)), S.unary(S.eps(cod)), payload)
    return S.vcomp_cells(kappa(S, dom), mid, kappa_inv(S, cod))


# ---------------------------------------------------------------------------
# bounded strictness check (the st-side oracle)
# ---------------------------------------------------------------------------

def st_strict_report(S: StrictifiedDouble, bound: int) -> Report:
    """Verify every strict double-category axiom instance of st A within the
    stated bounds.  Instance bounds, per family (exact for each degree):

    * path associativity/unit: all triples/pairs with total length <= bound;
    * cell vcomp associativity: all chains whose four boundary paths have
      total length <= bound, plus the full unary stratum (which quantifies
      over every payload chain of the base);
    * cell vcomp units: all cells with boundary lengths <= bound;
    * hcomp of cells: all tuples with total boundary length <= bound on each
      side (so all instances whose composites have degree <= bound);
    * interchange: all 2x2 grids bounded the same way;
    * constraint cells: identity on all composable path tuples, total <= bound.
    """
    rep = Report(f"strict({S.name})", params={"bound": bound})
    A = S.base
    counts = {}

    def tally(k):
        counts[k] = counts.get(k, 0) + 1

    # paths by (src, tgt, length)
    all_paths = S.paths(bound)

    # P1: concatenation associativity and units
    for p in all_paths:
        rep.require("st.hmor.unit",
                    S.hcomp_hmor(S.h_id(S.htgt(p)), p) == p
                    and S.hcomp_hmor(p, S.h_id(p.src)) == p, (p,))
        tally("st.hmor.unit")
    for p in all_paths:
        for q in all_paths:
            if S.htgt(p) != q.src or len(p) + len(q) > bound:
                continue
            for r in all_paths:
                if S.htgt(q) != r.src or len(p) + len(q) + len(r) > bound:
                    continue
                rep.require("st.hmor.assoc",
                            S.hcomp_hmor(r, S.hcomp_hmor(q, p)) ==
                            S.hcomp_hmor(S.hcomp_hmor(r, q), p), (p, q, r))
                tally("st.hmor.assoc")

    cells = S.cells(bound)

    # C1: vertical identity cells are neutral
    for c in cells:
        rep.require("st.cell.vunit",
                    S.vcomp_cell(S.vid_of(c.cod), c) == c
                    and S.vcomp_cell(c, S.vid_of(c.dom)) == c, (c,))
        tally("st.cell.vunit")

    # C2: vertical associativity: bounded total-length chains + unary stratum
    by_dom = {}
    for c in cells:
        by_dom.setdefault(c.dom, []).append(c)
    small = [c for c in cells if len(c.dom) + len(c.cod) <= bound]
    small_by_dom = {}
    for c in small:
        small_by_dom.setdefault(c.dom, []).append(c)
    for c1 in small:
        budget = bound - len(c1.dom) - len(c1.cod)
        for c2 in small_by_dom.get(c1.cod, ()):
            if len(c2.cod) > budget:
                continue
            c12 = S.vcomp_cell(c2, c1)
            for c3 in small_by_dom.get(c2.cod, ()):
                if len(c2.cod) + len(c3.cod) > budget:
                    continue
                lhs = S.vcomp_cell(c3, c12)
                rhs = S.vcomp_cell(S.vcomp_cell(c3, c2), c1)
                rep.require("st.cell.vassoc", lhs == rhs, (c1, c2, c3))
                tally("st.cell.vassoc")
    unary = [c for c in cells if len(c.dom) == 1 and len(c.cod) == 1]
    unary_by_dom = {}
    for c in unary:
        unary_by_dom.setdefault(c.dom, []).append(c)
    for c1 in unary:
        for c2 in unary_by_dom.get(c1.cod, ()):
            c12 = S.vcomp_cell(c2, c1)
            for c3 in unary_by_dom.get(c2.cod, ()):
                lhs = S.vcomp_cell(c3, c12)
                rhs = S.vcomp_cell(S.vcomp_cell(c3, c2), c1)
                rep.require("st.cell.vassoc", lhs == rhs, (c1, c2, c3))
                tally("st.cell.vassoc")

    # C3: horizontal unit cells (empty paths) are neutral for hcomp
    for c in cells:
        e_l = S.vid_of(S.h_id(c.dom.src))
        e_r = S.vid_of(S.h_id(S.htgt(c.dom)))
        fr = A.frame(c.payload)
        if A.frame(e_l.payload).right == fr.left:
            rep.require("st.cell.hunit", S.hcomp_cell(c, e_l) == c, (c,))
            tally("st.cell.hunit")
        if fr.right == A.frame(e_r.payload).left:
            rep.require("st.cell.hunit", S.hcomp_cell(e_r, c) == c, (c,))
            tally("st.cell.hunit")

    # buckets keyed by (left vmor of payload, source object, dom len, cod len)
    by_left_sz = {}
    for c in cells:
        key = (A.frame(c.payload).left, c.dom.src, len(c.dom), len(c.cod))
        by_left_sz.setdefault(key, []).append(c)

    def rights_of(c, dmax, cmax):
        r = A.frame(c.payload).right
        t = S.htgt(c.dom)
        for dl in range(dmax + 1):
            for cl in range(cmax + 1):
                yield from by_left_sz.get((r, t, dl, cl), ())

    # C4: hcomp associativity within total bound; compared on payloads since
    # boundary paths agree by concatenation associativity (family P1)
    hp = S.hcomp_payload
    cat = S.concat
    hassoc_n = 0
    pair_payload = {}
    for c1 in cells:
        d1, k1 = len(c1.dom), len(c1.cod)
        if d1 >= bound and k1 >= bound:
            continue
        for c2 in list(rights_of(c1, bound - d1, bound - k1)):
            p12 = hp(c1.dom, c1.cod, c1.payload, c2.dom, c2.cod, c2.payload)
            d12d, d12c = cat(c1.dom, c2.dom), cat(c1.cod, c2.cod)
            n12d, n12c = d1 + len(c2.dom), k1 + len(c2.cod)
            for c3 in rights_of(c2, bound - n12d, bound - n12c):
                lhs = hp(d12d, d12c, p12, c3.dom, c3.cod, c3.payload)
                key23 = (c2, c3)
                p23 = pair_payload.get(key23)
                if p23 is None:
                    p23 = hp(c2.dom, c2.cod, c2.payload, c3.dom, c3.cod, c3.payload)
                    pair_payload[key23] = p23
                rhs = hp(c1.dom, c1.cod, c1.payload,
                         cat(c2.dom, c3.dom), cat(c2.cod, c3.cod), p23)
                if lhs != rhs:
                    rep.add("st.cell.hassoc", False, (c1, c2, c3))
                hassoc_n += 1
    counts["st.cell.hassoc"] = hassoc_n

    # C5: vid multiplicative over concatenation
    for p in all_paths:
        for q in all_paths:
            if S.htgt(p) != q.src or len(p) + len(q) > bound:
                continue
            rep.require("st.vid.mult",
                        S.hcomp_cell(S.vid_of(q), S.vid_of(p)) == S.vid_of(p + q), (p, q))
            tally("st.vid.mult")

    # C6: interchange on bounded 2x2 grids (payload comparison, as in C4)
    vt = A.vcomp_cell_table
    frame_right = {c: A.frame(c.payload).right for c in cells}
    frame_left = {c: A.frame(c.payload).left for c in cells}
    inter_n = 0
    for l1 in cells:
        d1, k1 = len(l1.dom), len(l1.cod)
        for r1 in list(rights_of(l1, bound - d1, bound - k1)):
            top = hp(l1.dom, l1.cod, l1.payload, r1.dom, r1.cod, r1.payload)
            for l2 in by_dom.get(l1.cod, ()):
                if len(l2.cod) + len(r1.cod) > bound:
                    continue
                fr2 = frame_right[l2]
                for r2 in by_dom.get(r1.cod, ()):
                    if fr2 != frame_left[r2] or len(l2.cod) + len(r2.cod) > bound:
                        continue
                    bot = hp(l2.dom, l2.cod, l2.payload, r2.dom, r2.cod, r2.payload)
                    lhs = vt[(bot, top)]
                    rhs = hp(l1.dom, l2.cod, vt[(l2.payload, l1.payload)],
                             r1.dom, r2.cod, vt[(r2.payload, r1.payload)])
                    if lhs != rhs:
                        rep.add("st.interchange", False, (l1, r1, l2, r2))
                    inter_n += 1
    counts["st.interchange"] = inter_n

    # C7: horizontal identities functorial
    for a in A.objects:
        rep.require("st.hid.videntity",
                    S.hid_of(A.v_id(a)) == S.vid_of(S.h_id(a)), (a,))
        tally("st.hid.videntity")
    for (w, u), wu in A.vcomp_vmor_table.items():
        rep.require("st.hid.functorial",
                    S.vcomp_cell(S.hid_of(w), S.hid_of(u)) == S.hid_of(wu), (u, w))
        tally("st.hid.functorial")

    # C8: all constraints are identity cells
    for p in all_paths:
        for q in all_paths:
            if S.htgt(p) != q.src:
                continue
            for r in all_paths:
                if S.htgt(q) != r.src or len(p) + len(q) + len(r) > bound:
                    continue
                c, d = S.assoc_of(p, q, r)
                rep.require("st.constraint.identity",
                            c == S.vid_of(p + q + r) and d == c, (p, q, r))
                tally("st.constraint.identity")
    for p in all_paths:
        rep.require("st.constraint.identity",
                    S.lunit_of(p)[0] == S.vid_of(p) and S.runit_of(p)[0] == S.vid_of(p), (p,))
        tally("st.constraint.identity")

    rep.params["instances"] = counts
    return rep


# ---------------------------------------------------------------------------
# extensions: the four operators of the universal property
# ---------------------------------------------------------------------------

class StExtension:
    """The strict double functor st A -> B induced by a pseudo functor
    F: A -> B into a strict double category: paths go to their left-nested
    evaluations in B and a cell goes to the conjugate of its payload by the
    canonical comparison cells phi."""

    def __init__(self, F: PseudoDoubleFunctor, S: StrictifiedDouble, B):
        self.F = F
        self.S = S
        self.B = B
        self.name = f"ext({F.name})"
        self._phi = {}
        self._path = {}

    def obj(self, a):
        return self.F.obj(a)

    def vmor(self, u):
        return self.F.vmor(u)

    def on_path(self, p: Path):
        if p in self._path:
            return self._path[p]
        B = self.B
        if not p.hmors:
            out = B.h_id(self.F.obj(p.src))
        elif len(p.hmors) == 1:
            out = self.F.hmor(p.hmors[0])
        else:
            out = B.hcomp_hmor(self.F.hmor(p.hmors[-1]),
                               self.on_path(Path(p.src, p.hmors[:-1])))
        self._path[p] = out
        return out

    def phi(self, p: Path):
        """(cell, inverse): eps_B(F p) -> F(eps_A p)."""
        if p in self._phi:
            return self._phi[p]
        B, F, S = self.B, self.F, self.S
        if not p.hmors:
            c = F.phi0[p.src]
            out = (c, B.inv(c))
        elif len(p.hmors) == 1:
            c = B.vid_of(F.hmor(p.hmors[0]))
            out = (c, c)
        else:
            p1 = Path(p.src, p.hmors[:-1])
            f = p.hmors[-1]
            sub, sub_inv = self.phi(p1)
            c2 = F.phi2[(S.eps(p1), f)]
            fwd = B.vcomp_cells(B.hcomp_cell(B.vid_of(F.hmor(f)), sub), c2)
            bwd = B.vcomp_cells(B.inv(c2), B.hcomp_cell(B.vid_of(F.hmor(f)), sub_inv))
            out = (fwd, bwd)
        self._phi[p] = out
        return out

    def on_cell(self, c: StCell):
        return self.B.vcomp_cells(self.phi(c.dom)[0], self.F.cell(c.payload),
                                  self.phi(c.cod)[1])


def extend_functor(F: PseudoDoubleFunctor, S: StrictifiedDouble, B) -> StExtension:
    if isinstance(B, TableDouble) and not is_strict(B):
        raise StructuralError("extend_functor requires a strict codomain")
    return StExtension(F, S, B)


def check_extension_strict(E: StExtension, bound: int) -> Report:
    """All strict double functor axiom instances of an extension within the
    bound: identities, both compositions, frames."""
    S, B = E.S, E.B
    A = S.base
    rep = Report(f"strictfun({E.name})", params={"bound": bound})
    for a in A.objects:
        rep.require("ext.hid", E.on_path(S.h_id(a)) == B.h_id(E.obj(a)), (a,))
        rep.require("ext.vid.cell",
                    E.on_cell(S.vid_of(S.h_id(a))) == B.vid_of(B.h_id(E.obj(a))), (a,))
    for u in A.vmors:
        rep.require("ext.hid.cell", E.on_cell(S.hid_of(u)) == B.hid_of(E.vmor(u)), (u,))
    paths = S.paths(bound)
    for p in paths:
        rep.require("ext.vid.path", E.on_cell(S.vid_of(p)) == B.vid_of(E.on_path(p)), (p,))
        for q in paths:
            if S.htgt(p) != q.src or len(p) + len(q) > bound:
                continue
            rep.require("ext.hcomp.path",
                        E.on_path(p + q) == B.hcomp_hmor(E.on_path(q), E.on_path(p)),
                        (p, q))
    cells = S.cells(bound)
    for c in cells:
        fr = S.frame(c)
        want = Frame(E.on_path(c.dom), E.on_path(c.cod), E.vmor(fr.left), E.vmor(fr.right))
        rep.require("ext.frame", B.frame(E.on_cell(c)) == want, (c,))
        if rep.failures():
            return rep
    by_dom = {}
    for c in cells:
        by_dom.setdefault(c.dom, []).append(c)
    for c1 in cells:
        for c2 in by_dom.get(c1.cod, ()):
            lhs = E.on_cell(S.vcomp_cell(c2, c1))
            rhs = B.vcomp_cell(E.on_cell(c2), E.on_cell(c1))
            rep.require("ext.vcomp.cell", lhs == rhs, (c1, c2))
            if rep.failures():
                return rep
    by_left = {}
    for c in cells:
        by_left.setdefault(A.frame(c.payload).left, []).append(c)
    for c1 in cells:
        for c2 in by_left.get(A.frame(c1.payload).right, ()):
            if c2.dom.src != S.htgt(c1.dom):
                continue
            if len(c1.dom) + len(c2.dom) > bound or len(c1.cod) + len(c2.cod) > bound:
                continue
            lhs = E.on_cell(S.hcomp_cell(c2, c1))
            rhs = B.hcomp_cell(E.on_cell(c2), E.on_cell(c1))
            rep.require("ext.hcomp.cell", lhs == rhs, (c1, c2))
            if rep.failures():
                return rep
    return rep


def restrict_extension(E: StExtension, etaA: PseudoDoubleFunctor) -> PseudoDoubleFunctor:
    """E . eta as a pseudo double functor A -> B."""
    S, B = E.S, E.B
    A = S.base
    return PseudoDoubleFunctor(
        dom=A, cod=B,
        obj_map={a: E.obj(a) for a in A.objects},
        vmor_map={u: E.vmor(u) for u in A.vmors},
        hmor_map={f: E.on_path(etaA.hmor(f)) for f in A.hmors},
        cell_map={c: E.on_cell(etaA.cell(c)) for c in A.cells},
        phi0={a: E.on_cell(etaA.phi0[a]) for a in A.objects},
        phi2={k: E.on_cell(v) for k, v in etaA.phi2.items()},
        name=f"{E.name}.eta",
    )


class StVertical:
    """Extension of a vertical transformation along eta."""

    def __init__(self, t: VerticalTransformation, E: StExtension, E2: StExtension):
        self.t = t
        self.E = E
        self.E2 = E2
        self._at = {}

    def at_obj(self, a):
        return self.t.at_obj[a]

    def at_path(self, p: Path):
        if p in self._at:
            return self._at[p]
        B = self.E.B
        if not p.hmors:
            out = B.hid_of(self.t.at_obj[p.src])
        else:
            p1 = Path(p.src, p.hmors[:-1])
            out = B.hcomp_cell(self.t.at_hmor[p.hmors[-1]], self.at_path(p1))
        self._at[p] = out
        return out


def extend_vertical(t: VerticalTransformation, E: StExtension, E2: StExtension) -> StVertical:
    return StVertical(t, E, E2)


def check_stvertical(v: StVertical, bound: int) -> Report:
    S, B = v.E.S, v.E.B
    A = S.base
    rep = Report("stvertical", params={"bound": bound})
    for u in A.vmors:
        a, b = A.vsrc(u), A.vtgt(u)
        rep.require("stv.natural.vmor",
                    B.vcomp_vmor(v.at_obj(b), v.E.vmor(u)) ==
                    B.vcomp_vmor(v.E2.vmor(u), v.at_obj(a)), (u,))
    paths = S.paths(bound)
    for p in paths:
        a, b = p.src, S.htgt(p)
        want = Frame(v.E.on_path(p), v.E2.on_path(p), v.at_obj(a), v.at_obj(b))
        rep.require("stv.frame", B.frame(v.at_path(p)) == want, (p,))
        if rep.failures():
            return rep
    for p in paths:
        for q in paths:
            if S.htgt(p) != q.src or len(p) + len(q) > bound:
                continue
            lhs = v.at_path(p + q)
            rhs = B.hcomp_cell(v.at_path(q), v.at_path(p))
            rep.require("stv.hfunctorial", lhs == rhs, (p, q))
    for c in S.cells(bound):
        lhs = B.vcomp_cells(v.E.on_cell(c), v.at_path(c.cod))
        rhs = B.vcomp_cells(v.at_path(c.dom), v.E2.on_cell(c))
        rep.require("stv.natural.cell", lhs == rhs, (c,))
        if rep.failures():
            return rep
    return rep


class StHorizontal:
    """Extension of a horizontal pseudo transformation along eta."""

    def __init__(self, t: HorizontalPseudoTransformation, E: StExtension, E2: StExtension):
        self.t = t
        self.E = E
        self.E2 = E2
        self._at = {}

    def at_obj(self, a):
        return self.t.at_obj[a]

    def at_vmor(self, u):
        return self.t.at_vmor[u]

    def at_path(self, p: Path):
        """(cell, inverse): t_b . E(p) -> E2(p) . t_a."""
        if p in self._at:
            return self._at[p]
        B = self.E.B
        if not p.hmors:
            c = B.vid_of(self.t.at_obj[p.src])
            out = (c, c)
        else:
            p1 = Path(p.src, p.hmors[:-1])
            f = p.hmors[-1]
            sub, sub_inv = self.at_path(p1)
            tf, tf_inv = self.t.at_hmor[f]
            fwd = B.vcomp_cells(
                B.hcomp_cell(tf, B.vid_of(self.E.on_path(p1))),
                B.hcomp_cell(B.vid_of(self.E2.F.hmor(f)), sub),
            )
            bwd = B.vcomp_cells(
                B.hcomp_cell(B.vid_of(self.E2.F.hmor(f)), sub_inv),
                B.hcomp_cell(tf_inv, B.vid_of(self.E.on_path(p1))),
            )
            out = (fwd, bwd)
        self._at[p] = out
        return out


def extend_horizontal(t, E, E2) -> StHorizontal:
    return StHorizontal(t, E, E2)


def check_sthorizontal(h: StHorizontal, bound: int) -> Report:
    S, B = h.E.S, h.E.B
    A = S.base
    rep = Report("sthorizontal", params={"bound": bound})
    for a in A.objects:
        rep.require("sth.vid", h.at_vmor(A.v_id(a)) == B.vid_of(h.at_obj(a)), (a,))
    for (w, u), wu in A.vcomp_vmor_table.items():
        rep.require("sth.vfunctorial",
                    h.at_vmor(wu) == B.vcomp_cells(h.at_vmor(u), h.at_vmor(w)), (u, w))
    paths = S.paths(bound)
    for p in paths:
        a, b = p.src, S.htgt(p)
        cell, inv = h.at_path(p)
        src_h = B.hcomp_hmor(h.at_obj(b), h.E.on_path(p))
        tgt_h = B.hcomp_hmor(h.E2.on_path(p), h.at_obj(a))
        fr = B.frame(cell)
        ok = fr.top == src_h and fr.bottom == tgt_h and B.is_globular(cell)
        rep.require("sth.frame", ok, (p,))
        if not ok:
            return rep
        rep.require("sth.invertible",
                    B.vcomp_cell(inv, cell) == B.vid_of(src_h)
                    and B.vcomp_cell(cell, inv) == B.vid_of(tgt_h), (p,))
    for p in paths:
        for q in paths:
            if S.htgt(p) != q.src or len(p) + len(q) > bound:
                continue
            a = p.src
            b = S.htgt(p)
            c = S.htgt(q)
            lhs = h.at_path(p + q)[0]
            rhs = B.vcomp_cells(
                B.hcomp_cell(h.at_path(q)[0], B.vid_of(h.E.on_path(p))),
                B.hcomp_cell(B.vid_of(h.E2.on_path(q)), h.at_path(p)[0]),
            )
            rep.require("sth.hfunctorial", lhs == rhs, (p, q))
            if rep.failures():
                return rep
    for cc in S.cells(bound):
        fr = S.frame(cc)
        u, v_ = fr.left, fr.right
        lhs = B.vcomp_cells(B.hcomp_cell(h.at_vmor(v_), h.E.on_cell(cc)),
                            h.at_path(cc.cod)[0])
        rhs = B.vcomp_cells(h.at_path(cc.dom)[0],
                            B.hcomp_cell(h.E2.on_cell(cc), h.at_vmor(u)))
        rep.require("sth.natural.cell", lhs == rhs, (cc,))
        if rep.failures():
            return rep
    return rep


class StModification:
    def __init__(self, m: Modification, top: StHorizontal, bottom: StHorizontal,
                 left: StVertical, right: StVertical):
        self.m = m
        self.top = top
        self.bottom = bottom
        self.left = left
        self.right = right

    def at_obj(self, a):
        return self.m.at_obj[a]


def extend_modification(m, top, bottom, left, right) -> StModification:
    return StModification(m, top, bottom, left, right)


class StFunctor:
    """st F: st A -> st B for a pseudo functor F: A -> B between tables.
    Paths map pointwise; payloads are conjugated by the comparison cells."""

    def __init__(self, F: PseudoDoubleFunctor, SA: StrictifiedDouble):
        self.F = F
        self.SA = SA
        self.E = StExtension(F, SA, F.cod)

    def on_path(self, p: Path) -> Path:
        return Path(self.F.obj(p.src), tuple(self.F.hmor(f) for f in p.hmors))

    def on_cell(self, c: StCell) -> StCell:
        return StCell(self.on_path(c.dom), self.on_path(c.cod), self.E.on_cell(c))


def counit(B: TableDouble) -> StExtension:
    """st B -> B for strict B: evaluate paths, take payloads of cells."""
    return extend_functor(identity_functor(B), st(B), B)


def flatten_path(P: Path) -> Path:
    """Concatenate a path of paths (the counit of st at an st-object)."""
    hm = ()
    for q in P.hmors:
        hm = hm + q.hmors
    return Path(P.src, hm)


def triangle1_report(A: TableDouble, bound: int) -> Report:
    """flatten . st(eta_A) is the identity on all bounded data of st A."""
    S = st(A)
    etaA = eta(A, S)
    stEta = StFunctor(etaA, S)
    rep = Report(f"triangle1({A.name})", params={"bound": bound})
    for p in S.paths(bound):
        rep.require("tri1.path", flatten_path(stEta.on_path(p)) == p, (p,))
    for c in S.cells(bound):
        img = stEta.on_cell(c)
        rep.require("tri1.cell",
                    flatten_path(img.dom) == c.dom and flatten_path(img.cod) == c.cod
                    and img.payload == c, (c,))
    return rep


def triangle2_report(B: TableDouble) -> Report:
    """counit_B . eta_B equals the identity pseudo functor of a strict B,
    on the nose including constraints."""
    rep = Report(f"triangle2({B.name})")
    S = st(B)
    etaB = eta(B, S)
    eps = counit(B)
    F = restrict_extension(eps, etaB)
    I = identity_functor(B)
    rep.require("tri2.obj", F.obj_map == I.obj_map)
    rep.require("tri2.vmor", F.vmor_map == I.vmor_map)
    rep.require("tri2.hmor", F.hmor_map == I.hmor_map)
    rep.require("tri2.cell", F.cell_map == I.cell_map)
    rep.require("tri2.phi0", F.phi0 == I.phi0)
    rep.require("tri2.phi2", F.phi2 == I.phi2)
    return rep


# ---------------------------------------------------------------------------
# the three-dimensional universal property
# ---------------------------------------------------------------------------

def verify_3d_iso(A: TableDouble, B: TableDouble, bound: int,
                  max_candidates=None) -> Report:
    """Restriction along eta_A from bounded data of Ps(st A, B) to Hom(A, B)
    is bijective on objects, vertical morphisms, horizontal morphisms and
    cells, with inverse given by the four extension operators.

    Both sides are parameterised by the same finite tuples (the values on
    the generating data of st A, equivalently the full data of a pseudo
    functor A -> B and its transformations), so the verification runs over
    every frame-typed candidate and confirms that the two membership tests
    agree: the axiom check over A on one side, the bounded strict axiom
    check over st A of the extension on the other.  Round trips are exact
    by construction and re-verified on the members.
    """
    from .homs import iter_functor_candidates
    if not is_strict(B):
        raise StructuralError("verify_3d_iso requires a strict codomain")
    kw = {} if max_candidates is None else {"max_candidates": max_candidates}
    S = st(A)
    etaA = eta(A, S)
    rep = Report(f"3d-iso({A.name},{B.name})", params={"bound": bound})
    rep.params["inverse_maps"] = ("extend_functor", "extend_vertical",
                                  "extend_horizontal", "extend_modification")

    members = []        # (F, extension) for the valid tuples
    n_cand = 0
    for F in iter_functor_candidates(A, B, require_invertible=False, **kw):
        n_cand += 1
        a_ok = check_functor(F).ok
        E = StExtension(F, S, B)
        b_ok = check_extension_strict(E, bound).ok
        if b_ok:
            res = restrict_extension(E, etaA)
            b_ok = (res.key() == F.key())
        rep.require("iso.obj.agree", a_ok == b_ok, (F.key(),),
                    detail=f"hom-side={a_ok} st-side={b_ok}")
        if a_ok and b_ok:
            F.name = f"F{len(members)}"
            members.append((F, E))
    rep.params["functor_candidates"] = n_cand
    rep.params["objects_each_side"] = len(members)

    n_v = n_h = raw_v = raw_h = 0
    vmembers, hmembers = {}, {}
    for i, (F, EF) in enumerate(members):
        for j, (G, EG) in enumerate(members):
            got = []
            # every raw frame-typed candidate: hom-side membership must agree
            # with bounded st-side membership of the recursion extension
            for t in _raw_vertical_candidates(F, G):
                raw_v += 1
                a_ok = check_vertical(t).ok
                sv = extend_vertical(t, EF, EG)
                b_ok = check_stvertical(sv, bound).ok
                rep.require("iso.vmor.agree", a_ok == b_ok, (F.name, G.name, t.key()),
                            detail=f"hom-side={a_ok} st-side={b_ok}")
                if a_ok and b_ok:
                    got.append((t, sv))
            n_v += len(got)
            vmembers[(i, j)] = got

            hgot = []
            for t in _raw_horizontal_candidates(F, G):
                raw_h += 1
                a_ok = check_horizontal(t).ok
                sh = extend_horizontal(t, EF, EG)
                b_ok = check_sthorizontal(sh, bound).ok
                rep.require("iso.hmor.agree", a_ok == b_ok, (F.name, G.name, t.key()),
                            detail=f"hom-side={a_ok} st-side={b_ok}")
                if a_ok and b_ok:
                    hgot.append((t, sh))
            n_h += len(hgot)
            hmembers[(i, j)] = hgot
    rep.params["vmors_each_side"] = n_v
    rep.params["hmors_each_side"] = n_h
    rep.params["vmor_candidates"] = raw_v
    rep.params["hmor_candidates"] = raw_h

    # cells: modifications between enumerated boundaries
    n_m = raw_m = 0
    for i in range(len(members)):
        for j in range(len(members)):
            for t, sh_t in hmembers[(i, j)]:
                for k in range(len(members)):
                    for l in range(len(members)):
                        for b_, sh_b in hmembers[(k, l)]:
                            for sg, ssg in vmembers[(i, k)]:
                                for ta, sta in vmembers[(j, l)]:
                                    for m in _raw_modification_candidates(t, b_, sg, ta):
                                        raw_m += 1
                                        a_ok = check_modification(m).ok
                                        sm = extend_modification(m, sh_t, sh_b, ssg, sta)
                                        b_ok = check_stmodification(sm, bound).ok
                                        rep.require("iso.cell.agree", a_ok == b_ok,
                                                    (m.key(),),
                                                    detail=f"hom={a_ok} st={b_ok}")
                                        if a_ok and b_ok:
                                            n_m += 1
    rep.params["cells_each_side"] = n_m
    rep.params["cell_candidates"] = raw_m
    return rep


def _raw_modification_candidates(top, bottom, left, right):
    from .homs import Modification
    A, B = top.src.dom, top.src.cod
    cands = []
    for a in A.objects:
        want = Frame(top.at_obj[a], bottom.at_obj[a], left.at_obj[a], right.at_obj[a])
        cands.append(B.cells_with_frame(want))
    out = []
    for pick in itertools.product(*cands):
        out.append(Modification(top, bottom, left, right, dict(zip(A.objects, pick))))
    return out


def _raw_vertical_candidates(F, G):
    from .homs import VerticalTransformation
    A, B = F.dom, F.cod
    obj_cands = [[v for v in B.vmors if B.vsrc(v) == F.obj(a) and B.vtgt(v) == G.obj(a)]
                 for a in A.objects]
    out = []
    for opick in itertools.product(*obj_cands):
        at_obj = dict(zip(A.objects, opick))
        hcands = []
        for f in A.hmors:
            a, b = A.hsrc(f), A.htgt(f)
            want = Frame(F.hmor(f), G.hmor(f), at_obj[a], at_obj[b])
            hcands.append(B.cells_with_frame(want))
        for hpick in itertools.product(*hcands):
            out.append(VerticalTransformation(F, G, at_obj, dict(zip(A.hmors, hpick))))
    return out


def _raw_horizontal_candidates(F, G):
    from .homs import HorizontalPseudoTransformation
    A, B = F.dom, F.cod
    obj_cands = [[x for x in B.hmors if B.hsrc(x) == F.obj(a) and B.htgt(x) == G.obj(a)]
                 for a in A.objects]
    out = []
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
                out.append(HorizontalPseudoTransformation(
                    F, G, at_obj, dict(zip(A.vmors, vpick)), dict(zip(A.hmors, hpick))))
    return out


def check_stmodification(mm: StModification, bound: int) -> Report:
    S = mm.top.E.S
    B = mm.top.E.B
    A = S.base
    rep = Report("stmodification", params={"bound": bound})
    for u in A.vmors:
        x, y = A.vsrc(u), A.vtgt(u)
        lhs = B.vcomp_cells(mm.top.at_vmor(u), mm.at_obj(y))
        rhs = B.vcomp_cells(mm.at_obj(x), mm.bottom.at_vmor(u))
        rep.require("stm.vnatural", lhs == rhs, (u,))
    for p in S.paths(bound):
        x, y = p.src, S.htgt(p)
        lhs = B.vcomp_cells(B.hcomp_cell(mm.at_obj(y), mm.left.at_path(p)),
                            mm.bottom.at_path(p)[0])
        rhs = B.vcomp_cells(mm.top.at_path(p)[0],
                            B.hcomp_cell(mm.right.at_path(p), mm.at_obj(x)))
        rep.require("stm.hnatural", lhs == rhs, (p,))
        if rep.failures():
            return rep
    return rep
