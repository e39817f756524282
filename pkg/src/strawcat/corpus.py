"""Desk-scale test corpus.

Every member is rebuilt programmatically and revalidated by the test suite;
the .pdc files shipped under corpus/ are printed from these builders.

The interesting member is ``nonstrict()``: two horizontal endomorphisms
{e, j} on one object with unit j, End(e) a two-element group {1_e, t}, and
unitors l_e = r_e = t.  The associator is t exactly on the two triples
(e,j,j) and (j,j,e) (first-to-last order); this is the unique choice, given
those unitors, that satisfies the triangle and pentagon equations when
horizontal composition of cells is addition in End(e).
"""

from __future__ import annotations

import itertools

from .core import Frame, TableDouble, terminal, unit_object


def strict_from_monoid(name: str, elems, unit, mult) -> TableDouble:
    """One-object strict bicategory (2-category) on a finite monoid."""
    obj = "o"
    vid = "idv"
    hmors = tuple(elems)
    cells = {m: f"c_{m}" for m in elems}
    hcomp = {(g, f): mult(g, f) for g, f in itertools.product(elems, elems)}
    return TableDouble(
        name=name,
        objects=(obj,),
        vmors=(vid,), vmor_src={vid: obj}, vmor_tgt={vid: obj},
        v_identity={obj: vid}, vcomp_vmor_table={(vid, vid): vid},
        hmors=hmors,
        hmor_src={f: obj for f in hmors}, hmor_tgt={f: obj for f in hmors},
        h_identity={obj: unit},
        hcomp_hmor_table=hcomp,
        cells=tuple(cells[m] for m in elems),
        cell_frames={cells[m]: Frame(m, m, vid, vid) for m in elems},
        vcomp_cell_table={(cells[m], cells[m]): cells[m] for m in elems},
        vid_cell={m: cells[m] for m in elems},
        hcomp_cell_table={(cells[g], cells[f]): cells[mult(g, f)]
                          for g, f in itertools.product(elems, elems)},
        hid_cell={vid: cells[unit]},
        assoc={(f, g, h): (cells[mult(mult(h, g), f)],) * 2
               for f, g, h in itertools.product(elems, repeat=3)},
        lunit={f: (cells[f], cells[f]) for f in elems},
        runit={f: (cells[f], cells[f]) for f in elems},
    )


def sigma_m3() -> TableDouble:
    """Three-element monoid {m0, m1, m2}: addition truncated at 2."""
    elems = ("m0", "m1", "m2")
    val = {"m0": 0, "m1": 1, "m2": 2}

    def mult(g, f):
        return elems[min(val[g] + val[f], 2)]

    return strict_from_monoid("sigmaM", elems, "m0", mult)


def sigma_z2() -> TableDouble:
    """Two-element group as a one-object 2-category."""
    elems = ("z0", "z1")

    def mult(g, f):
        return elems[(elems.index(g) + elems.index(f)) % 2]

    return strict_from_monoid("sigma2", elems, "z0", mult)


def vertical_free() -> TableDouble:
    """Free vertical category on one arrow; horizontal data is identities."""
    return TableDouble(
        name="vertfree",
        objects=("a", "b"),
        vmors=("ida", "idb", "u"),
        vmor_src={"ida": "a", "idb": "b", "u": "a"},
        vmor_tgt={"ida": "a", "idb": "b", "u": "b"},
        v_identity={"a": "ida", "b": "idb"},
        vcomp_vmor_table={("ida", "ida"): "ida", ("idb", "idb"): "idb",
                          ("u", "ida"): "u", ("idb", "u"): "u"},
        hmors=("ha", "hb"),
        hmor_src={"ha": "a", "hb": "b"}, hmor_tgt={"ha": "a", "hb": "b"},
        h_identity={"a": "ha", "b": "hb"},
        hcomp_hmor_table={("ha", "ha"): "ha", ("hb", "hb"): "hb"},
        cells=("ca", "cb", "cu"),
        cell_frames={"ca": Frame("ha", "ha", "ida", "ida"),
                     "cb": Frame("hb", "hb", "idb", "idb"),
                     "cu": Frame("ha", "hb", "u", "u")},
        vcomp_cell_table={("ca", "ca"): "ca", ("cb", "cb"): "cb",
                          ("cu", "ca"): "cu", ("cb", "cu"): "cu"},
        vid_cell={"ha": "ca", "hb": "cb"},
        hcomp_cell_table={("ca", "ca"): "ca", ("cb", "cb"): "cb", ("cu", "cu"): "cu"},
        hid_cell={"ida": "ca", "idb": "cb", "u": "cu"},
        assoc={("ha", "ha", "ha"): ("ca", "ca"), ("hb", "hb", "hb"): ("cb", "cb")},
        lunit={"ha": ("ca", "ca"), "hb": ("cb", "cb")},
        runit={"ha": ("ca", "ca"), "hb": ("cb", "cb")},
    )


def quintet() -> TableDouble:
    """Two objects, one generating square s: f => 1_b along u.

    Strict: composites never leave the five listed cells.
    """
    return TableDouble(
        name="quintet",
        objects=("a", "b"),
        vmors=("ida", "idb", "u"),
        vmor_src={"ida": "a", "idb": "b", "u": "a"},
        vmor_tgt={"ida": "a", "idb": "b", "u": "b"},
        v_identity={"a": "ida", "b": "idb"},
        vcomp_vmor_table={("ida", "ida"): "ida", ("idb", "idb"): "idb",
                          ("u", "ida"): "u", ("idb", "u"): "u"},
        hmors=("ha", "hb", "f"),
        hmor_src={"ha": "a", "hb": "b", "f": "a"},
        hmor_tgt={"ha": "a", "hb": "b", "f": "b"},
        h_identity={"a": "ha", "b": "hb"},
        hcomp_hmor_table={("ha", "ha"): "ha", ("hb", "hb"): "hb",
                          ("f", "ha"): "f", ("hb", "f"): "f"},
        cells=("ca", "cb", "cf", "cu", "s"),
        cell_frames={"ca": Frame("ha", "ha", "ida", "ida"),
                     "cb": Frame("hb", "hb", "idb", "idb"),
                     "cf": Frame("f", "f", "ida", "idb"),
                     "cu": Frame("ha", "hb", "u", "u"),
                     "s": Frame("f", "hb", "u", "idb")},
        vcomp_cell_table={("ca", "ca"): "ca", ("cb", "cb"): "cb", ("cf", "cf"): "cf",
                          ("cu", "ca"): "cu", ("cb", "cu"): "cu",
                          ("s", "cf"): "s", ("cb", "s"): "s"},
        vid_cell={"ha": "ca", "hb": "cb", "f": "cf"},
        hcomp_cell_table={("ca", "ca"): "ca", ("cf", "ca"): "cf",
                          ("cb", "cb"): "cb", ("cb", "cf"): "cf", ("cb", "s"): "s",
                          ("cu", "cu"): "cu", ("s", "cu"): "s"},
        hid_cell={"ida": "ca", "idb": "cb", "u": "cu"},
        assoc=_strict_assoc(
            hmors=("ha", "hb", "f"),
            src={"ha": "a", "hb": "b", "f": "a"},
            tgt={"ha": "a", "hb": "b", "f": "b"},
            hcomp={("ha", "ha"): "ha", ("hb", "hb"): "hb",
                   ("f", "ha"): "f", ("hb", "f"): "f"},
            vid={"ha": "ca", "hb": "cb", "f": "cf"}),
        lunit={"ha": ("ca", "ca"), "hb": ("cb", "cb"), "f": ("cf", "cf")},
        runit={"ha": ("ca", "ca"), "hb": ("cb", "cb"), "f": ("cf", "cf")},
    )


def _strict_assoc(hmors, src, tgt, hcomp, vid):
    table = {}
    for f in hmors:
        for g in hmors:
            if tgt[f] != src[g]:
                continue
            for h in hmors:
                if tgt[g] != src[h]:
                    continue
                x = hcomp[(hcomp[(h, g)], f)]
                table[(f, g, h)] = (vid[x], vid[x])
    return table


def relabel(A: TableDouble, suffix: str, name: str | None = None) -> TableDouble:
    """Fresh copy with every identifier suffixed; same shape on the nose."""
    def r(x):
        return f"{x}{suffix}"

    def rk(d, nkeys):
        out = {}
        for k, v in d.items():
            kk = tuple(r(x) for x in k) if isinstance(k, tuple) else r(k)
            vv = tuple(r(x) for x in v) if isinstance(v, tuple) else r(v)
            out[kk] = vv
        return out

    return TableDouble(
        name=name or (A.name + suffix),
        objects=tuple(r(a) for a in A.objects),
        vmors=tuple(r(u) for u in A.vmors),
        vmor_src=rk(A.vmor_src, 1), vmor_tgt=rk(A.vmor_tgt, 1),
        v_identity=rk(A.v_identity, 1),
        vcomp_vmor_table=rk(A.vcomp_vmor_table, 2),
        hmors=tuple(r(f) for f in A.hmors),
        hmor_src=rk(A.hmor_src, 1), hmor_tgt=rk(A.hmor_tgt, 1),
        h_identity=rk(A.h_identity, 1),
        hcomp_hmor_table=rk(A.hcomp_hmor_table, 2),
        cells=tuple(r(c) for c in A.cells),
        cell_frames={r(c): Frame(r(fr.top), r(fr.bottom), r(fr.left), r(fr.right))
                     for c, fr in A.cell_frames.items()},
        vcomp_cell_table=rk(A.vcomp_cell_table, 2),
        vid_cell=rk(A.vid_cell, 1),
        hcomp_cell_table=rk(A.hcomp_cell_table, 2),
        hid_cell=rk(A.hid_cell, 1),
        assoc=rk(A.assoc, 3),
        lunit=rk(A.lunit, 1),
        runit=rk(A.runit, 1),
    )


def quintet_prime() -> TableDouble:
    return relabel(quintet(), "p", name="quintetP")


def nonstrict() -> TableDouble:
    """One object, endomorphisms {e, j} with unit j, non-identity unitors."""
    obj, vid = "st", "idv"
    j, e = "j", "e"
    cj, ce, t = "cj", "ce", "t"
    z2 = {ce: 0, t: 1}
    cell_of = {0: ce, 1: t}

    def hc(g, f):
        return j if (g, f) == (j, j) else e

    def hcomp_cells(r, l):
        # whiskering by the unit piece is the identity; on End(e) x End(e)
        # horizontal composition is addition in Z/2
        if r == cj and l == cj:
            return cj
        if r == cj:
            return l
        if l == cj:
            return r
        return cell_of[(z2[r] + z2[l]) % 2]

    hmors = (j, e)
    cells = (cj, ce, t)
    assoc = {}
    for f, g, h in itertools.product(hmors, repeat=3):
        if (f, g, h) == (j, j, j):
            assoc[(f, g, h)] = (cj, cj)
        elif (f, g, h) in {(e, j, j), (j, j, e)}:
            assoc[(f, g, h)] = (t, t)
        else:
            assoc[(f, g, h)] = (ce, ce)
    return TableDouble(
        name="nonstrict",
        objects=(obj,),
        vmors=(vid,), vmor_src={vid: obj}, vmor_tgt={vid: obj},
        v_identity={obj: vid}, vcomp_vmor_table={(vid, vid): vid},
        hmors=hmors,
        hmor_src={f: obj for f in hmors}, hmor_tgt={f: obj for f in hmors},
        h_identity={obj: j},
        hcomp_hmor_table={(g, f): hc(g, f) for g, f in itertools.product(hmors, hmors)},
        cells=cells,
        cell_frames={cj: Frame(j, j, vid, vid),
                     ce: Frame(e, e, vid, vid),
                     t: Frame(e, e, vid, vid)},
        vcomp_cell_table={(cj, cj): cj, (ce, ce): ce, (ce, t): t, (t, ce): t, (t, t): ce},
        vid_cell={j: cj, e: ce},
        hcomp_cell_table={(r, l): hcomp_cells(r, l)
                          for r, l in itertools.product(cells, cells)},
        hid_cell={vid: cj},
        assoc=assoc,
        lunit={j: (cj, cj), e: (t, t)},
        runit={j: (cj, cj), e: (t, t)},
    )


def corpus() -> dict:
    """All shipped presentations, keyed by file stem."""
    return {
        "terminal": terminal(),
        "unit": unit_object(),
        "vertfree": vertical_free(),
        "sigmaM": sigma_m3(),
        "sigma2": sigma_z2(),
        "quintet": quintet(),
        "quintetP": quintet_prime(),
        "nonstrict": nonstrict(),
    }
