"""Symmetric multicategories, their monoidal envelope, and adjunctions.

The envelope of a finite symmetric multicategory is the symmetric strict
monoidal category of words; all of its axioms are checked up to a word
length cap.  An adjunction candidate is verified from the representability
hypothesis alone: the left adjoint's action and the counit are synthesised
through the inverse hom bijections and then re-checked.
"""

from strawcat.corpus import corpus
from strawcat.multicat import (adjunction_check, conjugation_multifunctor,
                               endo_multicat, envelope, hypothesis_check,
                               pronormal_check, strictification_adjunction_report,
                               terminal_multicat, validate_envelope,
                               validate_multicat)

T = terminal_multicat(3)
print("terminal multicategory valid:", validate_multicat(T).ok)
E = envelope(T, 3)
print("its envelope is the finite ordinals with concatenation:",
      [len(w) for w in E.objects])
print("envelope axioms:", validate_envelope(E).summary())

V = endo_multicat("endo2", ("0", "1"), 2)
C = conjugation_multifunctor(V, ("0", "1"), {"0": "1", "1": "0"})
print("\nconjugation by the swap is pronormal:", pronormal_check(C).ok)
rep, data = hypothesis_check(C, {"x": "x"}, {"x": V.ident("x")})
print("representability hypothesis:", rep.ok)
print("synthesised adjunction passes all laws:", adjunction_check(data).ok)

tables = corpus()
sub = {k: tables[k] for k in ("nonstrict", "sigma2")}
rep = strictification_adjunction_report(sub, bound=2)
print("\nstrictification adjunction on corpus members:", rep.summary())
print("(unit naturality, functoriality of st, counit naturality, triangles,")
print(" and the nullary comparison maps, which are literally identities)")
