"""A finite pseudo double category is a bundle of lookup tables.

This walkthrough builds the deliberately non-strict one-object bicategory
from the shipped corpus, pokes at its tables, and shows the validator
catching a broken coherence cell.
"""

import dataclasses

from strawcat import validate, is_strict, is_bicategory
from strawcat.corpus import nonstrict

N = nonstrict()
print(f"{N.name}: {len(N.objects)} object, {len(N.hmors)} horizontal morphisms,"
      f" {len(N.cells)} cells")
print("is a bicategory:", is_bicategory(N))
print("is strict:", is_strict(N), "(the unitors at e are the twist cell t)")
print("left unitor at e:", N.lunit_of("e")[0])

rep = validate(N)
print("\nvalidate:", rep.summary())
print("the report is empty exactly when every axiom instance holds;")
print("the checker enumerates all composable tuples, nothing is sampled.")

# break one associator and watch the pentagon fail with a witness
broken = dataclasses.replace(N, assoc={**N.assoc, ("e", "j", "j"): ("ce", "ce")})
rep = validate(broken)
print("\nafter breaking assoc at (e,j,j):")
print(rep.render(4))
