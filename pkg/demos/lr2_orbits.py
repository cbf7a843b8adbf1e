"""Iterate the self-map on triples with Littlewood-Richardson coefficient 2."""
import itertools

from schubred import lr
from schubred.reduce import LR2Triple, lr2_orbit

start = LR2Triple((5, 4, 2, 1), (5, 3, 2, 1, 1), (5, 5, 4, 4, 3, 2, 1), 7)
orb = lr2_orbit(start)
for i, t in enumerate(orb.triples):
    mark = " <- cycle" if i == orb.cycle_start else ""
    print(i, t, mark)

# tally the eventual cycle lengths for small triples with at most 3 rows
lengths = {}
for lam, mu in itertools.combinations_with_replacement(lr.partitions_in_box(3, 3), 2):
    for nu, c in lr.lr_product(lam, mu, rows=3).items():
        if c == 2:
            o = lr2_orbit(LR2Triple(lam, mu, nu, 3), max_steps=20)
            key = None if o.cycle_start is None else len(o.triples) - o.cycle_start
            lengths[key] = lengths.get(key, 0) + 1
print("cycle lengths:", lengths)
