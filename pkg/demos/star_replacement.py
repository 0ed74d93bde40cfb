"""
Pushing a disk map below degree d
=================================

The target is a full triangle on a, b, c in which a face has degree 1 exactly
when it contains b. A path p0 - p1 - p2 maps onto a, b, c with its endpoints
already in degree 0. The middle vertex is bad: it maps onto the pillar {b}.
Surgery replaces its star by a filling of its link inside the low link of b.
"""

import random

from spheredeg import DiskMap, bad_simplices, build_complex, surgery_descent
from spheredeg.filtration import from_function
from spheredeg.instances import planted_instance
from spheredeg.simplicial import simplex
from spheredeg.surgery import path_filler

F = from_function(simplex("abc"), lambda s: 1 if "b" in s else 0)
disk = build_complex([["p0", "p1"], ["p1", "p2"]])
f = DiskMap(disk, build_complex([["p0"], ["p2"]]), F, {"p0": "a", "p1": "b", "p2": "c"})

print("bad simplices:", [(sorted(b.omega), sorted(b.image), b.degree) for b in bad_simplices(f, 0)])
res = surgery_descent(f, 0, path_filler)
print("trace:", [t.measure for t in res.trace])
print("new disk:", [sorted(e) for e in res.disk_map.disk.sorted_facets()], res.disk_map.vertex_map)

# A generated instance: a random 2-disk mapped into a filtration whose low
# links all contain a common hub vertex.
rng = random.Random(37)
f, d = planted_instance(rng)
res = surgery_descent(f, d, check_invariants=True)
print(f"\n{len(f.disk.facets)} triangles, max degree {f.max_image_degree()} -> "
      f"{res.disk_map.max_image_degree()} (d = {d}) in {len(res.trace)} steps")
for step in res.trace:
    print("  ", step.measure, sorted(step.omega))
