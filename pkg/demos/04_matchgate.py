"""
Matchgates
==========

A matchgate acts as one 2x2 matrix on |00>, |11> and another on |01>, |10>.
Two row additions, two column additions and a diagonal core give its
diagram directly.
"""

import numpy as np

from zxsynth import MatchgateSpec, interpret, matchgate_diagram, matchgate_matrix, relative_error
from zxsynth.matchgate import random_su2, route, su2

rng = np.random.default_rng(1)

spec = MatchgateSpec(random_su2(rng), random_su2(rng))
d = matchgate_diagram(spec)
print(route(spec), "generators", d.size)
print(np.round(matchgate_matrix(spec), 3))
print("relative error", relative_error(interpret(d), matchgate_matrix(spec)))

# with a zero corner entry the direct route is unavailable and generic
# synthesis takes over
spec = MatchgateSpec(su2(np.pi / 2, 0, 0), su2(0.3, 0.1, 0.2))
d = matchgate_diagram(spec)
print(route(spec), "generators", d.size,
      "relative error", relative_error(interpret(d), matchgate_matrix(spec)))
