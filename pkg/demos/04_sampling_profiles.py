"""
The profile y / (1 - x^2)
=========================

The regions of the classification are read off this function: its
crossings with +-1 are the parabolas y = +-(1 - x^2) and x = +-1 are
vertical asymptotes.  Data only, no plotting.
"""

import collections
import tempfile
from pathlib import Path

from quatrep import c_ideal, two_bridge
from quatrep.numerics import emit_csv, region_profile, sample_variety

for name, pres in (("trefoil", two_bridge(3, 1)), ("figure-eight", two_bridge(5, 3))):
    samples = sample_variety(c_ideal(pres), -2, 2, 0.01)
    rows = region_profile(samples)
    counts = collections.Counter(r.region.value for r in rows)
    print(name, len(rows), "rows", dict(sorted(counts.items())))
    for r in rows:
        if r.parabola_crossing or r.vertical:
            prof = "" if r.profile is None else f"{r.profile:.4f}"
            print(f"  x={r.x:+.2f} y={r.y:+.4f} profile={prof} region {r.region.value}")

out = Path(tempfile.gettempdir()) / "figure_eight_profile.csv"
emit_csv(sample_variety(c_ideal(two_bridge(5, 3)), -1.5, 1.5, 0.005), out)
print("wrote", out)
