"""Spectral shift of echoes from a moving scatterer.

A pure carrier insonifies one scatterer receding at constant speed; the
received spectrum shifts by the two-way amount 2*fc*(v/c)*cos(theta),
where theta is the angle between the motion and each element's line of
sight.  The one-way fc*v/c line is plotted alongside for comparison.
"""

import math
from pathlib import Path

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ceui.scenarios import apply_overrides, load_config, doppler_sweep

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

config_path = OUT / "doppler.ini"
config_path.write_text("[medium]\npreset = oscillating\n")
config = apply_overrides(load_config(config_path), out_dir=str(OUT / "doppler"))
result = doppler_sweep(config)

v = np.array(result["velocities"])
measured = np.abs(result["measured_hz"])
one_way = np.array(result["reference_hz"])
z0 = config.doppler.z0
cos_theta = z0 / math.hypot(z0, config.probe.dx / 2)
two_way = 2 * one_way * cos_theta

plt.figure(figsize=(7, 5))
plt.plot(v, one_way / 1e3, "o-", label="one-way fc*v/c")
plt.plot(v, two_way / 1e3, "s-", label="two-way 2*fc*v*cos(theta)/c")
plt.plot(v, measured / 1e3, "x--", ms=10, label="measured on synthesized RF")
plt.xlabel("scatterer speed (m/s)")
plt.ylabel("spectral shift (kHz)")
plt.legend()
plt.grid(alpha=0.3)
plt.tight_layout()
plt.savefig(OUT / "doppler_sweep.png", dpi=130)

for vi, mi, ri in zip(v, measured, two_way):
    print(f"v={vi:4.1f} m/s  measured {mi/1e3:7.2f} kHz   "
          f"two-way model {ri/1e3:7.2f} kHz")
print(f"figures in {OUT}")
