"""Twenty brief blinks of a static scatterer: who catches them?

The scatterer at 30 mm turns on for 10-40 us at a time.  Pulse-echo
insonifies the medium a few microseconds every repetition interval and
misses most blinks; the continuous emission interacts with every one.
"""

from pathlib import Path

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ceui import count_blinks, preset
from ceui.io import read_mmode_csv
from ceui.scenarios import apply_overrides, load_config, run_scenario

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

config_path = OUT / "blinking.ini"
config_path.write_text("[medium]\npreset = blinking\n")
config = apply_overrides(load_config(config_path), out_dir=str(OUT / "blinking"))
run_scenario(config, threads=2)

truth = preset("blinking", seed=config.medium_seed, duration=1.1e-3)
intervals = truth[0].echogenicity.intervals

fig, axes = plt.subplots(3, 1, figsize=(11, 8), sharex=True)
for t_on, t_off, amp in intervals:
    axes[0].axvspan(t_on * 1e6, t_off * 1e6, color="tab:blue", alpha=0.6)
axes[0].set_ylabel("ground truth")
axes[0].set_yticks([])

for ax, tag, label in (
    (axes[1], "pe", "pulse echo"),
    (axes[2], "ceui_mf", "continuous emission"),
):
    image = read_mmode_csv(OUT / "blinking" / f"mmode_{tag}.csv")
    row = image.values[np.argmin(np.abs(image.depth_grid - 0.030))]
    ax.plot(image.time_grid * 1e6, row / row.max())
    ax.axhline(0.3, color="gray", ls="--", lw=0.8)
    count, _ = count_blinks(image, 0.030, 0.3)
    ax.set_ylabel(label)
    ax.set_title(f"{label}: {count} of {len(intervals)} blinks detected")
axes[2].set_xlabel("slow time (us)")
fig.tight_layout()
fig.savefig(OUT / "blinking_rows.png", dpi=130)
print(f"figures in {OUT}")
