"""Fidelity and success-probability maps over the photon-count outcomes.

Sweeps every outcome (n, n') up to a grid bound, prints compact maps, and
writes the plot-ready data to CSV and JSON next to this script.
"""

import json
import pathlib

from condteleport import (
    SqueezeParams,
    grid_csv_rows,
    grid_to_json_dict,
    make_state,
    sweep_grid,
)

psi_in = make_state([0, 2 ** -0.5, 0, 1j * 2 ** -0.5], 60)
squeeze = SqueezeParams(1.5)
n_max = 12

grid = sweep_grid(psi_in, squeeze, squeeze, n_max, workers=4)

print(f"outcome grid up to n, n' = {n_max}  (|alpha| = |beta| = 1.5)")
print()
print("fidelity map (rows n, columns n'; '.' marks impossible outcomes):")
for n in range(n_max + 1):
    cells = []
    for npr in range(n_max + 1):
        f, p = grid.entries[(n, npr)]
        cells.append(" ." if p == 0 else f"{f:.2f}"[1:] if f < 1 else "1.0")
    print(f"  n={n:2d}  " + " ".join(cells))
print()
print("probability map (x1000):")
for n in range(n_max + 1):
    cells = []
    for npr in range(n_max + 1):
        p = grid.entries[(n, npr)][1]
        cells.append(f"{1000 * p:4.1f}")
    print(f"  n={n:2d}  " + " ".join(cells))
print()
print(f"probability captured by this grid: {grid.total_probability:.4f}")
print("(the counts spread far beyond this range; coverage > 0.999 needs n_max ~ 320)")

out_dir = pathlib.Path(__file__).resolve().parent
(out_dir / "outcome_grid.csv").write_text("\n".join(grid_csv_rows(grid)) + "\n")
(out_dir / "outcome_grid.json").write_text(json.dumps(grid_to_json_dict(grid), indent=2))
print("wrote outcome_grid.csv and outcome_grid.json")
