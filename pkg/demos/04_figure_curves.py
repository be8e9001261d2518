"""Export the figure-family data as CSV for external plotting.

Each family tabulates one comparison the measures are judged on: crossing
curves, monotonicity counterexamples, closed-form pairs, degeneracy pairs,
and the entropy surface.

Run: python demos/04_figure_curves.py  (writes demos/output/*.csv)
"""

from pathlib import Path

from ifsim import FAMILY_IDS, sweep_curve

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

for family in FAMILY_IDS:
    steps = 51 if family in ("fig4", "fig10", "entropy-surface") else 201
    table = sweep_curve(family, steps)
    path = out_dir / f"{family}.csv"
    lines = [",".join(table.columns)]
    for row in table.rows:
        lines.append(",".join(format(v, ".17g") for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{family:<16} {table.rows.shape[0]:>6} rows -> {path}")
    print(f"    {table.description}")
