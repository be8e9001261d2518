"""Run the whole golden-value scenario catalog and print each report.

Ten of the eleven scenarios pass in full.  tab2-distances reports four
published values (cases 3 and 4 of the pairwise comparison table) that are
inconsistent with their own stated inputs; the runner shows the recomputed
values instead of widening tolerances.

Run: python demos/05_repro_scenarios.py
"""

from ifsim import run_all_scenarios

reports = run_all_scenarios()
for report in reports:
    print(report.to_text())
    print()

passed = sum(r.passed for r in reports)
print(f"{passed}/{len(reports)} scenarios fully passed")
