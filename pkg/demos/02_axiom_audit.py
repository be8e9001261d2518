"""Audit the strict-distance axioms for each registered measure.

The strict JS distance passes everything; the rivals fail strict chain
monotonicity (S4') and endpoint-only maximality (S5) with concrete
witnesses, and the raw J-divergence additionally fails the triangle
inequality and never reaches 1.

Run: python demos/02_axiom_audit.py
"""

from ifsim import AuditConfig, audit_distance, audit_entropy, get_measure

config = AuditConfig(grid_step=0.02, random_pairs=20_000, random_triples=20_000,
                     chain_samples=5_000, seed=20220714)

for name, params in (("wu", {}), ("wu-lambda", {"lam": 1 / 3}),
                     ("xiao", {}), ("yc", {}), ("jgamma", {"gamma": 1.0})):
    report = audit_distance(get_measure(name, **params), config)
    print(report.to_text())
    print()

print(audit_entropy(config).to_text())
