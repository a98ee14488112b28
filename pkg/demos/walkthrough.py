"""Walk through one simultaneous Pade problem with every solver.

The instance lives over GF(2): three series modulo x^5 and degree bounds
N = (5, 3, 4, 5).  Each solver returns a compact specification (denominator
polynomials lambda plus their negative shifted degrees delta); expanding the
numerators rem(lambda * S_i, g_i) recovers a full basis of the solution
space.  Run with:  python3 demos/walkthrough.py
"""

from simpade import (complete, direct_sim_pade, duality_sim_pade,
                     oracle_solution_space, recursive_sim_pade,
                     spec_matches_oracle, validate_instance)

instance = validate_instance(
    p=2,
    series=[[1, 0, 1, 0, 1],    # x^4 + x^2 + 1
            [1, 0, 0, 0, 1],    # x^4 + 1
            [1, 0, 0, 1, 1]],   # x^4 + x^3 + 1
    moduli=[[0, 0, 0, 0, 0, 1]] * 3,
    bounds=(5, 3, 4, 5),
)

print("Instance: n = 3 series over GF(2), all moduli x^5, N = (5, 3, 4, 5)")
print()

space = oracle_solution_space(instance)
print(f"Brute-force oracle: solution space has dimension {space.dim}")
print()

for name, solve in [("direct (stacked order basis)", direct_sim_pade),
                    ("duality (adjoint row)", duality_sim_pade),
                    ("recursive (split and intersect)", recursive_sim_pade)]:
    spec = solve(instance)
    print(f"{name}:")
    for lam, delta in zip(spec.lambdas, spec.deltas):
        print(f"  lambda = {lam}   (delta = {delta})")
    completion = complete(spec.lambdas, instance)
    print("  completion rows (lambda | phi_1 | phi_2 | phi_3):")
    for row in completion.rows:
        print("    " + " | ".join(str(e) for e in row))
    agrees = spec_matches_oracle(spec, instance)
    print(f"  spans the oracle nullspace: {agrees}")
    print()

print("All three solvers describe the same two-dimensional solution space,")
print("generally through different generating sets.")
