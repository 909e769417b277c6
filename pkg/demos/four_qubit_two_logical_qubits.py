"""
A full logical Clifford group on two encoded qubits
===================================================

The [[4,2,2]] code has SWAP-transversal circuits for H1 H2, CZ, both
CNOTs and the logical SWAP.  Embedding qubit pairs into auxiliary
qubits turns S and sqrt(X) into automorphisms as well; together the
logical actions generate all of Sp(4,2), order 720.
"""

import numpy as np

from autgates import (
    LogicalActionGroup,
    RepKind,
    RowSource,
    all_pairs,
    circuit_to_qasm,
    discover_embedded_gates,
    discover_gates,
    load,
    parse_target,
    synthesize,
    tableau,
)

code = load("n4k2d2")
t = tableau(code)

# plain SWAP-transversal discovery
plain = discover_gates(code, RepKind.THREEBLOCK, RowSource.ALL_CODEWORDS)
print("SWAP-transversal action group: order %d" % plain.group.order())
for target in ("H(0);H(1)", "CZ(0,1)", "CNOT(0,1)", "CNOT(1,0)", "SWAP(0,1)"):
    result = synthesize(plain.group, parse_target(target, 2), t)
    print("  %-12s %s" % (target, result.circuit))

# pair embeddings: every pair of qubits gets an auxiliary parity qubit,
# so S+CZ patterns (z basis) and sqrt(X)+CXX patterns (x basis) appear
# as qubit permutations of the embedded code
z_disc = discover_embedded_gates(code, all_pairs(4), RepKind.SSWAP)
x_disc = discover_embedded_gates(code, all_pairs(4), RepKind.SQRTXSWAP)
print("\nembedded gates (z basis):")
for g in z_disc.gates:
    print("  %-22s action %s" % (
        g.circuit,
        ";".join("".join(map(str, r)) for r in g.report.u_act),
    ))
print("embedded gates (x basis):")
for g in x_disc.gates:
    print("  %-28s action %s" % (
        g.circuit,
        ";".join("".join(map(str, r)) for r in g.report.u_act),
    ))

group = LogicalActionGroup(t.k)
for g in plain.gates + z_disc.gates + x_disc.gates:
    group.add(g.report.u_act, g.circuit)
print("\ncombined action group: order %d" % group.order())

# a logical S on the first encoded qubit, one CZ after interpretation
result = synthesize(group, parse_target("S(0)", 2), t)
print("\nlogical S(0) with correction first:")
print(circuit_to_qasm(result.corrected))
