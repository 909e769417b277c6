"""Structured permutations to circuits, Pauli corrections, logical actions.

A column permutation that preserves the constraint rows B factors, per
qubit, into a rearrangement of that qubit's blocks (one of the six
single-qubit Clifford cosets for 3 blocks, or identity / the kind's gate
for 2 blocks) followed by a permutation of the qubits realized as SWAPs.
Conjugating the permutation matrix by the block mixer E recovers the
symplectic action on (x|z) rows; for 3-block representations the conjugate
splits as a direct sum and the leading 2n x 2n block is the symplectic part.

The Pauli correction pushes each tableau row through the circuit,
decomposes the image over the tableau basis via b = (x'|z') Omega tau^T
Omega, and multiplies the correction by the paired row (i+n mod 2n)
wherever the image sign disagrees with the signed product of tableau rows
(adjusted by i^(-aX.aZ) so that squares of mapped logical Paulis stay +I).
The corrected operator is the circuit preceded by the correction's gates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .binrep import BlockRep, RepKind, block_mixer
from .circuits import CliffordCircuit, Gate, pauli_to_gates
from .errors import (
    DimensionError,
    LengthMismatchError,
    NotDirectSumError,
    NotStructuredError,
    NotSymplecticError,
)
from .gf2 import asbits, invert, is_symplectic, mat2, solve_in_span
from .pauli import PhasedPauli
from .stabilizer import Tableau

# block rearrangement (old block b moves to slot pi[b]) -> single-qubit gate
_S3_GATES: dict[tuple[int, ...], str | None] = {
    (0, 1, 2): None,
    (1, 0, 2): "H",
    (0, 2, 1): "S",
    (2, 1, 0): "SQRTX",
    (1, 2, 0): "GAMMA",
    (2, 0, 1): "GAMMADG",
}

_S2_GATES = {
    RepKind.HSWAP: "H",
    RepKind.SSWAP: "S",
    RepKind.SQRTXSWAP: "SQRTX",
}


def permutation_matrix(images) -> np.ndarray:
    """P with P[i, images[i]] = 1, acting on row vectors from the right."""
    images = np.asarray(images, dtype=np.int64)
    m = images.shape[0]
    if images.ndim != 1 or np.any(np.sort(images) != np.arange(m)):
        raise DimensionError("images do not form a permutation")
    p = np.zeros((m, m), dtype=np.uint8)
    p[np.arange(m), images] = 1
    return p


def perm_to_symplectic(rep: BlockRep, images) -> np.ndarray:
    """Symplectic matrix of a structured column permutation.

    Conjugates the permutation matrix by the block mixer E; a 3-block
    conjugate must split as [U 0; 0 W] and the 2n x 2n block U is returned.
    """
    n = rep.n
    width = rep.blocks * n
    if len(images) != width:
        raise DimensionError(f"permutation on {len(images)} columns, expected {width}")
    e = block_mixer(rep.kind, n)
    conj = mat2(mat2(e, permutation_matrix(images)), invert(e))
    if rep.blocks == 3 and (conj[: 2 * n, 2 * n :].any() or conj[2 * n :, : 2 * n].any()):
        raise NotDirectSumError("conjugated permutation mixes the auxiliary block")
    u = conj[: 2 * n, : 2 * n]
    if not is_symplectic(u):
        raise NotSymplecticError("conjugated permutation is not symplectic")
    return u


def _decode_structure(rep: BlockRep, images) -> tuple[list[tuple[int, ...]], np.ndarray]:
    """Per-qubit block rearrangements and the induced qubit permutation."""
    n, blocks = rep.n, rep.blocks
    images = [int(i) for i in images]
    sigma = np.zeros(n, dtype=np.int64)
    local: list[tuple[int, ...]] = []
    for q in range(n):
        cols = [images[b * n + q] for b in range(blocks)]
        target = cols[0] % n
        if any(c % n != target for c in cols):
            raise NotStructuredError(f"columns of qubit {q} scatter across qubits")
        sigma[q] = target
        local.append(tuple(c // n for c in cols))
    if np.any(np.sort(sigma) != np.arange(n)):
        raise NotStructuredError("induced qubit map is not a permutation")
    return local, sigma


def _perm_cycles(sigma: np.ndarray) -> list[list[int]]:
    """Nontrivial cycles [a1, a2, ...] with sigma[ai] = a(i+1)."""
    seen = [False] * len(sigma)
    cycles: list[list[int]] = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        seen[start] = True
        if sigma[start] == start:
            continue
        cyc = [start]
        nxt = int(sigma[start])
        while nxt != start:
            seen[nxt] = True
            cyc.append(nxt)
            nxt = int(sigma[nxt])
        cycles.append(cyc)
    return cycles


def perm_to_circuit(rep: BlockRep, images) -> CliffordCircuit:
    """Single-qubit gates plus SWAPs realizing a structured permutation.

    Emits each qubit's decoded gate, then one SWAP chain per cycle of the
    qubit permutation: the cycle (a1 a2 ... am) becomes SWAP(a1,a2),
    SWAP(a1,a3), ..., SWAP(a1,am).
    """
    n = rep.n
    if len(images) != rep.blocks * n:
        raise DimensionError(f"permutation on {len(images)} columns, expected {rep.blocks * n}")
    local, sigma = _decode_structure(rep, images)
    gates: list[Gate] = []
    for q in range(n):
        if rep.blocks == 3:
            name = _S3_GATES[local[q]]
        else:
            name = _S2_GATES[rep.kind] if local[q] == (1, 0) else None
        if name is not None:
            gates.append(Gate(name, (q,)))
    for cyc in _perm_cycles(sigma):
        gates.extend(Gate("SWAP", (cyc[0], other)) for other in cyc[1:])
    circ = CliffordCircuit(n, tuple(gates))
    if not np.array_equal(circ.symplectic(), perm_to_symplectic(rep, images)):  # pragma: no cover
        raise NotStructuredError("decoded circuit does not reproduce the permutation")
    return circ


def conjugate(circ: CliffordCircuit, p: PhasedPauli) -> PhasedPauli:
    """circ . p . circ^dagger with exact phase, gates applied left to right."""
    return circ.conjugate(p)


@dataclass
class LogicalReport:
    """Outcome of certifying a candidate logical circuit against a tableau."""

    valid: bool
    pauli_correction: PhasedPauli | None = None
    u_act: np.ndarray | None = None
    action_word: str | None = None
    reason: str | None = None


def pauli_correct_and_action(t: Tableau, circ: CliffordCircuit) -> LogicalReport:
    """Pauli correction and 2k x 2k logical action of a candidate circuit.

    Invalid (valid=False) when any stabilizer or logical row image picks up
    a destabilizer component, or a stabilizer row image hits the logicals.
    Otherwise returns the correction Pauli (to apply BEFORE the circuit)
    that restores every row sign, and the logical action rows (aX|aZ).
    """
    n, k = t.n, t.k
    if circ.n != n:
        raise LengthMismatchError(f"circuit on {circ.n} qubits, code on {n}")
    tau_inv = t.inverse()
    correction = PhasedPauli.identity(n)
    u_act = np.zeros((2 * k, 2 * k), dtype=np.uint8)
    for i in (*t.stab_rows, *t.logical_x_rows, *t.logical_z_rows):
        mapped = circ.conjugate(t.row_pauli(i))
        b = mat2(mapped.vector()[None, :], tau_inv)[0]
        a_x = b[n - k : n]
        a_z = b[2 * n - k :]
        if b[n : 2 * n - k].any():
            return LogicalReport(valid=False, reason=f"row {i} image leaves the code space")
        if i < n - k and (a_x.any() or a_z.any()):
            return LogicalReport(valid=False, reason=f"stabilizer row {i} image hits the logicals")
        prod = PhasedPauli.identity(n)
        for j in np.nonzero(b)[0]:
            prod = prod.multiply(t.row_pauli(int(j)))
        v = (prod.phase - int(a_x.astype(np.int64) @ a_z.astype(np.int64))) % 4
        if mapped.phase != v:
            # relative phase is always a sign; the paired row flips it
            correction = correction.multiply(t.row_pauli((i + n) % (2 * n)))
        if i >= n - k:
            row = i - (n - k) if i < n else i - 2 * (n - k)
            u_act[row, :k] = a_x
            u_act[row, k:] = a_z
    return LogicalReport(
        valid=True,
        pauli_correction=correction,
        u_act=u_act,
        action_word=action_name(u_act),
    )


def corrected_circuit(report: LogicalReport, circ: CliffordCircuit) -> CliffordCircuit:
    """The certified operator: Pauli correction gates, then the circuit."""
    return pauli_to_gates(report.pauli_correction) + circ


def correction_is_logical(t: Tableau, report: LogicalReport) -> bool:
    """Is the computed correction a logical Pauli (or identity)?

    A correction with destabilizer components means some stabilizer sign
    flipped, so the raw circuit moves the code space; a correction built
    purely from logical Paulis means the raw circuit is a logical
    operator as it stands, up to logical Pauli.
    """
    if not report.valid:
        return False
    n, k = t.n, t.k
    b = mat2(report.pauli_correction.vector()[None, :], t.inverse())[0]
    return not b[n : 2 * n - k].any()


def verify_preserves_stabilizers(t: Tableau, circ: CliffordCircuit) -> bool:
    """Independent check that each signed check maps to a +1-signed stabilizer.

    Uses row-reduction membership over the stabilizer rows only, sharing no
    decomposition path with pauli_correct_and_action.
    """
    stab = t.stabilizers
    for i in t.stab_rows:
        mapped = circ.conjugate(t.row_pauli(i))
        coeff = solve_in_span(stab, mapped.vector())
        if coeff is None:
            return False
        prod = PhasedPauli.identity(t.n)
        for j in np.nonzero(coeff)[0]:
            prod = prod.multiply(t.row_pauli(int(j)))
        if prod.phase != mapped.phase:
            return False
    return True


_NAMED_GATES_1Q = ("H", "S", "SDG", "SQRTX", "GAMMA", "GAMMADG")


@lru_cache(maxsize=8)
def _named_actions(k: int) -> dict[bytes, str]:
    """Names for logical symplectics reachable in at most two gates, k <= 3."""
    gates: list[Gate] = []
    for q in range(k):
        gates.extend(Gate(name, (q,)) for name in _NAMED_GATES_1Q)
    for a in range(k):
        for c in range(a + 1, k):
            gates.append(Gate("CNOT", (a, c)))
            gates.append(Gate("CNOT", (c, a)))
            gates.extend(Gate(name, (a, c)) for name in ("SWAP", "CZ", "CXX"))
    table = {np.eye(2 * k, dtype=np.uint8).tobytes(): "I"}
    words = [(g,) for g in gates]
    words.extend((g1, g2) for g1 in gates for g2 in gates)
    for word in words:  # singles first, so shorter names win
        key = CliffordCircuit(k, word).symplectic().tobytes()
        table.setdefault(key, "; ".join(str(g) for g in word))
    return table


def action_name(u_act: np.ndarray) -> str | None:
    """Readable name of a logical action when k <= 3 and the word is short."""
    if u_act.shape[0] == 0:
        return "I"
    if u_act.shape[0] > 6:
        return None
    return _named_actions(u_act.shape[0] // 2).get(asbits(u_act).tobytes())
