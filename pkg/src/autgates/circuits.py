"""Clifford circuits, their symplectic matrices and exact Pauli conjugation.

Sign conventions (fixed once, everything else is derived from them):

  H X H = Z     H Y H = -Y     S X Sd = Y     S Y Sd = -X
  SQRTX Z SQRTXd = -Y          GAMMA = H Sd   (X -> Y -> Z -> X)

Single-qubit conjugation acts on (phase, a, b, c) := (phase, x, z, x^z):

  H:      phase += c - a - b,  (x, z) <- (b, a)
  S:      phase += a,          (x, z) <- (a, c)
  SDG:    phase -= a,          (x, z) <- (a, c)
  SQRTX:  phase -= b,          (x, z) <- (c, b)
  GAMMA:  phase += c - b,      (x, z) <- (c, a)
  GAMMADG:phase += c - a,      (x, z) <- (b, c)

Two-qubit gates are defined by their images of X0, X1, Z0, Z1 (all with +
sign for SWAP/CNOT/CZ/CXX) and extended multiplicatively; the tables are
checked against a dense 4x4 unitary conjugation oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError
from .gf2 import asbits
from .pauli import PhasedPauli

ONE_QUBIT_GATES = ("H", "S", "SDG", "SQRTX", "GAMMA", "GAMMADG", "X", "Y", "Z", "I")
TWO_QUBIT_GATES = ("SWAP", "CNOT", "CZ", "CXX")
TWO_QUBIT_ENTANGLERS = ("CNOT", "CZ", "CXX")

# images of the local generators X0, X1, Z0, Z1 as (phase, x2, z2)
_TWO_QUBIT_IMAGES: dict[str, list[tuple[int, tuple[int, int], tuple[int, int]]]] = {
    "SWAP": [
        (0, (0, 1), (0, 0)),  # X0 -> X1
        (0, (1, 0), (0, 0)),  # X1 -> X0
        (0, (0, 0), (0, 1)),  # Z0 -> Z1
        (0, (0, 0), (1, 0)),  # Z1 -> Z0
    ],
    "CNOT": [
        (0, (1, 1), (0, 0)),  # X0 -> X0 X1
        (0, (0, 1), (0, 0)),  # X1 -> X1
        (0, (0, 0), (1, 0)),  # Z0 -> Z0
        (0, (0, 0), (1, 1)),  # Z1 -> Z0 Z1
    ],
    "CZ": [
        (0, (1, 0), (0, 1)),  # X0 -> X0 Z1
        (0, (0, 1), (1, 0)),  # X1 -> Z0 X1
        (0, (0, 0), (1, 0)),
        (0, (0, 0), (0, 1)),
    ],
    "CXX": [
        (0, (1, 0), (0, 0)),
        (0, (0, 1), (0, 0)),
        (0, (0, 1), (1, 0)),  # Z0 -> Z0 X1
        (0, (1, 0), (0, 1)),  # Z1 -> X0 Z1
    ],
}

_GATE_INVERSE = {
    "H": ("H",),
    "S": ("SDG",),
    "SDG": ("S",),
    "SQRTX": ("SQRTX", "X"),  # SQRTX**3 = SQRTX * X exactly
    "GAMMA": ("GAMMADG",),
    "GAMMADG": ("GAMMA",),
    "X": ("X",),
    "Y": ("Y",),
    "Z": ("Z",),
    "I": (),
    "SWAP": ("SWAP",),
    "CNOT": ("CNOT",),
    "CZ": ("CZ",),
    "CXX": ("CXX",),
}


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.name in ONE_QUBIT_GATES:
            if len(self.qubits) != 1:
                raise ParseError(f"{self.name} takes one qubit, got {self.qubits}")
        elif self.name in TWO_QUBIT_GATES:
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ParseError(f"{self.name} takes two distinct qubits, got {self.qubits}")
        else:
            raise ParseError(f"unknown gate {self.name!r}")

    def __str__(self) -> str:
        return " ".join([self.name, *map(str, self.qubits)])


def _conj_one(gate: str, p: PhasedPauli, q: int) -> PhasedPauli:
    a = int(p.x[q])
    b = int(p.z[q])
    c = a ^ b
    phase = p.phase
    x = np.array(p.x)
    z = np.array(p.z)
    if gate == "H":
        phase += c - a - b
        x[q], z[q] = b, a
    elif gate == "S":
        phase += a
        x[q], z[q] = a, c
    elif gate == "SDG":
        phase -= a
        x[q], z[q] = a, c
    elif gate == "SQRTX":
        phase -= b
        x[q], z[q] = c, b
    elif gate == "GAMMA":
        phase += c - b
        x[q], z[q] = c, a
    elif gate == "GAMMADG":
        phase += c - a
        x[q], z[q] = b, c
    elif gate == "X":
        phase += 2 * b
    elif gate == "Y":
        phase += 2 * c
    elif gate == "Z":
        phase += 2 * a
    elif gate == "I":
        pass
    else:  # pragma: no cover
        raise ParseError(f"unknown gate {gate!r}")
    return PhasedPauli(phase, x, z)


def _conj_two(gate: str, p: PhasedPauli, q0: int, q1: int) -> PhasedPauli:
    images = _TWO_QUBIT_IMAGES[gate]
    local = PhasedPauli.identity(2)
    # local factor X0^x0 X1^x1 Z0^z0 Z1^z1, conjugated term by term
    sel = (p.x[q0], p.x[q1], p.z[q0], p.z[q1])
    for present, (ph, xi, zi) in zip(sel, images):
        if present:
            local = local.multiply(PhasedPauli(ph, xi, zi))
    x = np.array(p.x)
    z = np.array(p.z)
    x[[q0, q1]] = local.x
    z[[q0, q1]] = local.z
    return PhasedPauli(p.phase + local.phase, x, z)


def conjugate_gate(gate: Gate, p: PhasedPauli) -> PhasedPauli:
    """Image U p Udag for one gate, with exact phase."""
    if gate.name in ONE_QUBIT_GATES:
        return _conj_one(gate.name, p, gate.qubits[0])
    return _conj_two(gate.name, p, gate.qubits[0], gate.qubits[1])


def _apply_symplectic_cols(u: np.ndarray, gate: Gate, n: int) -> None:
    """Right-multiply u by the gate's symplectic matrix, in place."""
    g = gate.name
    if g in ("X", "Y", "Z", "I"):
        return
    if g in ONE_QUBIT_GATES:
        (i,) = gate.qubits
        xi, zi = i, n + i
        if g == "H":
            u[:, [xi, zi]] = u[:, [zi, xi]]
        elif g in ("S", "SDG"):
            u[:, zi] ^= u[:, xi]
        elif g == "SQRTX":
            u[:, xi] ^= u[:, zi]
        elif g == "GAMMA":
            old_x = u[:, xi].copy()
            u[:, xi] ^= u[:, zi]
            u[:, zi] = old_x
        elif g == "GAMMADG":
            old_x = u[:, xi].copy()
            u[:, xi] = u[:, zi]
            u[:, zi] ^= old_x
        return
    i, j = gate.qubits
    if g == "SWAP":
        u[:, [i, j]] = u[:, [j, i]]
        u[:, [n + i, n + j]] = u[:, [n + j, n + i]]
    elif g == "CNOT":
        u[:, j] ^= u[:, i]
        u[:, n + i] ^= u[:, n + j]
    elif g == "CZ":
        u[:, n + i] ^= u[:, j]
        u[:, n + j] ^= u[:, i]
    elif g == "CXX":
        u[:, i] ^= u[:, n + j]
        u[:, j] ^= u[:, n + i]


@dataclass(frozen=True)
class CliffordCircuit:
    """A gate list applied left to right on n qubits."""

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for g in self.gates:
            if any(q < 0 or q >= self.n for q in g.qubits):
                raise ParseError(f"gate {g} out of range for {self.n} qubits")

    def __add__(self, other: "CliffordCircuit") -> "CliffordCircuit":
        if self.n != other.n:
            raise ParseError(f"cannot concatenate circuits on {self.n} and {other.n} qubits")
        return CliffordCircuit(self.n, self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def conjugate(self, p: PhasedPauli) -> PhasedPauli:
        """Push p through the circuit: U p Udag with U = gates applied in order."""
        for g in self.gates:
            p = conjugate_gate(g, p)
        return p

    def symplectic(self) -> np.ndarray:
        """The 2n x 2n binary matrix acting on Pauli rows (x|z) from the right."""
        u = np.eye(2 * self.n, dtype=np.uint8)
        for g in self.gates:
            _apply_symplectic_cols(u, g, self.n)
        return u

    def inverse(self) -> "CliffordCircuit":
        gates: list[Gate] = []
        for g in reversed(self.gates):
            for name in _GATE_INVERSE[g.name]:
                gates.append(Gate(name, g.qubits[:1] if name in ONE_QUBIT_GATES else g.qubits))
        return CliffordCircuit(self.n, tuple(gates))

    def two_qubit_count(self) -> int:
        """Number of entangling gates (CNOT, CZ, CXX); SWAPs are not counted."""
        return sum(1 for g in self.gates if g.name in TWO_QUBIT_ENTANGLERS)

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gates) + ("\n" if self.gates else "")

    def __str__(self) -> str:
        return "; ".join(str(g) for g in self.gates) or "I"


def circuit_from_text(text: str, n: int | None = None) -> CliffordCircuit:
    """Parse one gate per line: 'H 0', 'SWAP 1 4', 'CNOT 0 2'; '#' comments."""
    gates: list[Gate] = []
    maxq = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        name = parts[0].upper()
        if name not in ONE_QUBIT_GATES and name not in TWO_QUBIT_GATES:
            raise ParseError(f"line {lineno}: unknown gate {parts[0]!r}")
        try:
            qubits = tuple(int(tok) for tok in parts[1:])
        except ValueError:
            raise ParseError(f"line {lineno}: bad qubit index in {raw!r}") from None
        if any(q < 0 for q in qubits):
            raise ParseError(f"line {lineno}: negative qubit index in {raw!r}")
        gates.append(Gate(name, qubits))
        maxq = max(maxq, *qubits)
    if n is None:
        n = maxq + 1 if maxq >= 0 else 0
    return CliffordCircuit(n, tuple(gates))


def pauli_to_gates(p: PhasedPauli) -> CliffordCircuit:
    """Pauli gate layer realizing p up to global phase."""
    gates = []
    for q in range(p.n):
        a, b = int(p.x[q]), int(p.z[q])
        if a and b:
            gates.append(Gate("Y", (q,)))
        elif a:
            gates.append(Gate("X", (q,)))
        elif b:
            gates.append(Gate("Z", (q,)))
    return CliffordCircuit(p.n, tuple(gates))


_QASM_SIMPLE = {
    "H": "h",
    "S": "s",
    "SDG": "sdg",
    "X": "x",
    "Y": "y",
    "Z": "z",
    "I": "id",
    "CZ": "cz",
    "SWAP": "swap",
    "CNOT": "cx",
}


def circuit_to_qasm(circ: CliffordCircuit) -> str:
    """OpenQASM 2 text; SQRTX/GAMMA via H,S; CXX as an H-conjugated CZ."""
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circ.n}];"]
    for g in circ.gates:
        qs = [f"q[{q}]" for q in g.qubits]
        if g.name in _QASM_SIMPLE:
            lines.append(f"{_QASM_SIMPLE[g.name]} {', '.join(qs)};")
        elif g.name == "SQRTX":
            lines += [f"h {qs[0]};", f"s {qs[0]};", f"h {qs[0]};"]
        elif g.name == "GAMMA":  # H Sdg, rightmost applied first
            lines += [f"sdg {qs[0]};", f"h {qs[0]};"]
        elif g.name == "GAMMADG":
            lines += [f"h {qs[0]};", f"s {qs[0]};"]
        elif g.name == "CXX":
            lines += [
                f"h {qs[0]};",
                f"h {qs[1]};",
                f"cz {qs[0]}, {qs[1]};",
                f"h {qs[0]};",
                f"h {qs[1]};",
            ]
        else:  # pragma: no cover
            raise ParseError(f"no qasm form for {g.name}")
    return "\n".join(lines) + "\n"


def gate_symplectic(name: str, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Symplectic matrix of a single gate on n qubits."""
    u = np.eye(2 * n, dtype=np.uint8)
    _apply_symplectic_cols(u, Gate(name, qubits), n)
    return asbits(u)
