"""Embedded codes: auxiliary parity qubits that turn CNOT and CZ into
qubit permutations.

Each auxiliary qubit tracks the parity of one pair of original qubits,
recorded as a weight-two row of a pairing matrix M.  With Z-type
auxiliaries (basis "z") the enlarged check matrix is

    G_V = [ G_X  G_X M^T  G_Z  0 ]
          [  0      0      M   I ]

and a phase gate on an auxiliary corresponds to S_a S_b CZ_ab on its
pair, while swapping an auxiliary with one of its members corresponds
to a CNOT.  The X-type dual (basis "x") uses auxiliaries holding X
parities,

    G_V = [ G_X   0   G_Z  G_Z M^T ]
          [  M    I    0      0    ]

so that SQRTX on an auxiliary corresponds to SQRTX_a SQRTX_b CXX_ab.
Automorphism discovery runs on the embedded code; interpretation maps
each embedded circuit back to the original qubits and is then checked
semantically: the interpreted circuit must move every lifted stabilizer
and logical generator exactly as the embedded circuit does, up to an
embedded stabilizer element with its exact sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .autsearch import AutSearchResult, matrix_automorphisms
from .binrep import (
    DEFAULT_CODEWORD_CAP,
    RepKind,
    RowSource,
    build,
    row_augmented_matrix,
)
from .circuits import CliffordCircuit, Gate
from .cliffordmap import LogicalReport, pauli_correct_and_action, perm_to_circuit
from .errors import (
    DimensionError,
    EmbeddedInterpretationError,
    ParseError,
)
from .gf2 import asbits, mat2, solve_in_span
from .pauli import PhasedPauli
from .stabilizer import StabilizerCode, Tableau, tableau


@dataclass(frozen=True)
class EmbeddingSpec:
    """Qubit pairs receiving auxiliary parity qubits."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.pairs:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise DimensionError("pair (%d, %d) out of range for n=%d" % (a, b, self.n))
            if a == b:
                raise DimensionError("pair (%d, %d) must join two distinct qubits" % (a, b))
            key = frozenset((a, b))
            if key in seen:
                raise DimensionError("pair (%d, %d) appears twice" % (a, b))
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def matrix(self) -> np.ndarray:
        """The m x n pairing matrix; row j marks the members of pair j."""
        mat = np.zeros((self.m, self.n), dtype=np.uint8)
        for j, (a, b) in enumerate(self.pairs):
            mat[j, a] = 1
            mat[j, b] = 1
        return mat


def all_pairs(n: int) -> EmbeddingSpec:
    """Every qubit pair, in lexicographic order."""
    return EmbeddingSpec(
        n, tuple((a, b) for a in range(n) for b in range(a + 1, n))
    )


def parse_pairs_file(text: str, n: int) -> EmbeddingSpec:
    """Parse pair lines "i j" (0-based), with '#' comments."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("line %d: expected two qubit indices" % lineno)
        pairs.append((int(parts[0]), int(parts[1])))
    return EmbeddingSpec(n, tuple(pairs))


@dataclass
class EmbeddedCode:
    """An enlarged code with one parity auxiliary per pair."""

    base: StabilizerCode
    spec: EmbeddingSpec
    basis: str  # "z": Z-type auxiliaries (S/CZ); "x": X-type (SQRTX/CXX)
    code: StabilizerCode

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def g_v(self) -> np.ndarray:
        return self.code.check_matrix

    def aux_pauli(self, j: int) -> PhasedPauli:
        """The parity stabilizer of auxiliary j."""
        row = np.zeros(self.n + self.m, dtype=np.uint8)
        a, b = self.spec.pairs[j]
        row[a] = row[b] = 1
        row[self.n + j] = 1
        zero = np.zeros(self.n + self.m, dtype=np.uint8)
        if self.basis == "z":
            return PhasedPauli(0, zero, row)
        return PhasedPauli(0, row, zero)


def lift_pauli(emb: EmbeddedCode, p: PhasedPauli) -> PhasedPauli:
    """Conjugate p through the embedding circuit, exactly.

    With Z-type auxiliaries each X factor copies onto the auxiliaries of
    its pairs; with X-type auxiliaries the Z factors do.  The phase
    exponent is unchanged in both cases.
    """
    if p.n != emb.n:
        raise DimensionError("pauli acts on %d qubits, expected %d" % (p.n, emb.n))
    mt = emb.spec.matrix.T
    zero = np.zeros(emb.m, dtype=np.uint8)
    if emb.basis == "z":
        x = np.concatenate([p.x, mat2(p.x[None, :], mt)[0]])
        z = np.concatenate([p.z, zero])
    else:
        x = np.concatenate([p.x, zero])
        z = np.concatenate([p.z, mat2(p.z[None, :], mt)[0]])
    return PhasedPauli(p.phase, x, z)


def embedding_circuit(emb: EmbeddedCode) -> CliffordCircuit:
    """CNOT realization of the embedding, for oracle checks."""
    gates = []
    for j, (a, b) in enumerate(emb.spec.pairs):
        aux = emb.n + j
        if emb.basis == "z":
            gates.append(Gate("CNOT", (a, aux)))
            gates.append(Gate("CNOT", (b, aux)))
        else:
            gates.append(Gate("CNOT", (aux, a)))
            gates.append(Gate("CNOT", (aux, b)))
    return CliffordCircuit(emb.n + emb.m, tuple(gates))


def embed(code: StabilizerCode, spec: EmbeddingSpec, basis: str = "z") -> EmbeddedCode:
    """Adjoin one parity auxiliary per pair to the code."""
    if spec.n != code.n:
        raise DimensionError("spec is for n=%d, code has n=%d" % (spec.n, code.n))
    if basis not in ("z", "x"):
        raise DimensionError("basis must be 'z' or 'x'")
    emb = EmbeddedCode(base=code, spec=spec, basis=basis, code=code)
    checks = [lift_pauli(emb, c) for c in code.checks]
    checks += [emb.aux_pauli(j) for j in range(spec.m)]
    emb.code = StabilizerCode(checks, n=code.n + spec.m)
    return emb


_Z_AUX_ROTATIONS = {"S": "S", "SDG": "SDG", "Z": None, "I": ()}
_X_AUX_ROTATIONS = {"SQRTX": "SQRTX", "X": None, "I": ()}


def interpret(emb: EmbeddedCode, circ: CliffordCircuit) -> CliffordCircuit:
    """Map a circuit on the embedded code back to the original qubits.

    Gates on original qubits pass through.  On a Z-type auxiliary of
    pair (a, b): S becomes S_a S_b CZ_ab, Z becomes Z_a Z_b, and a SWAP
    with member b becomes CNOT a->b.  On an X-type auxiliary: SQRTX
    becomes SQRTX_a SQRTX_b CXX_ab, X becomes X_a X_b, and a SWAP with
    member b becomes CNOT b->a.  SWAPs between auxiliaries, or between
    an auxiliary and a non-member, drop out here and are vetted by
    interpretation_sound.  Anything else touching an auxiliary (H in
    particular) has no counterpart and raises.
    """
    if circ.n != emb.n + emb.m:
        raise DimensionError(
            "circuit acts on %d qubits, embedded code has %d" % (circ.n, emb.n + emb.m)
        )
    n = emb.n
    rotations = _Z_AUX_ROTATIONS if emb.basis == "z" else _X_AUX_ROTATIONS
    pair_gate = "CZ" if emb.basis == "z" else "CXX"
    out = []
    for gate in circ.gates:
        if all(q < n for q in gate.qubits):
            out.append(gate)
            continue
        if len(gate.qubits) == 1:
            a, b = emb.spec.pairs[gate.qubits[0] - n]
            if gate.name not in rotations:
                raise EmbeddedInterpretationError(
                    "%s on auxiliary qubit %d has no action on the original code"
                    % (gate.name, gate.qubits[0])
                )
            local = rotations[gate.name]
            if local == ():
                continue
            if local is not None:
                out.append(Gate(local, (a,)))
                out.append(Gate(local, (b,)))
                out.append(Gate(pair_gate, (a, b)))
            else:
                name = "Z" if emb.basis == "z" else "X"
                out.append(Gate(name, (a,)))
                out.append(Gate(name, (b,)))
            continue
        if gate.name != "SWAP":
            raise EmbeddedInterpretationError(
                "%s coupling an auxiliary qubit has no action on the original code"
                % gate.name
            )
        q0, q1 = gate.qubits
        if q0 >= n and q1 >= n:
            continue
        aux, orig = (q0, q1) if q0 >= n else (q1, q0)
        a, b = emb.spec.pairs[aux - n]
        if orig not in (a, b):
            continue
        other = a if orig == b else b
        if emb.basis == "z":
            out.append(Gate("CNOT", (other, orig)))
        else:
            out.append(Gate("CNOT", (orig, other)))
    return CliffordCircuit(n, tuple(out))


def interpretation_sound(
    emb: EmbeddedCode,
    t: Tableau,
    embedded_circ: CliffordCircuit,
    interp: CliffordCircuit,
) -> bool:
    """Does the interpreted circuit match the embedded one on the code?

    For every stabilizer and logical generator P of the original code,
    conjugating the lift of P by the embedded circuit must equal the
    lift of the interpreted image of P, up to an embedded stabilizer
    element with its exact sign (lifted checks and auxiliary parity
    rows).  This is the conjugation test that vets dropped SWAPs
    involving auxiliaries.
    """
    members = [lift_pauli(emb, t.row_pauli(i)) for i in t.stab_rows]
    members += [emb.aux_pauli(j) for j in range(emb.m)]
    if members:
        span = np.vstack([q.vector() for q in members])
    else:
        span = np.zeros((0, 2 * (emb.n + emb.m)), dtype=np.uint8)
    rows = (*t.stab_rows, *t.logical_x_rows, *t.logical_z_rows)
    for i in rows:
        p = t.row_pauli(i)
        left = embedded_circ.conjugate(lift_pauli(emb, p))
        right = lift_pauli(emb, interp.conjugate(p))
        combo = solve_in_span(span, left.vector() ^ right.vector())
        if combo is None:
            return False
        for j in np.nonzero(combo)[0]:
            right = right.multiply(members[int(j)])
        if right != left:
            return False
    return True


@dataclass
class EmbeddedGate:
    """One embedded automorphism mapped back to the original qubits."""

    images: tuple
    embedded_circuit: CliffordCircuit
    circuit: CliffordCircuit
    report: LogicalReport
    two_qubit_count: int


@dataclass
class EmbeddedDiscovery:
    """Discovery output on an embedded code."""

    embedded: EmbeddedCode
    search: AutSearchResult
    tableau: Tableau
    gates: list[EmbeddedGate]
    rejected: list[tuple[tuple, str]]


def _rotation_images(kind: RepKind, n_total: int, qubit: int) -> tuple:
    # the per-qubit column permutation of the rep's defining gate
    perm = (1, 0) if kind.blocks == 2 else (0, 2, 1)
    images = list(range(kind.blocks * n_total))
    for b in range(kind.blocks):
        images[b * n_total + qubit] = perm[b] * n_total + qubit
    return tuple(images)


def discover_embedded_gates(
    code: StabilizerCode,
    spec: EmbeddingSpec,
    kind: RepKind = RepKind.SSWAP,
    rows: RowSource = RowSource.AS_GIVEN,
    max_nodes: int | None = None,
    deadline: float | None = None,
    cap: int = DEFAULT_CODEWORD_CAP,
    probe_rotations: bool = True,
) -> EmbeddedDiscovery:
    """Automorphism discovery on the embedded code, mapped back and verified.

    The auxiliary basis follows the representation: SQRTXSWAP works on
    X-type auxiliaries, every other kind on Z-type.  Besides the search
    generators, each single-auxiliary rotation is probed for membership
    in the automorphism group; these probes are what produce pair
    rotations with a single two-qubit gate.  Uninterpretable or
    semantically unsound generators land in rejected with a reason.
    """
    basis = "x" if kind is RepKind.SQRTXSWAP else "z"
    emb = embed(code, spec, basis=basis)
    rep = build(emb.code, kind)
    mat, colors = row_augmented_matrix(rep, rows, cap=cap)
    search = matrix_automorphisms(
        mat, colors, max_nodes=max_nodes, deadline=deadline
    )
    t = tableau(code)
    candidates = list(search.generators)
    if probe_rotations and kind is not RepKind.HSWAP:
        known = set(candidates)
        n_total = emb.n + emb.m
        for j in range(emb.m):
            images = _rotation_images(kind, n_total, emb.n + j)
            if images not in known and search.group.contains(images):
                known.add(images)
                candidates.append(images)
    gates, rejected = [], []
    for images in candidates:
        circ_e = perm_to_circuit(rep, images)
        try:
            interp = interpret(emb, circ_e)
        except EmbeddedInterpretationError as exc:
            rejected.append((images, str(exc)))
            continue
        if not interpretation_sound(emb, t, circ_e, interp):
            rejected.append(
                (images, "interpreted circuit disagrees with the embedded action")
            )
            continue
        report = pauli_correct_and_action(t, interp)
        if not report.valid:  # pragma: no cover
            rejected.append((images, "interpreted circuit breaks the code"))
            continue
        gates.append(
            EmbeddedGate(
                images=images,
                embedded_circuit=circ_e,
                circuit=interp,
                report=report,
                two_qubit_count=interp.two_qubit_count(),
            )
        )
    return EmbeddedDiscovery(
        embedded=emb, search=search, tableau=t, gates=gates, rejected=rejected
    )
