import numpy as np
import pytest

from autgates.binrep import RepKind, RowSource
from autgates.circuits import (
    ONE_QUBIT_GATES,
    TWO_QUBIT_GATES,
    CliffordCircuit,
    Gate,
)
from autgates.cliffordmap import (
    pauli_correct_and_action,
    verify_preserves_stabilizers,
)
from autgates.errors import (
    DimensionError,
    NotRealizableError,
    NotSymplecticError,
    ParseError,
)
from autgates.gf2 import is_symplectic, mat2
from autgates.logsearch import (
    LogicalActionGroup,
    discover_gates,
    parse_action_matrix,
    parse_target,
    synthesize,
)
from autgates.stabilizer import StabilizerCode

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
FOUR_QUBIT = ["XXXX", "ZZZZ"]


def bfs_closure(mats):
    """All products of the generators, each with one explicit word."""
    dim = mats[0].shape[0]
    ident = np.eye(dim, dtype=np.uint8)
    table = {ident.tobytes(): ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            word = table[m.tobytes()]
            for gi, g in enumerate(mats):
                prod = mat2(m, g)
                key = prod.tobytes()
                if key not in table:
                    table[key] = word + ((gi, 1),)
                    nxt.append(prod)
        frontier = nxt
    return table


def random_circuit(rng, n, length):
    names_1q = ["H", "S", "SDG", "SQRTX", "GAMMA", "GAMMADG"]
    gates = []
    for _ in range(length):
        if n >= 2 and rng.rand() < 0.5:
            q0, q1 = rng.choice(n, size=2, replace=False)
            name = ["SWAP", "CNOT", "CZ", "CXX"][rng.randint(4)]
            gates.append(Gate(name, (int(q0), int(q1))))
        else:
            gates.append(Gate(names_1q[rng.randint(len(names_1q))], (int(rng.randint(n)),)))
    return CliffordCircuit(n, tuple(gates))


@pytest.fixture(scope="module")
def five_qubit_discovery():
    code = StabilizerCode.from_strings(FIVE_QUBIT)
    return discover_gates(code, RepKind.THREEBLOCK, RowSource.ALL_CODEWORDS)


@pytest.fixture(scope="module")
def four_qubit_discovery():
    code = StabilizerCode.from_strings(FOUR_QUBIT)
    return discover_gates(code, RepKind.THREEBLOCK, RowSource.ALL_CODEWORDS)


def test_five_qubit_action_group_is_full_single_qubit_group(five_qubit_discovery):
    res = five_qubit_discovery
    assert res.search.complete
    assert res.search.group.order() == 360
    # every invertible 2x2 binary matrix is symplectic; there are 6
    assert res.group.order() == 6
    table = bfs_closure([u for u, _ in res.group.generators])
    assert len(table) == 6
    for key, word in table.items():
        m = np.frombuffer(key, dtype=np.uint8).reshape(2, 2)
        assert res.group.contains(m)
        assert np.array_equal(res.group.word_matrix(word), m)


def test_hswap_codeword_group_action_is_duality_only():
    code = StabilizerCode.from_strings(FIVE_QUBIT)
    res = discover_gates(code, RepKind.HSWAP, RowSource.ALL_CODEWORDS)
    assert res.search.group.order() == 20
    assert res.group.order() == 2
    h = parse_target("H(0)", 1)
    assert res.group.contains(h)
    assert res.group.express(parse_target("S(0)", 1)) is None
    with pytest.raises(NotRealizableError):
        synthesize(res.group, parse_target("S(0)", 1), res.tableau)


def test_every_discovered_gate_is_verified(five_qubit_discovery):
    res = five_qubit_discovery
    assert len(res.gates) == len(res.search.generators)
    for gate in res.gates:
        assert gate.report.valid
        assert verify_preserves_stabilizers(
            res.tableau,
            synthesize(res.group, gate.report.u_act, res.tableau).corrected,
        )


def test_synthesize_named_single_qubit_targets(five_qubit_discovery):
    res = five_qubit_discovery
    allowed = set(ONE_QUBIT_GATES) | {"SWAP"}
    for name in ["S(0)", "H(0)", "GAMMA(0)", "GAMMADG(0)", "SQRTX(0)"]:
        target = parse_target(name, 1)
        syn = synthesize(res.group, target, res.tableau)
        assert np.array_equal(res.group.word_matrix(syn.word), target)
        assert syn.report.valid
        assert np.array_equal(syn.report.u_act, target)
        assert all(g.name in allowed for g in syn.circuit.gates)
        assert verify_preserves_stabilizers(res.tableau, syn.corrected)
        recheck = pauli_correct_and_action(res.tableau, syn.corrected)
        assert recheck.valid
        assert recheck.pauli_correction.is_identity()
        assert np.array_equal(recheck.u_act, target)


def test_synthesize_identity_is_empty(five_qubit_discovery):
    res = five_qubit_discovery
    syn = synthesize(res.group, parse_target("I", 1), res.tableau)
    assert syn.word == ()
    assert len(syn.circuit.gates) == 0
    assert len(syn.corrected.gates) == 0


def test_four_qubit_group_contains_paper_suite(four_qubit_discovery):
    res = four_qubit_discovery
    assert res.group.k == 2
    names = ["H(0) H(1)", "CZ(0,1)", "CNOT(0,1)", "CNOT(1,0)", "SWAP(0,1)"]
    for name in names:
        target = parse_target(name, 2)
        syn = synthesize(res.group, target, res.tableau)
        assert np.array_equal(syn.report.u_act, target)
        assert verify_preserves_stabilizers(res.tableau, syn.corrected)
    # single-qubit phases need the embedded construction
    with pytest.raises(NotRealizableError):
        synthesize(res.group, parse_target("S(0)", 2), res.tableau)


def test_four_qubit_membership_matches_bfs_oracle(four_qubit_discovery):
    res = four_qubit_discovery
    table = bfs_closure([u for u, _ in res.group.generators])
    assert len(table) == res.group.order()
    rng = np.random.RandomState(11)
    hits = 0
    for _ in range(60):
        m = random_circuit(rng, 2, rng.randint(1, 9)).symplectic()
        inside = res.group.contains(m)
        assert inside == (m.tobytes() in table)
        hits += inside
    assert 0 < hits < 60


def test_word_indices_survive_redundant_generators():
    h = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    s = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    group = LogicalActionGroup(1)
    assert group.add(h, CliffordCircuit(1, (Gate("H", (0,)),)))
    assert not group.add(h, CliffordCircuit(1, (Gate("H", (0,)),)))
    assert group.add(s, CliffordCircuit(1, (Gate("S", (0,)),)))
    assert len(group.generators) == 3
    assert group.order() == 6
    target = mat2(h, s)
    word = group.express(target)
    assert word is not None
    assert all(idx < 3 for idx, _ in word)
    assert np.array_equal(group.word_matrix(word), target)
    circ = group.word_circuit(word, 1)
    assert np.array_equal(circ.symplectic(), target)


def test_word_circuit_applies_inverse_exponents():
    s = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    group = LogicalActionGroup(1)
    group.add(s, CliffordCircuit(1, (Gate("S", (0,)),)))
    circ = group.word_circuit(((0, -1),), 1)
    assert np.array_equal(circ.symplectic(), s)
    assert [g.name for g in circ.gates] == ["SDG"]


def test_synthesize_rejects_bad_targets(five_qubit_discovery):
    res = five_qubit_discovery
    with pytest.raises(DimensionError):
        synthesize(res.group, np.eye(4, dtype=np.uint8), res.tableau)
    with pytest.raises(NotSymplecticError):
        synthesize(
            res.group,
            np.array([[1, 1], [1, 1]], dtype=np.uint8),
            res.tableau,
        )


def test_parse_target_named_gates():
    assert np.array_equal(parse_target("I", 1), np.eye(2, dtype=np.uint8))
    assert parse_target("S(0)", 1).tolist() == [[1, 1], [0, 1]]
    assert parse_target("H(0)", 1).tolist() == [[0, 1], [1, 0]]
    two = parse_target("CNOT(0,1)", 2)
    assert np.array_equal(
        two, CliffordCircuit(2, (Gate("CNOT", (0, 1)),)).symplectic()
    )
    seq = parse_target("H(0) S(0)", 1)
    assert np.array_equal(
        seq,
        CliffordCircuit(1, (Gate("H", (0,)), Gate("S", (0,)))).symplectic(),
    )
    assert np.array_equal(parse_target("h(0); s(0)", 1), seq)
    assert np.array_equal(
        parse_target("CNOT(0, 1)", 2), parse_target("CNOT(0,1)", 2)
    )
    # Pauli terms act as the identity on the symplectic level
    assert np.array_equal(parse_target("X(0) Z(0)", 1), np.eye(2, dtype=np.uint8))


def test_parse_target_rejects_malformed():
    for bad in ["Q(0)", "S", "S()", "CNOT(0)", "CNOT(0,0)", "S(0", "S(1)"]:
        with pytest.raises(ParseError):
            parse_target(bad, 1)
    with pytest.raises(ParseError):
        parse_target("SWAP(0,2)", 2)


def test_parse_action_matrix():
    text = "10  # comment\n01\n"
    assert parse_action_matrix(text).tolist() == [[1, 0], [0, 1]]
    spaced = "0 1, 0 0\n1 0 0 0\n0 0 0 1\n0 0 1 0\n"
    m = parse_action_matrix(spaced)
    assert m.shape == (4, 4)
    assert is_symplectic(m)
    for bad in ["", "102\n010\n001", "10\n0", "10\n01\n11", "1\n"]:
        with pytest.raises(ParseError):
            parse_action_matrix(bad)
