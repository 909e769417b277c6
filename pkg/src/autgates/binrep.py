"""Binary-code representations of stabilizer codes.

Each representation maps the check matrix [G_X | G_Z] to a binary generator
matrix G_E = [G_X | G_Z] * E whose column permutations (of a constrained
shape) correspond to circuits built from one single-qubit Clifford type plus
qubit SWAPs:

  HSWAP       [G_X | G_Z]              E = I            gates H + SWAP
  SSWAP       [G_Z | G_X+G_Z]          E = [[0,I],[I,I]]      S + SWAP
  SQRTXSWAP   [G_X | G_X+G_Z]          E = [[I,I],[0,I]]      SQRTX + SWAP
  THREEBLOCK  [G_X | G_Z | G_X+G_Z]    E = [[I,0,I],[0,I,I],[I,I,I]]
                                                all single-qubit Cliffords + SWAP

The constrained shape is enforced structurally: the automorphism search runs
on G rows stacked with the rows of B = [I|I] (or [I|I|I]) in a second row
color, so only permutations that also preserve B's row set survive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, TooManyCodewordsError
from .gf2 import asbits, span_rows
from .stabilizer import StabilizerCode, standard_form

DEFAULT_CODEWORD_CAP = 2**16


class RepKind(enum.Enum):
    HSWAP = "hswap"
    SSWAP = "sswap"
    SQRTXSWAP = "sqrtxswap"
    THREEBLOCK = "threeblock"

    @property
    def blocks(self) -> int:
        return 3 if self is RepKind.THREEBLOCK else 2


class RowSource(enum.Enum):
    AS_GIVEN = "given"
    STANDARD_FORM = "standard"
    ALL_CODEWORDS = "codewords"


def _blockify(gx: np.ndarray, gz: np.ndarray, kind: RepKind) -> np.ndarray:
    if kind is RepKind.HSWAP:
        return np.hstack([gx, gz])
    if kind is RepKind.SSWAP:
        return np.hstack([gz, gx ^ gz])
    if kind is RepKind.SQRTXSWAP:
        return np.hstack([gx, gx ^ gz])
    return np.hstack([gx, gz, gx ^ gz])


def block_mixer(kind: RepKind, n: int) -> np.ndarray:
    """The column-mixing matrix E with G_E = [G_X | G_Z (| 0)] @ E."""
    eye = np.eye(n, dtype=np.uint8)
    zero = np.zeros((n, n), dtype=np.uint8)
    if kind is RepKind.HSWAP:
        return np.eye(2 * n, dtype=np.uint8)
    if kind is RepKind.SSWAP:
        return np.block([[zero, eye], [eye, eye]]).astype(np.uint8)
    if kind is RepKind.SQRTXSWAP:
        return np.block([[eye, eye], [zero, eye]]).astype(np.uint8)
    return np.block(
        [[eye, zero, eye], [zero, eye, eye], [eye, eye, eye]]
    ).astype(np.uint8)


@dataclass
class BlockRep:
    """A binary representation of one code, plus its constraint rows B."""

    code: StabilizerCode
    kind: RepKind
    g_e: np.ndarray  # checks in block form, len(checks) x (blocks*n)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def blocks(self) -> int:
        return self.kind.blocks

    @property
    def b_rows(self) -> np.ndarray:
        """Constraint rows: row i is e_i repeated in every block."""
        n = self.n
        eye = np.eye(n, dtype=np.uint8)
        return np.hstack([eye] * self.blocks)


def build(code: StabilizerCode, kind: RepKind) -> BlockRep:
    m = code.check_matrix
    n = code.n
    g_e = _blockify(m[:, :n], m[:, n:], kind)
    return BlockRep(code=code, kind=kind, g_e=asbits(g_e))


def row_augmented_matrix(
    rep: BlockRep,
    rows: RowSource = RowSource.AS_GIVEN,
    cap: int = DEFAULT_CODEWORD_CAP,
) -> tuple[np.ndarray, np.ndarray]:
    """(matrix, row_colors) for the automorphism search.

    Check-derived rows get color 0, the B constraint rows color 1, so the
    search returns exactly the column permutations preserving both row sets.
    """
    n = rep.n
    if rows is RowSource.AS_GIVEN:
        g = rep.g_e
    elif rows is RowSource.STANDARD_FORM:
        sf = standard_form(rep.code)
        std = sf.unpermute(sf.g_std)
        g = _blockify(std[:, :n], std[:, n:], rep.kind)
    else:
        try:
            g = span_rows(rep.g_e, cap=cap)
        except DimensionError as exc:
            raise TooManyCodewordsError(str(exc)) from None
    b = rep.b_rows
    mat = np.vstack([g, b])
    colors = np.array([0] * g.shape[0] + [1] * n, dtype=np.int64)
    return asbits(mat), colors
