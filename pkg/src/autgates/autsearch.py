"""Column automorphisms of binary matrices with colored rows.

Finds the group of column permutations that map the row multiset of a
binary matrix onto itself, where rows may only be matched to rows of the
same color.  Uses individualization-refinement backtracking: columns are
partitioned by an equitable refinement driven by row/column incidence
counts, the first depth-first descent fixes a base path, and later
branches are pruned by refinement traces, discovered-automorphism orbits
and backjumps.

The returned generators go into a PermGroup, so callers get exact group
orders and membership tests.  A node budget turns the search into a
best-effort pass flagged as incomplete instead of raising.
"""

import time
from dataclasses import dataclass

import numpy as np

from .gf2 import asbits
from .permgroup import PermGroup


@dataclass
class AutSearchResult:
    group: PermGroup
    complete: bool
    nodes: int
    leaves: int
    generators: list  # image tuples that grew the group, in discovery order


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, matrix, row_colors, max_nodes, deadline):
        matrix = asbits(matrix)
        if matrix.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        self.n_cols = matrix.shape[1]
        if row_colors is None:
            row_colors = np.zeros(matrix.shape[0], dtype=np.int64)
        row_colors = np.asarray(row_colors, dtype=np.int64)
        if row_colors.shape != (matrix.shape[0],):
            raise ValueError("row_colors must have one entry per row")

        # dedupe rows, keeping color and multiplicity
        if matrix.shape[0]:
            meta = np.column_stack([row_colors, matrix.astype(np.int64)])
            uniq, counts = np.unique(meta, axis=0, return_counts=True)
            self.colors = uniq[:, 0]
            self.rows = uniq[:, 1:].astype(np.int64)
            self.mult = counts.astype(np.int64)
        else:
            self.colors = np.zeros(0, dtype=np.int64)
            self.rows = np.zeros((0, self.n_cols), dtype=np.int64)
            self.mult = np.zeros(0, dtype=np.int64)
        self.row_lookup = {
            (int(c), r.tobytes()): t
            for t, (c, r) in enumerate(zip(self.colors, self.rows))
        }

        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.leaves = 0

        # base path data, filled during the first descent
        self.base_traces = []  # refinement trace per depth
        self.base_cols = []  # individualized column per depth
        self.base_leaf = None  # column order of the first leaf
        self.group = None
        self.found = []
        self._jump = None

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def _refine(self, cell_id):
        """Refine a column partition to equitability.

        cell_id assigns each column the index of its cell; cell indices
        are contiguous and ordered.  Splitting keys are incidence counts,
        so the refinement commutes with any automorphism and the returned
        trace is a node invariant safe for pruning.
        """
        n = self.n_cols
        trace = []
        num_cells = int(cell_id.max()) + 1 if n else 0
        while True:
            # group rows by color, multiplicity and per-cell 1-counts
            ind = np.zeros((n, num_cells), dtype=np.int64)
            ind[np.arange(n), cell_id] = 1
            cnt = self.rows @ ind
            row_meta = np.column_stack([self.colors, self.mult, cnt])
            row_keys, row_group = np.unique(
                row_meta, axis=0, return_inverse=True
            )
            # column signatures: per row-group 1-counts, within each cell
            gind = np.zeros((row_keys.shape[0], self.rows.shape[0]), dtype=np.int64)
            gind[row_group, np.arange(self.rows.shape[0])] = 1
            colcnt = gind @ self.rows
            col_meta = np.column_stack([cell_id, colcnt.T])
            col_keys, new_cell_id = np.unique(col_meta, axis=0, return_inverse=True)
            trace.append((row_keys.tobytes(), col_keys.tobytes()))
            new_num = col_keys.shape[0]
            if new_num == num_cells:
                break
            cell_id = new_cell_id.astype(np.int64)
            num_cells = new_num
            if num_cells == n:
                break
        return cell_id, num_cells, tuple(trace)

    def _individualize(self, cell_id, column):
        """Split the column off as a new cell, first within its old cell."""
        key = 2 * cell_id + 1
        key[column] -= 1
        _, new_id = np.unique(key, return_inverse=True)
        return new_id.astype(np.int64)

    def _orbit_hits(self, column, depth, explored):
        """Does the known group move the column into the explored set?"""
        gens = self.group.level_generators(depth)
        if not gens:
            return False
        seen = {column}
        queue = [column]
        while queue:
            a = queue.pop()
            for g in gens:
                b = g[a]
                if b in explored:
                    return True
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return False

    def _target_cell(self, cell_id, num_cells):
        """Columns of the smallest non-singleton cell, earliest on ties."""
        sizes = np.bincount(cell_id, minlength=num_cells)
        best = None
        for idx in range(num_cells):
            if sizes[idx] > 1 and (best is None or sizes[idx] < sizes[best]):
                best = idx
        if best is None:
            return None
        return [int(j) for j in np.flatnonzero(cell_id == best)]

    def _leaf_columns(self, cell_id):
        order = np.argsort(cell_id, kind="stable")
        return [int(j) for j in order]

    def _check_automorphism(self, images):
        """Row multiset must be preserved color-by-color."""
        inv = np.empty(self.n_cols, dtype=np.int64)
        inv[np.asarray(images)] = np.arange(self.n_cols)
        permuted = self.rows[:, inv]
        for t in range(self.rows.shape[0]):
            s = self.row_lookup.get((int(self.colors[t]), permuted[t].tobytes()))
            if s is None or self.mult[s] != self.mult[t]:
                return False
        return True

    def _explore(self, cell_id, depth, on_base, div_depth):
        self._tick()
        cell_id, num_cells, trace = self._refine(cell_id)

        if on_base and depth == len(self.base_traces):
            self.base_traces.append(trace)
        elif trace != self.base_traces[depth]:
            return

        candidates = self._target_cell(cell_id, num_cells)
        if candidates is None:
            self.leaves += 1
            cols = self._leaf_columns(cell_id)
            if self.base_leaf is None:
                self.base_leaf = cols
                self.group = PermGroup(
                    self.n_cols, prescribed_base=tuple(self.base_cols)
                )
                return
            images = [0] * self.n_cols
            for src, dst in zip(self.base_leaf, cols):
                images[src] = dst
            images = tuple(images)
            if self._check_automorphism(images):
                if self.group.add_generator(images):
                    self.found.append(images)
                self._jump = div_depth
            return

        if on_base and depth == len(self.base_cols):
            self.base_cols.append(candidates[0])

        explored = set()
        for v in candidates:
            child_on_base = on_base and v == self.base_cols[depth]
            # orbit pruning is justified only where the path equals the
            # base prefix, which is what the stabilizer levels fix
            if on_base and not child_on_base and self.group is not None:
                if self._orbit_hits(v, depth, explored):
                    explored.add(v)
                    continue
            child_div = depth if on_base and not child_on_base else div_depth
            self._explore(
                self._individualize(cell_id, v), depth + 1, child_on_base, child_div
            )
            explored.add(v)
            if self._jump is not None:
                if self._jump == depth and on_base:
                    self._jump = None
                else:
                    return

    def run(self):
        complete = True
        try:
            self._explore(np.zeros(self.n_cols, dtype=np.int64), 0, True, None)
        except _BudgetExceeded:
            complete = False
        if self.group is None:
            # budget ran out before the first leaf fixed a base
            self.group = PermGroup(self.n_cols)
        return AutSearchResult(
            group=self.group,
            complete=complete,
            nodes=self.nodes,
            leaves=self.leaves,
            generators=self.found,
        )


def matrix_automorphisms(matrix, row_colors=None, max_nodes=None, deadline=None):
    """Column automorphism group of a binary matrix with colored rows.

    Returns an AutSearchResult whose group contains exactly the column
    permutations g with  {rows of M} = {rows of M with columns permuted
    by g}  as multisets within each row color class.  max_nodes bounds
    the number of search tree nodes and deadline is a time.monotonic()
    cutoff; exceeding either yields the subgroup found so far with
    complete=False.
    """
    return _Search(matrix, row_colors, max_nodes, deadline).run()
