"""Permutation groups via deterministic Schreier-Sims stabilizer chains.

The chain code is generic over the element type: anything that supports
``act``, ``compose``, ``inverse``, ``is_identity``, ``moved_point`` and
``key`` can be used.  Two element types are provided: ``PermElement``
(permutations of ``range(degree)``) and ``MatrixElement`` (invertible
binary matrices acting on row vectors encoded as integers).

Every element carries a word in the user's generators as a tuple of
``(generator_index, exponent)`` pairs with exponent +1 or -1, read left
to right in application order.  Words survive composition and sifting,
so ``express`` returns group elements whose words recompose exactly to
the requested permutation or matrix.
"""

import numpy as np

from .gf2 import asbits, invert, mat2


def invert_word(word):
    """Word of the inverse element: reverse order, flip exponents."""
    return tuple((idx, -exp) for idx, exp in reversed(word))


def compose_images(p, q):
    """Images of "apply p, then q" for permutations given as sequences."""
    return tuple(q[i] for i in p)


def invert_images(p):
    """Images of the inverse permutation."""
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycle_string(images):
    """Format a permutation in disjoint cycle notation, e.g. "(0 3)(1 2)"."""
    seen = set()
    parts = []
    for i in range(len(images)):
        if i in seen or images[i] == i:
            continue
        cycle = [i]
        j = images[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = images[j]
        parts.append("(%s)" % " ".join(str(c) for c in cycle))
    return "".join(parts) if parts else "()"


class PermElement:
    """Permutation of range(degree) carrying a generator word."""

    __slots__ = ("images", "word")

    def __init__(self, images, word=()):
        self.images = tuple(images)
        self.word = tuple(word)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), ())

    def act(self, point):
        return self.images[point]

    def compose(self, other):
        """Element "apply self, then other"."""
        return PermElement(
            (other.images[i] for i in self.images), self.word + other.word
        )

    def inverse(self):
        return PermElement(invert_images(self.images), invert_word(self.word))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def moved_point(self):
        """Smallest point not fixed, or None for the identity."""
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def key(self):
        return self.images

    def __repr__(self):
        return "PermElement(%s)" % cycle_string(self.images)


class MatrixElement:
    """Invertible binary matrix acting on row vectors encoded as ints.

    A vector (v_0, ..., v_{d-1}) is encoded as sum(v_j << j).  The action
    is right multiplication v @ M, so compose(a, b) multiplies a.mat @
    b.mat.
    """

    __slots__ = ("mat", "word", "_rows")

    def __init__(self, mat, word=()):
        self.mat = np.ascontiguousarray(asbits(mat))
        self.word = tuple(word)
        self._rows = None

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim, dtype=np.uint8))

    def _row_ints(self):
        if self._rows is None:
            weights = 1 << np.arange(self.mat.shape[1], dtype=np.int64)
            self._rows = [int(r) for r in self.mat.astype(np.int64) @ weights]
        return self._rows

    def act(self, point):
        rows = self._row_ints()
        out = 0
        i = 0
        while point:
            if point & 1:
                out ^= rows[i]
            point >>= 1
            i += 1
        return out

    def compose(self, other):
        """Element "apply self, then other"."""
        return MatrixElement(mat2(self.mat, other.mat), self.word + other.word)

    def inverse(self):
        return MatrixElement(invert(self.mat), invert_word(self.word))

    def is_identity(self):
        d = self.mat.shape[0]
        return bool(np.array_equal(self.mat, np.eye(d, dtype=np.uint8)))

    def moved_point(self):
        """Smallest moved basis point 1 << i, or None for the identity."""
        for i in range(self.mat.shape[0]):
            p = 1 << i
            if self.act(p) != p:
                return p
        return None

    def key(self):
        return self.mat.tobytes()

    def __repr__(self):
        return "MatrixElement(%r)" % (self.mat.tolist(),)


class StabilizerChain:
    """One level of a stabilizer chain built by deterministic Schreier-Sims.

    Generators stored at a level fix the base points of all earlier
    levels.  The orbit of the level's base point is kept as a transversal
    dict mapping each orbit point to an element sending the base point to
    it.  A prescribed base is used as a prefix and extended on demand.
    """

    __slots__ = ("identity", "basepoint", "gens", "tree", "stab")

    def __init__(self, identity, prescribed_base=()):
        self.identity = identity
        self.basepoint = None
        self.gens = []
        self.tree = {}
        self.stab = None
        base = tuple(prescribed_base)
        if base:
            self.basepoint = base[0]
            self.tree = {base[0]: identity}
            if len(base) > 1:
                self.stab = StabilizerChain(identity, base[1:])

    def strong_generators(self):
        """All generators at this level and deeper, deepest first."""
        gens = [] if self.stab is None else self.stab.strong_generators()
        return gens + self.gens

    def base(self):
        """Base points of the chain, skipping unused tail levels."""
        points = []
        node = self
        while node is not None and node.basepoint is not None:
            points.append(node.basepoint)
            node = node.stab
        return points

    def order(self):
        if self.basepoint is None:
            return 1
        sub = 1 if self.stab is None else self.stab.order()
        return len(self.tree) * sub

    def sift(self, g):
        """Divide g by transversal elements level by level.

        An identity residue means g is a member; otherwise the residue
        witnesses non-membership.
        """
        node = self
        while node is not None and node.basepoint is not None:
            u = node.tree.get(g.act(node.basepoint))
            if u is None:
                return g
            g = g.compose(u.inverse())
            node = node.stab
        return g

    def contains(self, g):
        return self.sift(g).is_identity()

    def express(self, g):
        """Return a member equal to g whose word is in the generators.

        Returns None when g is not in the group.  The result composes the
        transversal elements dividing g, so its word recomposes to g.
        """
        node = self
        used = []
        while node is not None and node.basepoint is not None:
            u = node.tree.get(g.act(node.basepoint))
            if u is None:
                return None
            g = g.compose(u.inverse())
            used.append(u)
            node = node.stab
        if not g.is_identity():
            return None
        out = self.identity
        for u in reversed(used):
            out = out.compose(u)
        return out

    def add(self, gen):
        """Add a generator; returns True if the group grew."""
        residue = self.sift(gen)
        if residue.is_identity():
            return False
        self._insert(residue)
        return True

    def _insert(self, gen):
        # gen fixes the base points of every level above this one
        if self.basepoint is None:
            self.basepoint = gen.moved_point()
            self.tree = {self.basepoint: self.identity}
        if gen.act(self.basepoint) == self.basepoint:
            if self.stab is None:
                self.stab = StabilizerChain(self.identity)
            self.stab._insert(gen)
        else:
            self.gens.append(gen)
        self._rebuild_tree()
        self._close()

    def _rebuild_tree(self):
        steps = []
        for g in self.strong_generators():
            steps.append(g)
            steps.append(g.inverse())
        tree = {self.basepoint: self.identity}
        queue = [self.basepoint]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            u = tree[a]
            for s in steps:
                b = s.act(a)
                if b not in tree:
                    tree[b] = u.compose(s)
                    queue.append(b)
        self.tree = tree

    def _close(self):
        """Sift every Schreier generator into the stabilizer subgroup."""
        if self.stab is None:
            self.stab = StabilizerChain(self.identity)
        gens = self.strong_generators()
        for point in list(self.tree):
            u = self.tree[point]
            for s in gens:
                v = self.tree[s.act(point)]
                self.stab.add(u.compose(s).compose(v.inverse()))

    def iter_elements(self):
        """Yield every group element once, as transversal products."""
        if self.basepoint is None:
            yield self.identity
            return
        if self.stab is None:
            deeper = [self.identity]
        else:
            deeper = self.stab.iter_elements()
        for rest in deeper:
            for u in self.tree.values():
                yield rest.compose(u)


class PermGroup:
    """Group of permutations of range(degree) with exact order.

    Generators are added by their image tuples and indexed in the order
    given, including redundant ones, so element words can be mapped back
    to caller-side data attached to each generator.
    """

    def __init__(self, degree, generators=(), prescribed_base=()):
        self.degree = int(degree)
        self.gen_images = []
        self.chain = StabilizerChain(
            PermElement.identity(self.degree), prescribed_base
        )
        for images in generators:
            self.add_generator(images)

    def add_generator(self, images):
        """Register a generator; returns True if the group grew."""
        images = tuple(images)
        if len(images) != self.degree:
            raise ValueError("generator degree mismatch")
        idx = len(self.gen_images)
        self.gen_images.append(images)
        return self.chain.add(PermElement(images, ((idx, 1),)))

    def order(self):
        return self.chain.order()

    def contains(self, images):
        return self.chain.contains(PermElement(images))

    def express(self, images):
        """Member equal to the given permutation, with word, or None."""
        return self.chain.express(PermElement(images))

    def base(self):
        return self.chain.base()

    def level_generators(self, depth):
        """Image tuples of generators fixing the first depth base points."""
        node = self.chain
        for _ in range(depth):
            if node.stab is None:
                return []
            node = node.stab
        return [g.images for g in node.strong_generators()]

    def iter_elements(self):
        """Yield the images tuple of every element once."""
        for elt in self.chain.iter_elements():
            yield elt.images

    def word_images(self, word):
        """Recompose a word into images, for checking and reporting."""
        out = PermElement.identity(self.degree)
        for idx, exp in word:
            g = PermElement(self.gen_images[idx])
            out = out.compose(g if exp > 0 else g.inverse())
        return out.images
