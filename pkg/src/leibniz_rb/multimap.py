"""Dense multilinear maps V^{x k} -> W indexed by basis tuples.

A :class:`MultiMap` of arity k on source dimension s and target
dimension t stores t coefficients per source basis k-tuple, in
lexicographic tuple order.  These are the cochains and graded Lie
algebra elements of the whole library.
"""

from itertools import product

from .errors import ShapeMismatch
from .linalg import Matrix, vec_add, vec_is_zero, vec_scale, zero_vec


class MultiMap:
    def __init__(self, field, arity, src_dim, tgt_dim, coeffs=None):
        if arity < 1:
            raise ShapeMismatch("MultiMap arity must be >= 1")
        self.field = field
        self.arity = arity
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        size = src_dim ** arity
        if coeffs is None:
            self.coeffs = [zero_vec(field, tgt_dim) for _ in range(size)]
        else:
            if len(coeffs) != size:
                raise ShapeMismatch("expected %d coefficient rows, got %d"
                                    % (size, len(coeffs)))
            self.coeffs = [[field.coerce(x) for x in row] for row in coeffs]
            for row in self.coeffs:
                if len(row) != tgt_dim:
                    raise ShapeMismatch("coefficient row of wrong length")

    @classmethod
    def from_matrix(cls, m):
        """View a tgt x src matrix as an arity-1 map."""
        return cls(m.field, 1, m.ncols, m.nrows,
                   [[m.rows[b][a] for b in range(m.nrows)] for a in range(m.ncols)])

    def to_matrix(self):
        if self.arity != 1:
            raise ShapeMismatch("only arity-1 maps convert to matrices")
        return Matrix(self.field, [[self.coeffs[a][b] for a in range(self.src_dim)]
                                   for b in range(self.tgt_dim)])

    def _flat(self, idx):
        f = 0
        for i in idx:
            f = f * self.src_dim + i
        return f

    def tuples(self):
        return product(range(self.src_dim), repeat=self.arity)

    def get(self, idx):
        return self.coeffs[self._flat(idx)]

    def set_(self, idx, vec):
        # construction-time helper; maps are treated as frozen afterwards
        self.coeffs[self._flat(idx)] = [self.field.coerce(x) for x in vec]

    def apply(self, args):
        """Evaluate at a mixed argument list of basis indices and vectors."""
        if len(args) != self.arity:
            raise ShapeMismatch("arity %d map applied to %d arguments"
                                % (self.arity, len(args)))
        vec_slots = [k for k, a in enumerate(args) if not isinstance(a, int)]
        if not vec_slots:
            return list(self.get(tuple(args)))
        out = zero_vec(self.field, self.tgt_dim)
        ranges = [range(self.src_dim) if k in vec_slots else (args[k],)
                  for k in range(self.arity)]
        for idx in product(*ranges):
            c = self.field.one
            for k in vec_slots:
                c = c * args[k][idx[k]]
                if not c:
                    break
            if not c:
                continue
            row = self.coeffs[self._flat(idx)]
            for t in range(self.tgt_dim):
                if row[t]:
                    out[t] = out[t] + c * row[t]
        return out

    def same_shape(self, other):
        return (self.arity == other.arity and self.src_dim == other.src_dim
                and self.tgt_dim == other.tgt_dim)

    def __add__(self, other):
        if not self.same_shape(other):
            raise ShapeMismatch("MultiMap shape mismatch in addition")
        return MultiMap(self.field, self.arity, self.src_dim, self.tgt_dim,
                        [vec_add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c):
        c = self.field.coerce(c)
        return MultiMap(self.field, self.arity, self.src_dim, self.tgt_dim,
                        [vec_scale(c, row) for row in self.coeffs])

    def is_zero(self):
        return all(vec_is_zero(row) for row in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, MultiMap) and self.same_shape(other)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.arity, self.src_dim, self.tgt_dim,
                     tuple(tuple(r) for r in self.coeffs)))

    def __repr__(self):
        return "MultiMap(arity=%d, src=%d, tgt=%d)" % (self.arity, self.src_dim,
                                                       self.tgt_dim)

    def flatten(self):
        """Lexicographic (source tuple, target index) coefficient vector."""
        out = []
        for row in self.coeffs:
            out.extend(row)
        return out

    @classmethod
    def from_flat(cls, field, arity, src_dim, tgt_dim, flat):
        size = src_dim ** arity
        if len(flat) != size * tgt_dim:
            raise ShapeMismatch("flat vector of wrong length")
        rows = [flat[i * tgt_dim:(i + 1) * tgt_dim] for i in range(size)]
        return cls(field, arity, src_dim, tgt_dim, rows)
