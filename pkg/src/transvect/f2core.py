"""Linear algebra over F2 with vectors stored as int bitsets.

Coordinate ``i`` (1-based in bitstrings) lives at bit ``i - 1``.  A
bitstring such as ``"110"`` therefore means ``e1 + e2`` in dimension 3:
the leftmost character is coordinate 1.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_DIM = 64


class DimensionError(ValueError):
    """Raised when a vector or matrix does not fit the ambient space."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(x: int):
    """Yield the positions of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def vec_from_str(s: str) -> int:
    v = 0
    for k, ch in enumerate(s):
        if ch == "1":
            v |= 1 << k
        elif ch != "0":
            raise ValueError(f"bad bit character {ch!r} in {s!r}")
    return v


def vec_to_str(v: int, dim: int) -> str:
    return "".join("1" if (v >> k) & 1 else "0" for k in range(dim))


def unit(i: int) -> int:
    """The standard basis vector e_i (1-based)."""
    return 1 << (i - 1)


# -- elimination ------------------------------------------------------------


def rank(vectors: Iterable[int]) -> int:
    """Rank of a family of bit vectors."""
    pivots: dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                r += 1
                break
            v ^= p
    return r


def in_span(v: int, vectors: Iterable[int]) -> bool:
    vs = list(vectors)
    return rank(vs) == rank(vs + [v])


def solve_multi(equations: Sequence[int], rhs_columns: Sequence[Sequence[int]], n: int):
    """Solve ``equations[k] . x = rhs[k]`` for several right-hand sides at once.

    Returns ``(particulars, nullspace_basis)`` where ``particulars[c]`` is a
    solution for column ``c`` or ``None`` if that system is inconsistent.
    """
    ncols = len(rhs_columns)
    rows = list(equations)
    for c, col in enumerate(rhs_columns):
        if len(col) != len(rows):
            raise ValueError("equations and rhs differ in length")
        for k, b in enumerate(col):
            if b & 1:
                rows[k] |= 1 << (n + c)
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if (rows[i] >> col) & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivot_cols.append(col)
        r += 1
    bad = 0
    for i in range(r, len(rows)):
        bad |= rows[i] >> n  # 0 = 1 in these columns
    particulars: list[int | None] = []
    for c in range(ncols):
        if (bad >> c) & 1:
            particulars.append(None)
            continue
        x = 0
        for i, col in enumerate(pivot_cols):
            if (rows[i] >> (n + c)) & 1:
                x |= 1 << col
        particulars.append(x)
    free = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free:
        x = 1 << f
        for i, col in enumerate(pivot_cols):
            if (rows[i] >> f) & 1:
                x |= 1 << col
        basis.append(x)
    return particulars, basis


def solve(equations: Sequence[int], rhs: Sequence[int], n: int):
    """Solve ``equations[k] . x = rhs[k]`` (dot product over F2) for ``x``.

    Returns ``(particular, nullspace_basis)`` or ``None`` if inconsistent.
    ``x`` ranges over ``n``-bit words.
    """
    (particular,), basis = solve_multi(equations, [rhs], n)
    if particular is None:
        return None
    return particular, basis


def kernel_of_map(images: Sequence[int]) -> list[int]:
    """Basis of ``{x : XOR of images[i] over bits i of x == 0}``.

    ``images[i]`` is the image of the i-th domain basis vector.
    """
    reduced: list[tuple[int, int]] = []  # (vector, combination)
    kernel = []
    for i, img in enumerate(images):
        comb = 1 << i
        v = img
        for pv, pc in reduced:
            if v ^ pv < v:
                v ^= pv
                comb ^= pc
        if v:
            reduced.append((v, comb))
            reduced.sort(reverse=True)
        else:
            kernel.append(comb)
    return kernel


def apply_map(images: Sequence[int], x: int) -> int:
    acc = 0
    for i in bits_of(x):
        acc ^= images[i]
    return acc


# -- symplectic spaces ------------------------------------------------------


class SymplecticSpace:
    """F2^dim with an alternating (possibly degenerate) bilinear form.

    ``gram[i]`` is the bit row of the Gram matrix for basis vector e_{i+1}:
    bit j of ``gram[i]`` is B(e_{i+1}, e_{j+1}).
    """

    __slots__ = ("dim", "gram", "_dual")

    def __init__(self, dim: int, gram: Sequence[int]):
        if not 1 <= dim <= MAX_DIM:
            raise DimensionError(f"dimension {dim} outside 1..{MAX_DIM}")
        gram = tuple(int(r) for r in gram)
        if len(gram) != dim:
            raise DimensionError(f"gram has {len(gram)} rows, expected {dim}")
        for i, row in enumerate(gram):
            if row >> dim:
                raise DimensionError(f"gram row {i + 1} wider than {dim}")
            if (row >> i) & 1:
                raise ValueError(f"gram diagonal entry {i + 1} is 1; form not alternating")
            for j in bits_of(row):
                if not (gram[j] >> i) & 1:
                    raise ValueError(f"gram not symmetric at ({i + 1},{j + 1})")
        self.dim = dim
        self.gram = gram
        self._dual = [0] * (1 << dim) if dim <= 12 else None
        if self._dual is not None:
            d = self._dual
            for v in range(1, 1 << dim):
                low = v & -v
                d[v] = d[v ^ low] ^ gram[low.bit_length() - 1]

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "SymplecticSpace":
        return cls(len(rows), [vec_from_str(r) for r in rows])

    @classmethod
    def path_form(cls, dim: int) -> "SymplecticSpace":
        """B(e_i, e_j) = 1 exactly when |i - j| = 1."""
        rows = []
        for i in range(dim):
            r = 0
            if i > 0:
                r |= 1 << (i - 1)
            if i < dim - 1:
                r |= 1 << (i + 1)
            rows.append(r)
        return cls(dim, rows)

    @classmethod
    def hyperbolic(cls, planes: int, extra_radical: int = 0) -> "SymplecticSpace":
        """Orthogonal sum of hyperbolic planes (e1,e2), (e3,e4), ... plus a
        totally degenerate summand of dimension ``extra_radical``."""
        dim = 2 * planes + extra_radical
        rows = [0] * dim
        for p in range(planes):
            rows[2 * p] = 1 << (2 * p + 1)
            rows[2 * p + 1] = 1 << (2 * p)
        return cls(dim, rows)

    @classmethod
    def zero_form(cls, dim: int) -> "SymplecticSpace":
        return cls(dim, [0] * dim)

    @classmethod
    def random(cls, dim: int, rng) -> "SymplecticSpace":
        """Uniformly random alternating form; ``rng`` is a ``random.Random``."""
        rows = [0] * dim
        for i in range(dim):
            for j in range(i + 1, dim):
                if rng.getrandbits(1):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(dim, rows)

    def gram_strings(self) -> list[str]:
        return [vec_to_str(r, self.dim) for r in self.gram]

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"SymplecticSpace({self.dim}, {self.gram_strings()})"

    def check(self, *vectors: int) -> None:
        for v in vectors:
            if v < 0 or v >> self.dim:
                raise DimensionError(f"vector {v:#x} does not fit dimension {self.dim}")

    def dual(self, v: int) -> int:
        """theta(v) as a bit row: bit j is B(v, e_{j+1})."""
        if self._dual is not None:
            return self._dual[v]
        acc = 0
        for i in bits_of(v):
            acc ^= self.gram[i]
        return acc

    def form(self, u: int, v: int) -> int:
        return (self.dual(u) & v).bit_count() & 1

    def radical(self) -> list[int]:
        """Basis of rad V, the kernel of the Gram matrix."""
        sol = solve(self.gram, [0] * self.dim, self.dim)
        assert sol is not None
        return sol[1]

    def in_radical(self, v: int) -> bool:
        return self.dual(v) == 0

    def transvect(self, alpha: int, beta: int) -> int:
        """tau_alpha(beta) = beta + B(beta, alpha) alpha."""
        if (self.dual(alpha) & beta).bit_count() & 1:
            return beta ^ alpha
        return beta

    def transvection_matrix(self, alpha: int) -> "BitMatrix":
        self.check(alpha)
        d = self.dual(alpha)
        return BitMatrix(alpha if (d >> i) & 1 else 0 for i in range(self.dim)) ^ BitMatrix.identity(self.dim)


def form_eval(space: SymplecticSpace, u: int, v: int) -> int:
    space.check(u, v)
    return space.form(u, v)


def radical(space: SymplecticSpace) -> list[int]:
    return space.radical()


def transvection_apply(space: SymplecticSpace, alpha: int, beta: int) -> int:
    space.check(alpha, beta)
    return space.transvect(alpha, beta)


def transvection_matrix(space: SymplecticSpace, alpha: int) -> "BitMatrix":
    return space.transvection_matrix(alpha)


# -- matrices ---------------------------------------------------------------


class BitMatrix(tuple):
    """Square F2 matrix; row i is the image of basis vector e_{i+1}.

    ``A @ B`` is the composition "apply B, then A".
    """

    __slots__ = ()

    @classmethod
    def identity(cls, dim: int) -> "BitMatrix":
        return cls(1 << i for i in range(dim))

    @property
    def dim(self) -> int:
        return len(self)

    def apply(self, v: int) -> int:
        acc = 0
        for i in bits_of(v):
            acc ^= self[i]
        return acc

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if len(self) != len(other):
            raise DimensionError("matrix sizes differ")
        return BitMatrix(self.apply(r) for r in other)

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        return BitMatrix(a ^ b for a, b in zip(self, other))

    def __pow__(self, k: int) -> "BitMatrix":
        out = BitMatrix.identity(len(self))
        for _ in range(k):
            out = self @ out
        return out

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self))

    def determinant(self) -> int:
        return 1 if rank(self) == len(self) else 0

    def encode(self) -> int:
        """Rows concatenated into one integer (row 0 in the low bits)."""
        n = len(self)
        code = 0
        for i, r in enumerate(self):
            code |= r << (i * n)
        return code

    @classmethod
    def decode(cls, code: int, dim: int) -> "BitMatrix":
        mask = (1 << dim) - 1
        return cls((code >> (i * dim)) & mask for i in range(dim))

    def to_strings(self) -> list[str]:
        return [vec_to_str(r, len(self)) for r in self]

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        return cls(vec_from_str(r) for r in rows)

    def __repr__(self):
        return f"BitMatrix({self.to_strings()})"


# -- vector sets ------------------------------------------------------------


class VectorSet:
    """An ordered, duplicate-free family of vectors in a symplectic space."""

    __slots__ = ("space", "members")

    def __init__(self, space: SymplecticSpace, members: Iterable[int], allow_zero: bool = False):
        members = tuple(members)
        space.check(*members)
        if len(set(members)) != len(members):
            raise ValueError("duplicate vectors in set")
        if not allow_zero and 0 in members:
            raise ValueError("zero vector in set (pass allow_zero=True to permit it)")
        self.space = space
        self.members = members

    @classmethod
    def from_strings(cls, space: SymplecticSpace, vectors: Sequence[str], **kw) -> "VectorSet":
        for s in vectors:
            if len(s) != space.dim:
                raise DimensionError(f"vector {s!r} has width {len(s)}, expected {space.dim}")
        return cls(space, (vec_from_str(s) for s in vectors), **kw)

    @classmethod
    def standard_basis(cls, space: SymplecticSpace) -> "VectorSet":
        return cls(space, (1 << i for i in range(space.dim)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.members

    def __eq__(self, other):
        return (
            isinstance(other, VectorSet)
            and self.space == other.space
            and set(self.members) == set(other.members)
        )

    def __hash__(self):
        return hash((self.space, frozenset(self.members)))

    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def to_strings(self) -> list[str]:
        return [vec_to_str(v, self.space.dim) for v in self.members]

    def __repr__(self):
        return f"VectorSet({self.to_strings()})"

    def rank(self) -> int:
        return rank(self.members)

    def is_independent(self) -> bool:
        return self.rank() == len(self.members)

    def spans(self) -> bool:
        return self.rank() == self.space.dim

    def radical_members(self) -> list[int]:
        return [v for v in self.members if self.space.in_radical(v)]


def is_independent(space: SymplecticSpace, vs: VectorSet) -> bool:
    return vs.is_independent()


def set_rank(vs: VectorSet) -> int:
    return vs.rank()


def spans(vs: VectorSet) -> bool:
    return vs.spans()
