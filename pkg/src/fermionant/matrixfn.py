"""Exact matrix functions: determinant, permanent, fermionant, immanant.

The fermionant with parameter k of an n x n matrix A is

    (-1)^n * sum over permutations pi of (-k)^(cycles of pi) * prod A[i, pi(i)]

so k = 1 recovers the determinant.  Three routes are provided:

* ``brute``     -- factorial enumeration of permutations (n <= 9); the
                   definition itself, used as the oracle for the others.
* ``dp``        -- subset dynamic programming over directed cycle covers
                   (n <= 20): first the weight sum C(S) of single cycles with
                   vertex set exactly S through min(S), then covers combined
                   one cycle at a time, each cycle weighted -k.
* ``immanants`` -- the character expansion: sum over Young diagrams lam of n
                   with at most k rows of (semistandard tableau count of lam)
                   * (immanant of the transposed diagram), for integer k >= 1.

All arithmetic is exact; capacity bounds are keyword-tunable with the safe
defaults given above.  Everything here is a pure function; the dp route is
sequential and deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .characters import character
from .errors import CapacityError
from .partitions import Partition, count_ssyt, partitions_with_depth_at_most, transpose
from .polynomials import UniPolynomial

BRUTE_DEFAULT_MAX_N = 9
DP_DEFAULT_MAX_N = 20
PERMANENT_DEFAULT_MAX_N = 20
IMMANANTS_DEFAULT_MAX_K = 4


@dataclass(frozen=True)
class Matrix:
    """Square matrix of exact integers, stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix must be square, got row of length {len(r)} in dimension {n}")
            for v in r:
                if not isinstance(v, int):
                    raise ValueError(f"entries must be integers, got {v!r}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def determinant(a: Matrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = a.n
    if n == 0:
        return 1
    m = [list(r) for r in a.rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[c][c]
        for r in range(c + 1, n):
            row_r = m[r]
            row_c = m[c]
            factor = row_r[c]
            for j in range(c + 1, n):
                row_r[j] = (pivot * row_r[j] - factor * row_c[j]) // prev
            row_r[c] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def permanent(a: Matrix, *, max_n: int = PERMANENT_DEFAULT_MAX_N) -> int:
    """Exact permanent by Ryser's inclusion-exclusion with Gray-code updates."""
    n = a.n
    if n > max_n:
        raise CapacityError(f"permanent limited to n <= {max_n}, got {n}")
    if n == 0:
        return 1
    rows = a.rows
    sums = [0] * n
    total = 0
    gray = 0
    sign = 1 if n % 2 == 0 else -1
    for i in range(1, 1 << n):
        new_gray = i ^ (i >> 1)
        bit = gray ^ new_gray
        col = bit.bit_length() - 1
        if new_gray & bit:
            for r in range(n):
                sums[r] += rows[r][col]
        else:
            for r in range(n):
                sums[r] -= rows[r][col]
        gray = new_gray
        prod = 1
        for s in sums:
            prod *= s
            if not prod:
                break
        total += -prod if i % 2 else prod
    return sign * total


def fermionant_cycle_poly(a: Matrix, *, max_n: int = BRUTE_DEFAULT_MAX_N) -> UniPolynomial:
    """f(z) = sum over permutations of z^(cycle count) * prod A[i, pi(i)].

    f(1) is the permanent, (-1)^n f(-1) the determinant, and the fermionant
    is (-1)^n f(-k).
    """
    n = a.n
    if n > max_n:
        raise CapacityError(f"cycle polynomial enumeration limited to n <= {max_n}, got {n}")
    rows = a.rows
    coeffs = [0] * (n + 1)
    rng = range(n)
    for p in itertools.permutations(rng):
        w = 1
        for i in rng:
            w *= rows[i][p[i]]
            if not w:
                break
        if not w:
            continue
        seen = [False] * n
        c = 0
        for i in rng:
            if not seen[i]:
                c += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
        coeffs[c] += w
    return UniPolynomial(tuple(coeffs))


def cycle_type_weight_sums(a: Matrix, *, max_n: int = BRUTE_DEFAULT_MAX_N) -> dict[Partition, int]:
    """For each cycle type mu of n, the sum over permutations of type mu of
    prod A[i, pi(i)].  One factorial sweep; feeds the immanant."""
    n = a.n
    if n > max_n:
        raise CapacityError(f"class-sum enumeration limited to n <= {max_n}, got {n}")
    rows = a.rows
    sums: dict[tuple[int, ...], int] = {}
    rng = range(n)
    for p in itertools.permutations(rng):
        w = 1
        for i in rng:
            w *= rows[i][p[i]]
            if not w:
                break
        if not w:
            continue
        seen = [False] * n
        lengths = []
        for i in rng:
            if not seen[i]:
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
                    length += 1
                lengths.append(length)
        lengths.sort(reverse=True)
        key = tuple(lengths)
        sums[key] = sums.get(key, 0) + w
    return {Partition(k): v for k, v in sums.items()}


def _fermionant_brute(a: Matrix, k: int, max_n: int) -> int:
    f = fermionant_cycle_poly(a, max_n=max_n)
    value = f(-k)
    return -value if a.n % 2 else value


def _fermionant_dp(a: Matrix, k: int, max_n: int) -> int:
    n = a.n
    if n > max_n:
        raise CapacityError(f"dp fermionant limited to n <= {max_n}, got {n}")
    if n == 0:
        return 1
    rows = a.rows
    full = (1 << n) - 1

    # C[mask] = weight sum of single directed cycles with vertex set exactly
    # mask, passing through its lowest vertex; 1-cycles take the diagonal.
    C = [0] * (full + 1)
    for m in range(n):
        C[1 << m] = rows[m][m]
        higher = range(m + 1, n)
        # paths[mask][j]: weight sum of simple paths m -> j with interior in
        # `higher`, mask over the vertices above m that the path uses.
        paths: dict[int, dict[int, int]] = {0: {m: 1}}
        masks = [0]
        idx = 0
        while idx < len(masks):
            mask = masks[idx]
            idx += 1
            ends = paths[mask]
            for j, w in list(ends.items()):
                row_j = rows[j]
                for l in higher:
                    bit = 1 << l
                    if mask & bit:
                        continue
                    wa = row_j[l]
                    if not wa:
                        continue
                    nm = mask | bit
                    d = paths.get(nm)
                    if d is None:
                        paths[nm] = {l: w * wa}
                        masks.append(nm)
                    else:
                        d[l] = d.get(l, 0) + w * wa
        for mask, ends in paths.items():
            if mask == 0:
                continue
            s = 0
            for j, w in ends.items():
                wa = rows[j][m]
                if wa:
                    s += w * wa
            if s:
                C[mask | (1 << m)] = s

    # covers: peel off the cycle through the lowest vertex of each subset
    negk = -k
    F = [0] * (full + 1)
    F[0] = 1
    for S in range(1, full + 1):
        low = S & (-S)
        rest = S ^ low
        acc = 0
        Tp = rest
        while True:
            c = C[low | Tp]
            if c:
                acc += c * F[S ^ (low | Tp)]
            if Tp == 0:
                break
            Tp = (Tp - 1) & rest
        F[S] = negk * acc
    return -F[full] if n % 2 else F[full]


def immanant(a: Matrix, lam: Partition, *, max_n: int = BRUTE_DEFAULT_MAX_N) -> int:
    """sum over permutations of chi_lam(pi) * prod A[i, pi(i)].

    The single-column shape gives the determinant, the single row the
    permanent.  chi is a class function, so the sum is grouped by cycle type.
    """
    n = a.n
    if lam.size != n:
        raise ValueError(f"shape {lam} partitions {lam.size}, matrix has dimension {n}")
    sums = cycle_type_weight_sums(a, max_n=max_n)
    return sum(character(lam, mu) * w for mu, w in sums.items())


def fermionant_via_immanants(
    a: Matrix, k: int, *, max_n: int = BRUTE_DEFAULT_MAX_N, max_k: int = IMMANANTS_DEFAULT_MAX_K
) -> int:
    """Fermionant through the character expansion over Young diagrams of
    depth at most k (transposed inside the immanant), for integer k >= 1."""
    n = a.n
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"immanants route requires a positive integer k, got {k}")
    if k > max_k:
        raise CapacityError(f"immanants route limited to k <= {max_k}, got {k}")
    if n > max_n:
        raise CapacityError(f"immanants route limited to n <= {max_n}, got {n}")
    if n == 0:
        return 1
    sums = cycle_type_weight_sums(a, max_n=max_n)
    total = 0
    for lam in partitions_with_depth_at_most(n, k):
        d = count_ssyt(lam, k)
        lam_t = transpose(lam)
        imm = sum(character(lam_t, mu) * w for mu, w in sums.items())
        total += d * imm
    return total


def fermionant(
    a: Matrix,
    k: int,
    algorithm: str = "dp",
    *,
    brute_max_n: int = BRUTE_DEFAULT_MAX_N,
    dp_max_n: int = DP_DEFAULT_MAX_N,
) -> int:
    """Fermionant of a with parameter k via ``brute``, ``dp`` or
    ``immanants``.  k may be any integer for brute/dp; the immanants route
    requires 1 <= k <= 4.  All routes agree wherever their bounds overlap."""
    if algorithm == "brute":
        return _fermionant_brute(a, k, brute_max_n)
    if algorithm == "dp":
        return _fermionant_dp(a, k, dp_max_n)
    if algorithm == "immanants":
        return fermionant_via_immanants(a, k, max_n=brute_max_n)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected brute, dp or immanants")
