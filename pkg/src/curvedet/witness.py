"""Randomized constructive verification over a prime field.

Decisions about general forms are checked by actually sampling: build a
matrix of random forms realizing a degree matrix over F_p, measure the
degree of its determinant by restricting to random lines (evaluation at
degree + 1 parameter values, then interpolation), compute maximal
minors by exact cofactor expansion, and compare graded-piece dimensions
of the minor ideal, obtained as ranks of coefficient matrices over F_p,
against the predicted Hilbert function.

Forms are dense coefficient vectors over F_p indexed by the graded
lexicographic order on monomials x^i y^j z^k (x > y > z) within each
degree.  Serialized coefficient vectors follow this order exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .decide import contains_subscheme, representable
from .degree_matrix import DegreeMatrix, DHBMatrix, WellOrderedSquare, insert_row_sorted
from .errors import FieldTooSmallError, VerificationMismatchError
from .resolution import betti_of_matrix, hilbert_function, plane_dim

DEFAULT_PRIME = 32003


@lru_cache(maxsize=None)
def monomials(m: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of degree m in graded-lex order, x > y > z."""
    return tuple(
        (i, j, m - i - j) for i in range(m, -1, -1) for j in range(m - i, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(m: int) -> dict[tuple[int, int], int]:
    """Index of (x-exponent, y-exponent) within the degree-m order."""
    return {(i, j): idx for idx, (i, j, _) in enumerate(monomials(m))}


@dataclass(frozen=True)
class Form:
    """A homogeneous trivariate polynomial over F_p (dense coefficients).

    The zero form is represented with degree -1 and no coefficients; an
    all-zero coefficient vector of non-negative degree is also zero.
    """

    degree: int
    coeffs: tuple[int, ...]
    prime: int

    def __post_init__(self):
        expected = plane_dim(self.degree) if self.degree >= 0 else 0
        if len(self.coeffs) != expected:
            raise ValueError(f"degree-{self.degree} form needs {expected} coefficients")

    @property
    def is_zero(self) -> bool:
        return self.degree < 0 or all(c == 0 for c in self.coeffs)

    def coefficient_vector(self) -> tuple[int, ...]:
        return self.coeffs

    def __add__(self, other: "Form") -> "Form":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        p = self.prime
        return Form(self.degree, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), p)

    def __neg__(self) -> "Form":
        p = self.prime
        return Form(self.degree, tuple((-c) % p for c in self.coeffs), p)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other: "Form") -> "Form":
        if self.is_zero or other.is_zero:
            return zero_form(self.prime)
        p = self.prime
        m = self.degree + other.degree
        index = monomial_index(m)
        out = [0] * plane_dim(m)
        mono_a = monomials(self.degree)
        mono_b = monomials(other.degree)
        for ca, (ia, ja, _) in zip(self.coeffs, mono_a):
            if ca == 0:
                continue
            for cb, (ib, jb, _) in zip(other.coeffs, mono_b):
                if cb == 0:
                    continue
                k = index[(ia + ib, ja + jb)]
                out[k] = (out[k] + ca * cb) % p
        return Form(m, tuple(out), p)

    def scale(self, c: int) -> "Form":
        if self.is_zero:
            return self
        p = self.prime
        c %= p
        return Form(self.degree, tuple((c * x) % p for x in self.coeffs), p)

    def evaluate(self, point: tuple[int, int, int]) -> int:
        if self.is_zero:
            return 0
        p = self.prime
        x, y, z = (c % p for c in point)
        m = self.degree
        xp = _power_table(x, m, p)
        yp = _power_table(y, m, p)
        zp = _power_table(z, m, p)
        total = 0
        for c, (i, j, k) in zip(self.coeffs, monomials(m)):
            if c:
                total += c * xp[i] % p * yp[j] % p * zp[k]
        return total % p


def _power_table(x: int, m: int, p: int) -> list[int]:
    out = [1] * (m + 1)
    for i in range(1, m + 1):
        out[i] = out[i - 1] * x % p
    return out


def zero_form(prime: int) -> Form:
    return Form(-1, (), prime)


def random_form(m: int, rng: random.Random, prime: int = DEFAULT_PRIME) -> Form:
    """A form of degree m with independent uniform coefficients in F_p."""
    if m < 0:
        raise ValueError("random_form needs m >= 0; negative degrees force the zero form")
    return Form(m, tuple(rng.randrange(prime) for _ in range(plane_dim(m))), prime)


@dataclass(frozen=True)
class FormMatrix:
    """A matrix of forms realizing an integer degree matrix.

    Entries at negative-degree slots are identically zero; every other
    entry has exactly the prescribed degree.
    """

    entries: tuple[tuple[Form, ...], ...]
    degree_matrix: DegreeMatrix
    prime: int

    def __post_init__(self):
        grid = self.degree_matrix.entries
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                m = grid[i][j]
                if m < 0:
                    if not f.is_zero:
                        raise ValueError(f"entry ({i + 1},{j + 1}) must vanish (degree {m})")
                elif f.degree != m and not f.is_zero:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) has degree {f.degree}, expected {m}"
                    )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])


def sample_matrix(M, rng: random.Random, prime: int = DEFAULT_PRIME) -> FormMatrix:
    """Random forms of the prescribed degrees; zero where the degree is negative."""
    base = M.base if isinstance(M, (WellOrderedSquare, DHBMatrix)) else M
    if not isinstance(base, DegreeMatrix):
        base = DegreeMatrix.from_grid(M)
    entries = tuple(
        tuple(
            random_form(m, rng, prime) if m >= 0 else zero_form(prime)
            for m in row
        )
        for row in base.entries
    )
    return FormMatrix(entries, base, prime)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def _det_numeric(mat: list[list[int]], p: int) -> int:
    """Determinant of a small integer matrix mod p by Gaussian elimination."""
    n = len(mat)
    a = [row[:] for row in mat]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] % p != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col] % p
        inv = pow(a[col][col], -1, p)
        for r in range(col + 1, n):
            f = a[r][col] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return det % p


def det_form(N: FormMatrix) -> Form:
    """Full trivariate determinant by cofactor expansion.

    Subdeterminants are memoized on the column subset, so the n minors
    of an (n-1) x n matrix share all their recursive work.  Intended
    for small matrices (n <= 6).
    """
    if N.rows != N.cols:
        raise ValueError("determinant needs a square matrix")
    return _det_cofactor(N.entries, tuple(range(N.cols)), {}, N.prime)


def _det_cofactor(rows, cols: tuple[int, ...], memo: dict, p: int) -> Form:
    key = cols
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = len(cols)
    first = len(rows) - k  # expand along this row; trailing rows pair with cols
    if k == 1:
        result = rows[first][cols[0]]
    else:
        result = zero_form(p)
        for idx, j in enumerate(cols):
            f = rows[first][j]
            if f.is_zero:
                continue
            sub = _det_cofactor(rows, cols[:idx] + cols[idx + 1 :], memo, p)
            term = f * sub
            result = result + (term if idx % 2 == 0 else -term)
    memo[key] = result
    return result


def maximal_minors(A: FormMatrix) -> tuple[Form, ...]:
    """The n signed maximal minors of an (n-1) x n matrix of forms.

    Minor j erases column j (1-based) and carries the sign (-1)^j; for
    a valid presentation matrix the nonzero minors have exactly the
    prescribed minor degrees and generate the ideal of the scheme.
    """
    if A.rows + 1 != A.cols:
        raise ValueError("maximal minors expect an (n-1) x n matrix")
    if A.cols > 6:
        raise ValueError("cofactor expansion budget is n <= 6")
    memo: dict = {}
    cols = tuple(range(A.cols))
    out = []
    for j in range(A.cols):
        det = _det_cofactor(A.entries, cols[:j] + cols[j + 1 :], memo, A.prime)
        out.append(det if (j + 1) % 2 == 0 else -det)
    return tuple(out)


# ---------------------------------------------------------------------------
# degree measurement on random lines
# ---------------------------------------------------------------------------


def _interpolate(ys: list[int], p: int) -> list[int]:
    """Coefficients of the unique poly of degree < len(ys) with f(i) = ys[i]."""
    n = len(ys)
    # Newton's divided differences over F_p at nodes 0, 1, ..., n-1
    table = [y % p for y in ys]
    newton = [table[0]]
    for level in range(1, n):
        inv = pow(level, -1, p)
        table = [(table[i + 1] - table[i]) * inv % p for i in range(len(table) - 1)]
        newton.append(table[0])
    # expand sum newton[k] * prod_{i<k} (t - i)
    coeffs = [0] * n
    basis = [1]  # coefficients of prod_{i<k} (t - i)
    for k, ck in enumerate(newton):
        if ck:
            for i, bi in enumerate(basis):
                coeffs[i] = (coeffs[i] + ck * bi) % p
        if k < n - 1:
            shifted = [0] + basis
            basis = [(shifted[i] - k * (basis[i] if i < len(basis) else 0)) % p for i in range(len(basis) + 1)]
    return coeffs


def _poly_degree(coeffs: list[int]) -> int | None:
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i
    return None


def restrict_det_to_line(N: FormMatrix, line, max_degree: int) -> list[int]:
    """Coefficients (in the line parameter) of det(N) restricted to a line.

    The line is (P, Q): the parametrization s -> P + s Q.  The entries
    are evaluated at max_degree + 1 parameter values and the restricted
    determinant is recovered by interpolation.
    """
    p = N.prime
    if p <= max_degree:
        raise FieldTooSmallError(f"prime {p} is too small to interpolate degree {max_degree}")
    (p0, p1, p2), (q0, q1, q2) = line
    values = []
    for s in range(max_degree + 1):
        point = (p0 + s * q0, p1 + s * q1, p2 + s * q2)
        numeric = [[f.evaluate(point) for f in row] for row in N.entries]
        values.append(_det_numeric(numeric, p))
    return _interpolate(values, p)


def random_line(rng: random.Random, prime: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    return (
        tuple(rng.randrange(prime) for _ in range(3)),
        tuple(rng.randrange(prime) for _ in range(3)),
    )


@dataclass
class LineDegreeReport:
    identically_zero: bool
    observed_degree: int | None
    per_trial: list[int | None]


def det_degree_on_lines(N: FormMatrix, trials: int, rng: random.Random) -> LineDegreeReport:
    """Measure the determinant degree by restriction to random lines.

    Reports the maximum interpolated degree over the trials, or
    identically zero when every restriction vanishes.
    """
    if N.rows != N.cols:
        raise ValueError("determinant degree needs a square matrix")
    if trials < 1:
        raise ValueError("need at least one trial")
    d = sum(N.degree_matrix.entries[i][i] for i in range(N.rows))
    per_trial: list[int | None] = []
    for _ in range(trials):
        coeffs = restrict_det_to_line(N, random_line(rng, N.prime), max(d, 0))
        per_trial.append(_poly_degree(coeffs))
    observed = max((deg for deg in per_trial if deg is not None), default=None)
    return LineDegreeReport(observed is None, observed, per_trial)


# ---------------------------------------------------------------------------
# graded pieces of the minor ideal
# ---------------------------------------------------------------------------


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 0
    a = np.array(rows, dtype=np.int64) % p
    m, n = a.shape
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, m):
            if a[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        for r in range(m):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
        if rank == m:
            break
    return rank


def _graded_piece_rows(gens, t: int, p: int) -> list[list[int]]:
    """Coefficient vectors of all monomial multiples of the gens in degree t."""
    rows = []
    index = monomial_index(t)
    width = plane_dim(t)
    for g in gens:
        if g.is_zero or g.degree > t:
            continue
        g_mono = monomials(g.degree)
        for (a, b, _c) in monomials(t - g.degree):
            row = [0] * width
            for coeff, (i, j, _k) in zip(g.coeffs, g_mono):
                if coeff:
                    row[index[(i + a, j + b)]] = coeff
            rows.append(row)
    return rows


def ideal_dim(gens, t: int) -> int:
    """Dimension over F_p of the degree-t piece of the ideal the forms generate."""
    if t < 0:
        raise ValueError("need t >= 0")
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return 0
    p = gens[0].prime
    return _rank_mod_p(_graded_piece_rows(gens, t, p), p)


def _in_span(gens, f: Form, t: int) -> bool:
    """Whether f lies in the degree-t graded piece spanned by the gens' multiples."""
    p = f.prime
    rows = _graded_piece_rows([g for g in gens if not g.is_zero], t, p)
    base = _rank_mod_p(rows, p)
    return _rank_mod_p(rows + [list(f.coeffs)], p) == base


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------


@dataclass
class WitnessReport:
    seed: int
    prime: int
    trials: int
    verdict_checked: dict
    observed_degrees: list[int | None] = field(default_factory=list)
    hf_profile: list[dict] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def raise_if_mismatched(self):
        if self.mismatches:
            raise VerificationMismatchError(
                f"seed {self.seed}: " + "; ".join(self.mismatches)
            )

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "prime": self.prime,
            "trials": self.trials,
            "verdictChecked": self.verdict_checked,
            "observedDegrees": self.observed_degrees,
            "hfProfile": self.hf_profile,
            "mismatches": self.mismatches,
        }


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


def verify_representable(grid, trials: int = 10, seed: int = 0,
                         prime: int = DEFAULT_PRIME) -> WitnessReport:
    """Check a representability decision by random sampling.

    yes: some trial must restrict to the full degree d.  no by a
    negative diagonal entry: every restriction must vanish identically.
    no by a bad subdiagonal block: the determinant must factor as the
    product of the two block determinants, with degrees e' and d - e'.
    """
    decision = representable(grid)
    report = WitnessReport(seed, prime, trials, decision.to_json())
    M = WellOrderedSquare(DegreeMatrix.from_grid(decision.normalized))
    d = decision.degree
    if prime <= d:
        raise FieldTooSmallError(f"prime {prime} is too small for degree {d}")

    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        N = sample_matrix(M, rng, prime)
        line = random_line(rng, prime)
        coeffs = restrict_det_to_line(N, line, max(d, 0))
        deg = _poly_degree(coeffs)
        report.observed_degrees.append(deg)

        if decision.verdict:
            if deg is not None and deg > d:
                report.mismatches.append(f"trial {trial}: degree {deg} exceeds {d}")
        elif decision.reason == "DiagonalNegative":
            if deg is not None:
                report.mismatches.append(f"trial {trial}: expected zero determinant, saw degree {deg}")
        elif decision.reason == "SubdiagonalBlockDegree":
            k = decision.k
            lead = _block(N, 0, k - 1)
            trail = _block(N, k - 1, M.n)
            e_lead = d - decision.block_degree
            c_lead = restrict_det_to_line(lead, line, max(e_lead, 0))
            c_trail = restrict_det_to_line(trail, line, max(decision.block_degree, 0))
            product = _poly_mul(c_lead, c_trail, prime)
            if _poly_degree(c_lead) != e_lead:
                report.mismatches.append(f"trial {trial}: leading block degree {_poly_degree(c_lead)} != {e_lead}")
            if _poly_degree(c_trail) != decision.block_degree:
                report.mismatches.append(
                    f"trial {trial}: trailing block degree {_poly_degree(c_trail)} != {decision.block_degree}"
                )
            if _poly_trim(product, prime) != _poly_trim(coeffs, prime):
                report.mismatches.append(f"trial {trial}: block determinants do not multiply to the determinant")

    if decision.verdict and not report.mismatches:
        if all(deg != d for deg in report.observed_degrees):
            report.mismatches.append(f"no trial realized the full degree {d}")
    return report


def _block(N: FormMatrix, start: int, stop: int) -> FormMatrix:
    entries = tuple(row[start:stop] for row in N.entries[start:stop])
    grid = tuple(row[start:stop] for row in N.degree_matrix.entries[start:stop])
    u = N.degree_matrix.row_potentials[start:stop]
    v = N.degree_matrix.col_potentials[start:stop]
    v0 = v[0]
    base = DegreeMatrix(grid, tuple(x + v0 for x in u), tuple(x - v0 for x in v))
    return FormMatrix(entries, base, N.prime)


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_trim(a: list[int], p: int) -> list[int]:
    out = [x % p for x in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def verify_subscheme(Q: DHBMatrix, d: int, trials: int = 10, seed: int = 0,
                     prime: int = DEFAULT_PRIME) -> WitnessReport:
    """Check a positive containment decision constructively.

    Per trial, sample a presentation matrix, append a row of random
    forms of the complementary degrees, and confirm that the square
    determinant (a curve of degree d) lies in the ideal generated by
    the maximal minors, and that the ideal's graded-piece dimensions
    match the predicted Hilbert function up to b_1.
    """
    decision = contains_subscheme(Q, d)
    report = WitnessReport(seed, prime, trials, decision.to_json())
    if not decision.verdict:
        report.mismatches.append("verify_subscheme requires a positive decision")
        return report
    if prime <= d:
        raise FieldTooSmallError(f"prime {prime} is too small for degree {d}")

    B = betti_of_matrix(Q)
    b1 = B.syz[0]
    a = Q.minor_degrees
    row_degrees = tuple(d - aj for aj in a)
    square_degrees, pos = insert_row_sorted(Q, row_degrees)

    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        A = sample_matrix(Q, rng, prime)
        minors = maximal_minors(A)
        for g, aj in zip(minors, a):
            if not g.is_zero and g.degree != aj:
                report.mismatches.append(f"trial {trial}: minor degree {g.degree} != {aj}")

        new_row = tuple(
            random_form(m, rng, prime) if m >= 0 else zero_form(prime) for m in row_degrees
        )
        entries = A.entries[: pos - 1] + (new_row,) + A.entries[pos - 1 :]
        N = FormMatrix(entries, square_degrees.base, prime)
        F = det_form(N)

        line = random_line(rng, prime)
        coeffs = restrict_det_to_line(N, line, d)
        deg = _poly_degree(coeffs)
        report.observed_degrees.append(deg)
        if deg != d:
            report.mismatches.append(f"trial {trial}: curve degree {deg} != {d}")
            continue
        if F.is_zero or not _in_span(minors, F, d):
            report.mismatches.append(f"trial {trial}: determinant is not in the minor ideal")

        profile = []
        for t in range(b1 + 1):
            predicted = hilbert_function(B, t)
            observed = plane_dim(t) - ideal_dim(minors, t)
            profile.append({"t": t, "predicted": predicted, "observed": observed})
            if predicted != observed:
                report.mismatches.append(
                    f"trial {trial}: Hilbert function at level {t} is {observed}, predicted {predicted}"
                )
        if trial == 0:
            report.hf_profile = profile
    return report
