"""Dense bivariate polynomials of total degree at most three.

Coefficients live in a 4x4 table c[i, j] for the monomial x^i y^j with
i + j <= 3. That fixed shape is all the edge construction ever needs.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

from .geometry import Point

MAX_DEGREE = 3

#: Monomial exponents in graded-lexicographic order, highest degree first,
#: higher x-power first within a degree. Used for sign canonicalization.
GRLEX_ORDER: tuple[tuple[int, int], ...] = tuple(
    (i, d - i) for d in range(MAX_DEGREE, -1, -1) for i in range(d, -1, -1)
)

_DEGREE_MASK = np.add.outer(np.arange(4), np.arange(4)) <= MAX_DEGREE


class ZeroPolynomial(ValueError):
    """Raised when all coefficients vanish."""


class BivariatePoly:
    """Immutable dense polynomial sum(c[i, j] * x^i * y^j), i + j <= 3."""

    __slots__ = ("_c",)

    def __init__(self, coeff) -> None:
        c = np.array(coeff, dtype=float)
        if c.shape != (4, 4):
            raise ValueError("coefficient table must have shape (4, 4)")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if np.any(c[~_DEGREE_MASK] != 0.0):
            raise ValueError("total degree above three is not representable")
        if not np.any(c):
            raise ZeroPolynomial("the zero polynomial is rejected")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], float]) -> "BivariatePoly":
        c = np.zeros((4, 4))
        for (i, j), v in terms.items():
            c[i, j] = v
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def coefficient(self, i: int, j: int) -> float:
        return float(self._c[i, j])

    def __call__(self, x, y):
        return npoly.polyval2d(x, y, self._c)

    def __repr__(self) -> str:
        terms = [
            f"{self._c[i, j]:+g}*x^{i}*y^{j}"
            for (i, j) in GRLEX_ORDER
            if self._c[i, j] != 0.0
        ]
        return "BivariatePoly(" + " ".join(terms) + ")"

    def partial_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Coefficient tables of df/dx and df/dy (exact differentiation)."""
        cx = np.zeros((4, 4))
        cy = np.zeros((4, 4))
        cx[:3, :] = self._c[1:, :] * np.arange(1, 4)[:, None]
        cy[:, :3] = self._c[:, 1:] * np.arange(1, 4)[None, :]
        return cx, cy

    def gradient_at(self, p: Point) -> tuple[float, float]:
        cx, cy = self.partial_arrays()
        return (
            float(npoly.polyval2d(p.x, p.y, cx)),
            float(npoly.polyval2d(p.x, p.y, cy)),
        )

    def second_partials_at(self, p: Point) -> tuple[float, float, float]:
        """(f_xx, f_xy, f_yy) at p."""
        cx, cy = self.partial_arrays()
        cxx = np.zeros((4, 4))
        cxy = np.zeros((4, 4))
        cyy = np.zeros((4, 4))
        cxx[:3, :] = cx[1:, :] * np.arange(1, 4)[:, None]
        cxy[:, :3] = cx[:, 1:] * np.arange(1, 4)[None, :]
        cyy[:, :3] = cy[:, 1:] * np.arange(1, 4)[None, :]
        return (
            float(npoly.polyval2d(p.x, p.y, cxx)),
            float(npoly.polyval2d(p.x, p.y, cxy)),
            float(npoly.polyval2d(p.x, p.y, cyy)),
        )

    def effective_degree(self, tol: float = 1e-10) -> int:
        return effective_degree(self, tol)

    def normalized(self) -> "BivariatePoly":
        return normalize(self)


def evaluate(f: BivariatePoly, p: Point) -> float:
    """Evaluate f at p (iterated Horner via polyval2d)."""
    return float(f(p.x, p.y))


def gradient(f: BivariatePoly, p: Point) -> tuple[float, float]:
    """(df/dx, df/dy) at p, from exact coefficient-wise differentiation."""
    return f.gradient_at(p)


def effective_degree(f: BivariatePoly, tol: float = 1e-10) -> int:
    """Largest total degree whose coefficients rise above tol * max|coeff|.

    The threshold is relative because edge coefficients scale with the
    configuration magnitudes.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    c = np.abs(f.coeffs)
    cutoff = tol * c.max()
    for d in range(MAX_DEGREE, 0, -1):
        if any(c[i, d - i] > cutoff for i in range(d + 1)):
            return d
    return 0


def normalize(f: BivariatePoly) -> BivariatePoly:
    """Scale so the largest-magnitude coefficient is 1 and the first nonzero
    coefficient in graded-lex order is positive. Idempotent; preserves the
    zero set."""
    c = f.coeffs.copy()
    scale = np.abs(c).max()
    c /= scale
    for (i, j) in GRLEX_ORDER:
        if c[i, j] != 0.0:
            if c[i, j] < 0.0:
                c = -c
            break
    return BivariatePoly(c)


def poly_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two coefficient tables (full 2-D convolution), clipped back
    to a 4x4 table. Raises if the true product exceeds degree three."""
    full = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            if a[i, j] != 0.0:
                full[i : i + b.shape[0], j : j + b.shape[1]] += a[i, j] * b
    for i in range(full.shape[0]):
        for j in range(full.shape[1]):
            if i + j > MAX_DEGREE and full[i, j] != 0.0:
                raise ValueError("product exceeds total degree three")
    return _pad4(full[:4, :4])


def _pad4(c: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4))
    out[: c.shape[0], : c.shape[1]] = c
    return out


def compose_affine(
    f: BivariatePoly,
    x_sub: tuple[float, float, float],
    y_sub: tuple[float, float, float],
) -> np.ndarray:
    """Coefficients of f(px*X + qx*Y + rx, py*X + qy*Y + ry).

    Substituting affine forms into a degree-3 polynomial keeps the degree, so
    the result fits the same 4x4 table.
    """
    px, qx, rx = x_sub
    py, qy, ry = y_sub
    xs = _pad4(np.array([[rx, qx], [px, 0.0]]))
    ys = _pad4(np.array([[ry, qy], [py, 0.0]]))
    one = _pad4(np.array([[1.0]]))

    # Powers of the substituted linear forms, degree 0..3.
    xp = [one]
    yp = [one]
    for _ in range(3):
        xp.append(poly_mul(xp[-1][:4, :4], xs))
        yp.append(poly_mul(yp[-1][:4, :4], ys))

    out = np.zeros((4, 4))
    c = f.coeffs
    for i in range(4):
        for j in range(4):
            if c[i, j] != 0.0:
                out += c[i, j] * poly_mul(xp[i], yp[j])[:4, :4]
    return out
