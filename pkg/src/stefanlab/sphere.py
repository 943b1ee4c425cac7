"""Radial-graph interfaces over the unit circle with spectral calculus.

The interface is a graph r = 1 + f over the unit sphere S^{n-1}; the
implemented dimension is n = 2 (unit circle), but every formula keeps the
ambient dimension ``NDIM`` symbolic where it enters, so an axisymmetric
n >= 3 extension changes basis machinery, not call sites.

Basis convention (L2-orthonormal on the circle):

    s_0        = 1/sqrt(2 pi)
    s_{k,cos}  = cos(k theta)/sqrt(pi),   k >= 1
    s_{k,sin}  = sin(k theta)/sqrt(pi)

Coefficient vectors are laid out [c0, a1, b1, a2, b2, ..., aK, bK] where
a_k/b_k multiply the normalized cos/sin harmonics of degree k.  Collocation
uses M equispaced angles; nonlinear operations (products, quotients) are
done pointwise at the collocation nodes and truncated back to degree K,
which is alias-free for up to four band-limited factors when M >= 4K.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GraphViolation

NDIM = 2  # ambient dimension; interfaces are graphs over S^{NDIM-1}

SPHERE_AREA = 2.0 * np.pi  # |S^{n-1}| for n = 2


def collocation_angles(m):
    """M equispaced angles theta_j = 2 pi j / M."""
    return 2.0 * np.pi * np.arange(m) / m


def coeffs_from_values(values, kmax):
    """Orthonormal harmonic coefficients of a sampled angular field.

    Exact for fields band-limited to degree <= (M-1)//2; higher content is
    discarded (truncation to degree kmax).
    """
    values = np.asarray(values, dtype=float)
    m = values.shape[-1]
    if m < 2 * kmax + 2:
        raise ValueError(f"need M >= 2K+2 collocation points, got M={m}, K={kmax}")
    spec = np.fft.rfft(values, axis=-1)
    scale = 2.0 * np.pi / m
    coeffs = np.zeros(values.shape[:-1] + (2 * kmax + 1,))
    coeffs[..., 0] = scale * spec[..., 0].real / np.sqrt(2.0 * np.pi)
    k = np.arange(1, kmax + 1)
    coeffs[..., 2 * k - 1] = scale * spec[..., k].real / np.sqrt(np.pi)
    coeffs[..., 2 * k] = -scale * spec[..., k].imag / np.sqrt(np.pi)
    return coeffs


def values_from_coeffs(coeffs, m):
    """Evaluate a coefficient vector at M equispaced collocation angles."""
    coeffs = np.asarray(coeffs, dtype=float)
    kmax = (coeffs.shape[-1] - 1) // 2
    spec = np.zeros(coeffs.shape[:-1] + (m // 2 + 1,), dtype=complex)
    spec[..., 0] = coeffs[..., 0] * m / np.sqrt(2.0 * np.pi)
    k = np.arange(1, kmax + 1)
    spec[..., k] = (coeffs[..., 2 * k - 1] - 1j * coeffs[..., 2 * k]) * m / (2.0 * np.sqrt(np.pi))
    return np.fft.irfft(spec, n=m, axis=-1)


def truncate_values(values, kmax):
    """Project a sampled field onto degrees <= kmax (de-aliasing filter)."""
    return values_from_coeffs(coeffs_from_values(values, kmax), np.asarray(values).shape[-1])


def degree_of_index(ncoeff):
    """Harmonic degree of each slot in the coefficient layout."""
    idx = np.arange(ncoeff)
    return np.where(idx == 0, 0, (idx + 1) // 2)


def deriv_theta_coeffs(coeffs):
    """d/dtheta in coefficient space: cos k -> -k sin k, sin k -> k cos k."""
    out = np.zeros_like(coeffs)
    kmax = (coeffs.shape[-1] - 1) // 2
    k = np.arange(1, kmax + 1)
    out[..., 2 * k - 1] = k * coeffs[..., 2 * k]
    out[..., 2 * k] = -k * coeffs[..., 2 * k - 1]
    return out


def laplace_beltrami_coeffs(coeffs, n=NDIM):
    """Spectral Laplace-Beltrami: degree-k coefficient scaled by -k(k+n-2)."""
    deg = degree_of_index(coeffs.shape[-1])
    return coeffs * (-deg * (deg + n - 2))


def z_form_coeffs(coeffs, n=NDIM):
    """Quadratic form Z(h) = int |grad_g h|^2 - (n-1) h^2 from coefficients.

    Spectrally Z = sum_k [k(k+n-2) - (n-1)] * (sum of squared degree-k
    coefficients); degree 1 is annihilated, degree 0 contributes -(n-1)|c0|^2.
    """
    deg = degree_of_index(coeffs.shape[-1])
    return float(np.sum((deg * (deg + n - 2) - (n - 1)) * coeffs**2))


def quad_weight(m):
    """Weight of the equispaced quadrature rule on the circle (exact for band-limited)."""
    return 2.0 * np.pi / m


def circle_integral(values):
    """int_{S^1} h dtheta by the spectrally exact equispaced rule."""
    values = np.asarray(values)
    return quad_weight(values.shape[-1]) * values.sum(axis=-1)


def harmonic_project(values, n=NDIM):
    """Split a sampled field into mean, first momenta, and the orthogonal rest.

    Returns (P0, P1, P2plus) with P0 the mean over the sphere, P1 the vector
    of first momenta int h s_i dtheta against the normalized degree-1
    harmonics, and P2plus the sampled remainder
    h - P0 - sum_i P1_i s_i.
    """
    values = np.asarray(values, dtype=float)
    m = values.shape[-1]
    theta = collocation_angles(m)
    p0 = circle_integral(values) / SPHERE_AREA
    s1 = np.cos(theta) / np.sqrt(np.pi)
    s2 = np.sin(theta) / np.sqrt(np.pi)
    p1 = np.array([circle_integral(values * s1), circle_integral(values * s2)])
    p2plus = values - p0 - p1[0] * s1 - p1[1] * s2
    return p0, p1, p2plus


def first_momenta(values):
    """P1 h = (int h s_1, int h s_2) with the normalized degree-1 harmonics."""
    return harmonic_project(values)[1]


@dataclass(frozen=True)
class RadialGraph:
    """Interface perturbation f with synchronized spectral/collocation views.

    Invariants: coeffs and values agree through the harmonic transform to
    round-off, and the graph condition 1 + f > 0 holds at every node.
    Instances are immutable; all operations return new objects.
    """

    coeffs: np.ndarray
    values: np.ndarray
    kmax: int
    m: int

    @classmethod
    def from_coeffs(cls, coeffs, m):
        coeffs = np.asarray(coeffs, dtype=float)
        kmax = (coeffs.shape[-1] - 1) // 2
        if m < 2 * kmax + 2:
            raise ValueError(f"collocation count M={m} too small for K={kmax}")
        values = values_from_coeffs(coeffs, m)
        return cls(coeffs=coeffs, values=values, kmax=kmax, m=m)

    @classmethod
    def from_values(cls, values, kmax):
        values = np.asarray(values, dtype=float)
        coeffs = coeffs_from_values(values, kmax)
        # store the band-limited representation so both views agree exactly
        return cls(coeffs=coeffs, values=values_from_coeffs(coeffs, values.shape[-1]),
                   kmax=kmax, m=values.shape[-1])

    @classmethod
    def from_modes(cls, modes, kmax, m):
        """Build from a list of (degree, cos_amp[, sin_amp]) triples."""
        coeffs = np.zeros(2 * kmax + 1)
        for mode in modes:
            k, amp_cos = int(mode[0]), float(mode[1])
            amp_sin = float(mode[2]) if len(mode) > 2 else 0.0
            if k == 0:
                coeffs[0] += amp_cos * np.sqrt(2.0 * np.pi)
            else:
                if k > kmax:
                    raise ValueError(f"mode degree {k} exceeds K={kmax}")
                # amplitudes are plain cos/sin amplitudes, not normalized ones
                coeffs[2 * k - 1] += amp_cos * np.sqrt(np.pi)
                coeffs[2 * k] += amp_sin * np.sqrt(np.pi)
        return cls.from_coeffs(coeffs, m)

    @property
    def theta(self):
        return collocation_angles(self.m)

    @property
    def r(self):
        """Radius samples r = 1 + f."""
        return 1.0 + self.values

    def check_graph(self):
        if np.min(self.r) <= 0.0:
            raise GraphViolation(f"graph condition violated: min r = {np.min(self.r):.3e}")

    def dtheta(self):
        """f'(theta) at the collocation nodes."""
        return values_from_coeffs(deriv_theta_coeffs(self.coeffs), self.m)

    def dtheta2(self):
        """f''(theta) at the collocation nodes."""
        return values_from_coeffs(deriv_theta_coeffs(deriv_theta_coeffs(self.coeffs)), self.m)

    def mode_amplitude(self, k):
        """Plain (non-normalized) amplitude of degree k: sqrt(a_k^2 + b_k^2)."""
        if k == 0:
            return abs(self.coeffs[0]) / np.sqrt(2.0 * np.pi)
        return float(np.hypot(self.coeffs[2 * k - 1], self.coeffs[2 * k])) / np.sqrt(np.pi)

    def with_values(self, values):
        return RadialGraph.from_values(values, self.kmax)


@dataclass(frozen=True)
class InterfaceGeometry:
    """Pointwise geometric data of the interface {a + r(theta) xi(theta)}.

    All fields are sampled at the M collocation angles.  ``normal`` is the
    outward unit normal (pointing from the inner phase into the outer one);
    with f = 0 it equals xi.  ``curvature_remainder`` is the quadratic
    remainder of the curvature around its linearization, computed as a
    residual rather than a symbolic expansion.
    """

    metric: np.ndarray            # |g| = sqrt(r^2 + |grad_g r|^2)
    curvature: np.ndarray         # kappa at the mapped points
    normal: np.ndarray            # (M, n) outward unit normal
    area_element: np.ndarray      # r^{n-2} |g|
    inner_volume: float           # |Omega^-| = int r^n / n dtheta
    curvature_remainder: np.ndarray  # N(f)
    graph: RadialGraph = field(repr=False)


def interface_geometry(f: RadialGraph, n=NDIM) -> InterfaceGeometry:
    """Metric factor, curvature, normal, area element and enclosed volume.

    Curvature uses the surface-divergence form
    kappa = (n-1)/|g| - (1/r) div_g(grad_g r / |g|), evaluated pseudo-
    spectrally (pointwise products at the collocation nodes, spectral
    angular derivatives).  The remainder N(f) is the computed residual
    kappa - (n-1) + (n-1) f + lap_g f.
    """
    f.check_graph()
    r = f.r
    fp = f.dtheta()
    gmet = np.hypot(r, fp)  # sqrt(r^2 + r'^2); grad_g r = f' on the circle

    # div_g(grad_g r/|g|) = d/dtheta (r'/|g|) on the circle, spectral derivative
    ratio = fp / gmet
    ratio_c = coeffs_from_values(ratio, (f.m - 1) // 2)  # keep full resolvable band
    div_term = values_from_coeffs(deriv_theta_coeffs(ratio_c), f.m)
    curvature = (n - 1.0) / gmet - div_term / r

    theta = f.theta
    xi = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    tau = np.stack([-np.sin(theta), np.cos(theta)], axis=-1)
    normal = (r[:, None] * xi - fp[:, None] * tau) / gmet[:, None]

    lap_f = values_from_coeffs(laplace_beltrami_coeffs(f.coeffs, n=n), f.m)
    remainder = curvature - (n - 1.0) + (n - 1.0) * f.values + lap_f

    return InterfaceGeometry(
        metric=gmet,
        curvature=curvature,
        normal=normal,
        area_element=r ** (n - 2) * gmet,
        inner_volume=float(circle_integral(r**n / n)),
        curvature_remainder=remainder,
        graph=f,
    )


def z_form(values_or_coeffs, kmax=None, n=NDIM):
    """Z(h) = int |grad_g h|^2 - (n-1) h^2 for a sampled or spectral field."""
    arr = np.asarray(values_or_coeffs, dtype=float)
    if kmax is not None:
        arr = coeffs_from_values(arr, kmax)
    return z_form_coeffs(arr, n=n)


def dirichlet_data(geom: InterfaceGeometry, n=NDIM):
    """Interface temperature kappa - (n-1) induced by the curvature condition."""
    return geom.curvature - (n - 1.0)
